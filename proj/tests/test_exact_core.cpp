#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyvf/errors.hpp"
#include "polyvf/linalg.hpp"
#include "polyvf/mpoly.hpp"
#include "polyvf/rational.hpp"
#include "polyvf/upoly.hpp"

using namespace polyvf;

namespace {

SparseMat random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(-3, 3);
  SparseMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m.set(r, c, Rat(val(rng)));
  return m;
}

std::vector<std::vector<Rat>> dense(const SparseMat& m) {
  std::vector<std::vector<Rat>> out(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
  for (const auto& [k, v] : m.entries()) out[k.first][k.second] = v;
  return out;
}

}  // namespace

TEST_CASE("rationals parse exactly and stay reduced") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("6/4").get_den() == 2);
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(to_string(parse_rat("-2/6")) == "-1/3");
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK(parse_rat_list("0,1/2,-3") == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(-3)});
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(5) == 120);
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMat::identity(2)) == 2);
  CHECK(rank(SparseMat(3, 3)) == 0);
  CHECK(rank(SparseMat::from_dense({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(SparseMat::identity(2)).empty());
  CHECK(kernel_basis(SparseMat(1, 3)).size() == 3);
  auto k = kernel_basis(SparseMat::from_dense({{Rat(1), Rat(1)}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("rank agrees with transpose, dense elimination, and kernel size") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 40);
    auto m = random_sparse(rng, dim(rng), dim(rng), trial % 2 ? 0.1 : 0.4);
    const auto r = rank(m);
    CHECK(r == rank(m.transpose()));
    CHECK(r == oracle::dense_rank(dense(m)));
    auto kernel = kernel_basis(m);
    CHECK(r + kernel.size() == m.cols());
    for (const auto& v : kernel)
      for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("determinant matches the permutation expansion") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto m = random_sparse(rng, n, n, 0.7);
    CHECK(determinant(m) == oracle::leibniz_det(dense(m), Rat(0), Rat(1)));
  }
  CHECK_THROWS_AS(determinant(SparseMat(2, 3)), DimensionMismatch);
}

TEST_CASE("echelon membership") {
  Echelon e(3);
  CHECK(e.insert({{0, Rat(1)}, {1, Rat(2)}}));
  CHECK_FALSE(e.insert({{0, Rat(2)}, {1, Rat(4)}}));
  CHECK(e.contains({{0, Rat(-1, 2)}, {1, Rat(-1)}}));
  CHECK_FALSE(e.contains({{2, Rat(1)}}));
  CHECK(e.rank() == 1);
}

TEST_CASE("multivariate polynomials") {
  auto v = default_variables(2);
  MPoly x = MPoly::variable(v, 0), y = MPoly::variable(v, 1);
  MPoly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.total_degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.derivative(0) == x * Rat(2));
  CHECK((x + x * y).degrees() == std::vector<int>{1, 2});
  CHECK((x + x * y).homogeneous_component(2) == x * y);
  auto q = divide_exact(f, x + y);
  REQUIRE(q);
  CHECK(*q == x - y);
  CHECK_FALSE(divide_exact(f, x * x + MPoly::constant(x.variables(), 1)).has_value());
  CHECK(f.substitute(1, x).is_zero());
  std::vector<Rat> pt{Rat(3), Rat(1, 2)};
  CHECK(f.evaluate(pt) == Rat(35, 4));
  CHECK(MPoly::variable({"N"}, 0).to_string() == "N");
  CHECK_THROWS(x + MPoly::variable({"z"}, 0));
}

TEST_CASE("univariate polynomials") {
  UPoly p(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
  UPoly q(std::vector<Rat>{Rat(-1), Rat(1)});          // t - 1
  auto [quo, rem] = p.divmod(q);
  CHECK(rem.is_zero());
  CHECK(quo == UPoly(std::vector<Rat>{Rat(1), Rat(1)}));
  CHECK(gcd(p, q * q) == q);
  auto fit = interpolate({Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(2), Rat(5)});
  CHECK(fit == UPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}));
}

TEST_CASE("symbolic determinant") {
  auto v = std::vector<std::string>{"N", "mu", "lambda"};
  MPoly N = MPoly::variable(v, 0), mu = MPoly::variable(v, 1), la = MPoly::variable(v, 2);
  MPoly zero(v);

  PolyMatrix one(1, 1, zero);
  one.at(0, 0) = N + mu + la * Rat(2);
  CHECK(det_symbolic(one) == N + mu + la * Rat(2));

  PolyMatrix diag(2, 2, zero);
  diag.at(0, 0) = N;
  diag.at(1, 1) = mu;
  CHECK(det_symbolic(diag) == N * mu);

  CHECK_THROWS_AS(det_symbolic(PolyMatrix(2, 3, zero)), DimensionMismatch);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-2, 2);
  auto random_matrix = [&] {
    PolyMatrix m(3, 3, zero);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = N * Rat(c(rng)) + mu * Rat(c(rng)) + MPoly::constant(v, c(rng));
    return m;
  };
  auto to_rows = [](const PolyMatrix& m) {
    std::vector<std::vector<MPoly>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    return rows;
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_matrix(), b = random_matrix();
    CHECK(det_symbolic(a * b) == det_symbolic(a) * det_symbolic(b));
    CHECK(det_symbolic(a) == oracle::leibniz_det(to_rows(a), zero, MPoly::constant(v, 1)));
  }
}
