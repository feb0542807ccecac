#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyvf/errors.hpp"
#include "polyvf/spanning.hpp"

using namespace polyvf;

namespace {

ModuleDescriptor desc(std::vector<Rat> l, std::vector<Rat> m) { return ModuleDescriptor(std::move(l), std::move(m)); }

ModuleDescriptor random_desc(std::mt19937& rng, std::size_t r) {
  ModuleDescriptor d;
  for (std::size_t i = 0; i < r; ++i) {
    d.lambda.push_back(oracle::random_rat(rng));
    d.mu.push_back(oracle::random_rat(rng));
  }
  return d;
}

// Partitions of total weight w into parts 1..r as multiplicity vectors.
void partitions(std::size_t r, int w, std::size_t part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (part == r) {
    if (w == 0) out.push_back(cur);
    return;
  }
  const int size = static_cast<int>(part) + 1;
  for (int m = 0; m * size <= w; ++m) {
    cur[part] = m;
    partitions(r, w - m * size, part + 1, cur, out);
  }
  cur[part] = 0;
}

MPoly power_sum(const std::vector<std::string>& vars, int k) {
  MPoly p(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) p.add_term(unit(vars.size(), i, k), 1);
  return p;
}

// det(A) / det(T) on the degree-r slice, built from scratch: columns are indexed by
// (rho, a) with a_i < i (one-based) and |rho| + |a| = r; A applies e_r^{rho_r} first,
// T multiplies by the power sums. The ratio does not depend on how rows or columns are ordered.
Rat phi_oracle(const ModuleDescriptor& d) {
  const std::size_t r = d.rank();
  auto vars = default_variables(r, "z");
  auto rows = monomials_of_degree(r, static_cast<int>(r));
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  std::vector<std::vector<Rat>> a(rows.size(), std::vector<Rat>()), t(rows.size(), std::vector<Rat>());
  for (int aw = 0; aw <= static_cast<int>(r); ++aw) {
    std::vector<std::vector<int>> rhos;
    std::vector<int> cur(r, 0);
    partitions(r, static_cast<int>(r) - aw, 0, cur, rhos);
    for (const auto& stair : staircase_exponents(r, aw)) {
      // staircase_exponents allows a_i <= i (zero-based), i.e. a_i < i one-based.
      for (const auto& rho : rhos) {
        ModuleElement m = ModuleElement::monomial(d, stair);
        for (std::size_t i = r; i-- > 0;)
          for (int k = 0; k < rho[i]; ++k) m = act_e(static_cast<int>(i + 1), m);
        MPoly p = MPoly::monomial(vars, stair, 1);
        for (std::size_t i = 0; i < r; ++i) p = p * power_sum(vars, static_cast<int>(i + 1)).pow(rho[i]);
        for (auto& row : a) row.emplace_back(0);
        for (auto& row : t) row.emplace_back(0);
        for (const auto& [e, c] : m.terms()) a[index.at(e)].back() = c;
        for (const auto& [e, c] : p.terms()) t[index.at(e)].back() = c;
      }
    }
  }
  REQUIRE(a[0].size() == rows.size());
  return oracle::leibniz_det(a, Rat(0), Rat(1)) / oracle::leibniz_det(t, Rat(0), Rat(1));
}

}  // namespace

TEST_CASE("Newton column count identity") {
  for (std::size_t r = 1; r <= 6; ++r)
    CHECK(newton_columns(r).size() == monomials_of_degree(r, static_cast<int>(r)).size());
}

TEST_CASE("Newton matrix examples") {
  auto m1 = newton_matrix(desc({Rat(1, 3)}, {Rat(2)}));
  CHECK(m1.rows() == 1);
  CHECK(m1.get(0, 0) == Rat(2) + Rat(2, 3));
  CHECK(newton_matrix(desc({Rat(0)}, {Rat(0)})).is_zero());
  for (int n = 1; n <= 3; ++n) {
    auto m = newton_matrix(desc({Rat(0), Rat(0)}, {Rat(n), Rat(n)}));
    CHECK(m.rows() == 3);
    CHECK(rank(m) == 3);
  }
  CHECK(rank(newton_matrix(desc({Rat(0), Rat(0)}, {Rat(0), Rat(0)}))) < 3);
  CHECK(determinant(newton_transition_matrix(2)) != 0);
}

TEST_CASE("phi_1 is N + mu + 2 lambda") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    auto d = random_desc(rng, 1);
    CHECK(phi(d) == UPoly(std::vector<Rat>{d.mu[0] + 2 * d.lambda[0], Rat(1)}));
  }
  CHECK(phi(desc({Rat(0)}, {Rat(0)})).to_string("N") == "N");
}

TEST_CASE("phi matches the independent determinant ratio") {
  std::mt19937 rng(37);
  for (std::size_t r = 2; r <= 3; ++r)
    for (int t = 0; t < 3; ++t) {
      auto d = t == 0 ? desc(std::vector<Rat>(r, Rat(0)), std::vector<Rat>(r, Rat(0))) : random_desc(rng, r);
      UPoly p = phi(d);
      CHECK(p.degree() == phi_degree(r));
      CHECK(p.leading_coefficient() == 1);
      for (int n = 0; n <= 2; ++n) {
        auto shifted = d;
        for (auto& m : shifted.mu) m += n;
        CHECK(p.evaluate(Rat(n)) == phi_oracle(shifted));
      }
    }
}

TEST_CASE("phi for r = 2 at the trivial module is nonzero for N >= 1") {
  UPoly p = phi(desc({Rat(0), Rat(0)}, {Rat(0), Rat(0)}));
  CHECK(p.degree() > 0);
  for (int n = 1; n <= 20; ++n) CHECK(p.evaluate(Rat(n)) != 0);
  CHECK_THROWS_AS(phi(desc({Rat(0), Rat(0)}, {Rat(0), Rat(0)}), 1), ResourceError);
}

TEST_CASE("phi leading coefficient for random rational parameters") {
  std::mt19937 rng(41);
  for (std::size_t r = 1; r <= 3; ++r)
    for (int t = 0; t < 4; ++t) CHECK(abs(phi(random_desc(rng, r)).leading_coefficient()) == 1);
}

TEST_CASE("graded basis verification") {
  CHECK(verify_graded_basis(desc({Rat(0)}, {Rat(0)}), {1}, 6));
  auto fail = check_graded_basis(desc({Rat(0)}, {Rat(0)}), {0}, 6);
  CHECK_FALSE(fail.verified);
  CHECK(fail.first_failure() == 1);
  auto ok = check_graded_basis(desc({Rat(0), Rat(0)}, {Rat(0), Rat(0)}), {1, 1}, 8);
  CHECK(ok.verified);
  CHECK(ok.first_failure() == -1);
  for (const auto& w : ok.weights) CHECK(Int(static_cast<unsigned long>(w.rank)) == w.expected);
}

TEST_CASE("at lambda = 0 the words act by vector fields plus power sums") {
  // e_k acts on T^r_{0, N} as sum_i z_i^{k+1} d_i + N p_k, the highest letter first.
  const std::size_t r = 3;
  auto vars = default_variables(r, "z");
  for (int n = 1; n <= 2; ++n) {
    auto d = desc(std::vector<Rat>(r, Rat(0)), std::vector<Rat>(r, Rat(n)));
    auto op = [&](int k, const MPoly& f) {
      MPoly out = f * power_sum(vars, k) * Rat(n);
      for (std::size_t i = 0; i < r; ++i) out += MPoly::monomial(vars, unit(r, i, k + 1), 1) * f.derivative(i);
      return out;
    };
    for (const auto& b : weighted_compositions(std::vector<int>{1, 2, 3}, 4))
      for (const auto& a : staircase_exponents(r, 1)) {
        auto word = act_word(PartitionVector{b}, ModuleElement::monomial(d, a));
        MPoly expected = MPoly::monomial(vars, a, 1);
        for (std::size_t i = r; i-- > 0;)
          for (int t = 0; t < b[i]; ++t) expected = op(static_cast<int>(i + 1), expected);
        MPoly got(vars);
        for (const auto& [e, c] : word.terms()) got.add_term(e, c);
        CHECK(got == expected);
      }
  }
}

TEST_CASE("shift search") {
  CHECK(find_good_shift(desc({Rat(0)}, {Rat(0)}), 5).shift == Exponent{1});
  CHECK(find_good_shift(desc({Rat(1)}, {Rat(0)}), 5).shift == Exponent{0});
  auto r2 = find_good_shift(desc({Rat(0), Rat(0)}, {Rat(0), Rat(0)}), 5);
  CHECK(r2.certificate.verified);
  for (int x : r2.shift) CHECK(x <= 3);
  // With mu + N in [-6, -4] some e_1 coefficient vanishes below the cutoff.
  CHECK_THROWS_AS(find_good_shift(desc({Rat(0)}, {Rat(-6)}), 2), SearchFailure);
}

TEST_CASE("spanning generators") {
  auto s0 = spanning_generators(ModuleDescriptor{});
  REQUIRE(s0.size() == 1);
  CHECK(s0.exponents[0].empty());
  auto s1 = spanning_generators(desc({Rat(0)}, {Rat(0)}));
  CHECK(s1.exponents == std::vector<Exponent>{{0}, {1}});
  std::mt19937 rng(43);
  for (std::size_t r = 1; r <= 2; ++r)
    for (int t = 0; t < 3; ++t) {
      auto d = random_desc(rng, r);
      auto s = spanning_generators(d, 8);
      CHECK(verify_spanning(s, d, 8));
      CHECK(check_layered_basis(s, d, 8).verified);
    }
}

TEST_CASE("verify_spanning negative cases") {
  auto d1 = desc({Rat(0)}, {Rat(0)});
  auto empty = check_spanning(GeneratorSet{}, d1, 4);
  CHECK_FALSE(empty.verified);
  CHECK(empty.first_failure() == 0);
  CHECK_FALSE(verify_spanning(GeneratorSet::full_rank({{0, 0}}, 2), desc({Rat(0), Rat(0)}, {Rat(0), Rat(0)}), 4));
  CHECK_THROWS_AS(GeneratorSet::full_rank({{0}}, 2), DimensionMismatch);
}

TEST_CASE("residue summands") {
  auto d = desc({Rat(0)}, {Rat(0)});
  CHECK(residue_descriptor(d, 2, {0}) == desc({Rat(0)}, {Rat(0)}));
  CHECK(residue_descriptor(d, 2, {1}) == desc({Rat(0)}, {Rat(1, 2)}));
  // z^{s + d j} -> y^j intertwines e_{kd} / d with e_k on the residue module.
  std::mt19937 rng(47);
  for (int t = 0; t < 20; ++t) {
    auto dd = random_desc(rng, 1);
    int dval = 2 + t % 3;
    int s = t % dval;
    auto res = residue_descriptor(dd, dval, {s});
    for (int j = 0; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        auto big = act_e(k * dval, ModuleElement::monomial(dd, {s + dval * j}));
        auto small = act_e(k, ModuleElement::monomial(res, {j}));
        Rat big_c = big.terms().empty() ? Rat(0) : big.terms().begin()->second;
        Rat small_c = small.terms().empty() ? Rat(0) : small.terms().begin()->second;
        CHECK(big_c / dval == small_c);
        if (!big.is_zero()) CHECK(big.terms().begin()->first == Exponent{s + dval * (j + k)});
      }
  }
  CHECK_THROWS_AS(residue_descriptor(d, 2, {2}), std::invalid_argument);
}

TEST_CASE("spanning by e_d, e_2d, ...") {
  auto d = desc({Rat(0)}, {Rat(0)});
  auto s1 = spanning_generators(d, 8);
  CHECK(span_under_L_d(s1, d, 1, 8) == verify_spanning(s1, d, 8));
  auto s2 = spanning_generators_L_d(d, 2, 8);
  CHECK(span_under_L_d(s2, d, 2, 8));
  CHECK_FALSE(span_under_L_d(s1, d, 2, 8));
  auto d2 = desc({Rat(1, 2), Rat(-1)}, {Rat(1, 3), Rat(2)});
  CHECK(span_under_L_d(spanning_generators_L_d(d2, 2, 8), d2, 2, 8));
}
