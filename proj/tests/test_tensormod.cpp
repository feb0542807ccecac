#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyvf/errors.hpp"
#include "polyvf/tensormod.hpp"

using namespace polyvf;

namespace {

ModuleDescriptor desc(std::vector<Rat> l, std::vector<Rat> m) { return ModuleDescriptor(std::move(l), std::move(m)); }

}  // namespace

TEST_CASE("act_e examples") {
  auto t10 = desc({Rat(1)}, {Rat(0)});
  CHECK(act_e(1, ModuleElement::monomial(t10, {0})) == ModuleElement::monomial(t10, {1}, 2));
  auto t00 = desc({Rat(0)}, {Rat(0)});
  for (int k = 1; k <= 5; ++k) CHECK(act_e(k, ModuleElement::monomial(t00, {0})).is_zero());
  for (int n = 1; n <= 4; ++n) {
    auto d = desc({Rat(0), Rat(0)}, {Rat(n), Rat(n)});
    for (int k = 1; k <= 4; ++k) {
      ModuleElement expected(d);
      expected.add_term({k, 0}, n);
      expected.add_term({0, k}, n);
      CHECK(act_e(k, ModuleElement::monomial(d, {0, 0})) == expected);
    }
  }
  CHECK_THROWS_AS(act_e(0, ModuleElement::monomial(t00, {0})), std::invalid_argument);
}

TEST_CASE("act_e agrees with the factorwise Leibniz action and raises weight by k") {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + t % 3;
    ModuleDescriptor d;
    for (std::size_t i = 0; i < r; ++i) {
      d.lambda.push_back(oracle::random_rat(rng));
      d.mu.push_back(oracle::random_rat(rng));
    }
    auto mons = monomials_of_degree(r, t % 5);
    auto m = ModuleElement::monomial(d, mons.front(), oracle::random_rat(rng));
    for (int k = 1; k <= 4; ++k) {
      auto image = act_e(k, m);
      CHECK(image == oracle::leibniz_e(k, m));
      if (!image.is_zero()) CHECK(image.weight() == m.weight() + k);
    }
  }
}

TEST_CASE("act_word") {
  auto d = desc({Rat(0), Rat(1, 2)}, {Rat(3), Rat(-1)});
  auto z = ModuleElement::monomial(d, {1, 0});
  CHECK(act_word(PartitionVector{{0, 0}}, z) == z);
  CHECK(act_word(PartitionVector{{2, 0}}, z) == act_e(1, act_e(1, z)));
  CHECK(act_word(PartitionVector{{2, 0}}, z).weight() == 3);
  CHECK(act_word(PartitionVector{{1, 1}}, z) == act_e(1, act_e(2, z)));
  // r = 1, lambda = 0, mu = N: e_2 acts first, giving N z^2, then e_1 gives (N + 2) N z^3.
  for (int n = 1; n <= 5; ++n) {
    auto dn = desc({Rat(0)}, {Rat(n)});
    CHECK(act_word(PartitionVector{{1, 1}}, ModuleElement::monomial(dn, {0})) ==
          ModuleElement::monomial(dn, {3}, Rat(n * (n + 2))));
  }
}

TEST_CASE("module axiom on random parameters") {
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + t % 3;
    ModuleDescriptor d;
    for (std::size_t i = 0; i < r; ++i) {
      d.lambda.push_back(oracle::random_rat(rng));
      d.mu.push_back(oracle::random_rat(rng));
    }
    auto m = oracle::random_module_element(rng, d, 4, 3);
    for (int k = 1; k <= 6; ++k)
      for (int j = 1; j <= 6; ++j) CHECK(module_axiom_check(e(k), e(j), m));
    CHECK(module_axiom_check(e(1) + e(3, Rat(2)), e(2, Rat(-1, 2)), m));
  }
}

TEST_CASE("shifted submodule inclusion intertwines the action") {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 1 + t % 3;
    ModuleDescriptor d;
    Exponent shift;
    for (std::size_t i = 0; i < r; ++i) {
      d.lambda.push_back(oracle::random_rat(rng));
      d.mu.push_back(oracle::random_rat(rng));
      shift.push_back(static_cast<int>(rng() % 3));
    }
    auto sub = shift_submodule(d, shift);
    auto m = oracle::random_module_element(rng, sub, 3, 3);
    for (int k = 1; k <= 4; ++k) CHECK(include_shifted(act_e(k, m), d, shift) == act_e(k, include_shifted(m, d, shift)));
  }
  auto d = desc({Rat(1)}, {Rat(0)});
  CHECK(shift_submodule(d, {0}) == d);
  CHECK_THROWS_AS(shift_submodule(d, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(shift_submodule(d, {1, 1}), DimensionMismatch);
}

TEST_CASE("quotient by a unit shift has the dimensions of T^{r-1}") {
  for (std::size_t r = 1; r <= 4; ++r)
    for (int w = 0; w <= 8; ++w) CHECK(graded_dimension(r, w) - graded_dimension(r, w - 1) == graded_dimension(r - 1, w));
  auto d = desc({Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)});
  CHECK(remove_factor(d, 1) == desc({Rat(1), Rat(3)}, {Rat(4), Rat(6)}));
  CHECK(graded_dimension(3, 4) == 15);
}

TEST_CASE("weight support") {
  auto v = weight_support({1, 0}, 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == WeightVector{{1, 0}, 1});
  CHECK(v[1] == WeightVector{{0, 1}, 1});
  auto s2 = weight_support({2, 0}, 2);
  CHECK(s2 == std::vector<WeightVector>{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  std::size_t total = 0;
  for (const auto& w : weight_support({1, 1, 0}, 3)) total += w.multiplicity;
  CHECK(total == 3);
  CHECK_THROWS_AS(weight_support({0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(weight_support({1, 0}, 3), DimensionMismatch);
  auto adj = weight_support({1, 0, -1}, 3);
  std::size_t zero_mult = 0;
  for (const auto& w : adj)
    if (w.alpha == std::vector<int>{0, 0, 0}) zero_mult = w.multiplicity;
  CHECK(zero_mult == 2);
}

TEST_CASE("weight support matches the Weyl dimension formula") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b) {
      std::size_t total = 0;
      for (const auto& w : weight_support({a, b}, 2)) total += w.multiplicity;
      CHECK(Int(static_cast<unsigned long>(total)) == oracle::weyl_dimension({a, b}));
      for (int c = 0; c <= b; ++c) {
        std::size_t t3 = 0;
        for (const auto& w : weight_support({a, b, c}, 3)) t3 += w.multiplicity;
        CHECK(Int(static_cast<unsigned long>(t3)) == oracle::weyl_dimension({a, b, c}));
      }
    }
}

TEST_CASE("Gelfand-Tsetlin patterns interlace") {
  auto patterns = gelfand_tsetlin_patterns({2, 1, 0});
  CHECK(patterns.size() == 8);
  for (const auto& p : patterns)
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      for (std::size_t j = 0; j < p[k].size(); ++j) {
        CHECK(p[k + 1][j] >= p[k][j]);
        CHECK(p[k][j] >= p[k + 1][j + 1]);
      }
}

TEST_CASE("coinduced decomposition") {
  auto trivial = decompose_coinduced({0, 0, 0}, 3);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].first == desc({Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}));
  CHECK(trivial[0].second == 1);
  auto v = decompose_coinduced({1, 0}, 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0].first == desc({Rat(1), Rat(0)}, {Rat(0), Rat(0)}));
  CHECK(v[1].first == desc({Rat(0), Rat(1)}, {Rat(0), Rat(0)}));
  for (const auto& lambda : std::vector<std::vector<int>>{{2, 1}, {3, 0}, {1, 1, 0}, {2, 1, 0}, {3, 3, 1}}) {
    auto parts = decompose_coinduced(lambda, lambda.size());
    for (int w = 0; w <= 6; ++w) {
      Int sum = 0;
      for (const auto& [d, mult] : parts) sum += graded_dimension(d.rank(), w) * static_cast<unsigned long>(mult);
      CHECK(sum == graded_dimension(lambda.size(), w) * oracle::weyl_dimension(lambda));
    }
  }
}

TEST_CASE("coordinate action") {
  auto d = desc({Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)});
  auto z = ModuleElement::monomial(d, {1, 1});
  ModuleElement expected(d);
  expected.add_term({3, 1}, Rat(1 + 3));  // a_1 + mu_1 + 3 lambda_1
  CHECK(act_coordinate(VFBasis{{3, 0}, 0}, z) == expected);
  CHECK_THROWS_AS(act_coordinate(VFBasis{{1, 2}, 0}, z), std::invalid_argument);
}
