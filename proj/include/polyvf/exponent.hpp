#pragma once

#include <functional>
#include <span>
#include <vector>

namespace polyvf {

/// Exponent vector of a monomial; also used for PBW words and module basis labels.
using Exponent = std::vector<int>;

int total_degree(std::span<const int> a);

/// Degree-lexicographic order: total degree first, then lexicographic.
struct DegLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Degree with per-variable weights, then lexicographic. Used for the g_i grading.
struct WeightedDegLexLess {
  std::vector<int> weights;
  int degree(const Exponent& a) const;
  bool operator()(const Exponent& a, const Exponent& b) const;
};

Exponent add(const Exponent& a, const Exponent& b);
Exponent unit(std::size_t n, std::size_t i, int scale = 1);
bool divides(const Exponent& a, const Exponent& b);

/// All exponent vectors in n variables of total degree d, in deg-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

/// All b in N^n with sum_i weights[i] * b[i] == total, lexicographically sorted.
std::vector<Exponent> weighted_compositions(std::span<const int> weights, int total);

/// All a in N^n with 0 <= a[i] <= i (i zero-based) and |a| == total.
std::vector<Exponent> staircase_exponents(std::size_t n, int total);

/// Visits every b with 0 <= b[i] <= bound[i].
void for_each_in_box(const Exponent& bound, const std::function<void(const Exponent&)>& visit);

}  // namespace polyvf
