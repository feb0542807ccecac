#include "polyvf/exponent.hpp"

#include <algorithm>
#include <numeric>

namespace polyvf {

int total_degree(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

bool DegLexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

int WeightedDegLexLess::degree(const Exponent& a) const {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += weights[i] * a[i];
  return d;
}

bool WeightedDegLexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Exponent unit(std::size_t n, std::size_t i, int scale) {
  Exponent e(n, 0);
  e[i] = scale;
  return e;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

void compose(std::span<const int> weights, std::size_t i, int remaining, Exponent& cur,
             std::vector<Exponent>& out, std::span<const int> caps) {
  if (i == cur.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int max_here = remaining / weights[i];
  if (!caps.empty()) max_here = std::min(max_here, caps[i]);
  for (int x = 0; x <= max_here; ++x) {
    cur[i] = x;
    compose(weights, i + 1, remaining - x * weights[i], cur, out, caps);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> ones(n, 1);
  Exponent cur(n, 0);
  compose(ones, 0, d, cur, out, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> weighted_compositions(std::span<const int> weights, int total) {
  std::vector<Exponent> out;
  if (total < 0) return out;
  Exponent cur(weights.size(), 0);
  compose(weights, 0, total, cur, out, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> staircase_exponents(std::size_t n, int total) {
  std::vector<Exponent> out;
  if (total < 0) return out;
  std::vector<int> ones(n, 1), caps(n);
  std::iota(caps.begin(), caps.end(), 0);
  Exponent cur(n, 0);
  compose(ones, 0, total, cur, out, caps);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_in_box(const Exponent& bound, const std::function<void(const Exponent&)>& visit) {
  Exponent cur(bound.size(), 0);
  while (true) {
    visit(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == cur.size()) return;
    ++cur[i];
  }
}

}  // namespace polyvf
