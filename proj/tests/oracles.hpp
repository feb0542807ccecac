#pragma once

// Independent reference computations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "polyvf/exponent.hpp"
#include "polyvf/liealg.hpp"
#include "polyvf/mpoly.hpp"
#include "polyvf/rational.hpp"
#include "polyvf/tensormod.hpp"

namespace oracle {

using polyvf::Int;
using polyvf::MPoly;
using polyvf::Rat;

inline int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

/// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& a, const T& zero, const T& one) {
  const std::size_t n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    if (permutation_sign(perm) > 0)
      total = total + term;
    else
      total = total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Dense Gaussian elimination over Q.
inline std::size_t dense_rank(std::vector<std::vector<Rat>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Weyl dimension formula for gl_n: prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline Int weyl_dimension(const std::vector<int>& lambda) {
  Rat d = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
    {
      Rat f(lambda[i] - lambda[j] + static_cast<int>(j - i), static_cast<int>(j - i));
      f.canonicalize();
      d *= f;
    }
  return d.get_num();
}

/// Vector field as a derivation of k[x_1..x_n]: X(f) = sum_i f_i dX/dx_i.
inline MPoly apply_field(const polyvf::LieElement& u, const MPoly& f) {
  MPoly out(f.variables());
  for (const auto& [b, c] : u.terms())
    out += MPoly::monomial(f.variables(), b.exponent, c) * f.derivative(static_cast<std::size_t>(b.direction));
  return out;
}

/// Commutator of derivations recovered from their action on the coordinates x_j: the
/// field sum_j [X,Y](x_j) d_j.
inline polyvf::LieElement commutator_by_action(const polyvf::LieElement& u, const polyvf::LieElement& v) {
  const std::size_t n = u.n();
  auto vars = polyvf::default_variables(n);
  polyvf::LieElement out(n);
  for (std::size_t j = 0; j < n; ++j) {
    MPoly xj = MPoly::variable(vars, j);
    MPoly comp = apply_field(u, apply_field(v, xj)) - apply_field(v, apply_field(u, xj));
    for (const auto& [e, c] : comp.terms()) out.add_term(polyvf::VFBasis{e, static_cast<int>(j)}, c);
  }
  return out;
}

inline Rat random_rat(std::mt19937& rng, int span = 5, int den = 4) {
  std::uniform_int_distribution<int> num(-span * den, span * den), d(1, den);
  Rat q(num(rng), d(rng));
  q.canonicalize();
  return q;
}

/// Number of partitions of w into exactly p distinct parts, each >= lo.
inline long distinct_partitions(int w, int p, int lo) {
  if (p == 0) return w == 0 ? 1 : 0;
  long total = 0;
  for (int first = lo; first * p <= w; ++first) total += distinct_partitions(w - first, p - 1, first + 1);
  return total;
}

inline std::vector<polyvf::VFBasis> w_basis_up_to(std::size_t n, int wmax) {
  std::vector<polyvf::VFBasis> out;
  for (int w = -1; w <= wmax; ++w) {
    auto layer = polyvf::basis_of_weight(polyvf::AlgebraDescriptor::full(n), w);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline polyvf::LieElement random_field(std::mt19937& rng, std::size_t n, int wmax, int terms) {
  auto basis = w_basis_up_to(n, wmax);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  polyvf::LieElement u(n);
  for (int t = 0; t < terms; ++t) u.add_term(basis[pick(rng)], random_rat(rng));
  return u;
}

inline polyvf::ModuleDescriptor random_descriptor(std::mt19937& rng, std::size_t r) {
  std::vector<Rat> lambda, mu;
  for (std::size_t i = 0; i < r; ++i) {
    lambda.push_back(random_rat(rng));
    mu.push_back(random_rat(rng));
  }
  return polyvf::ModuleDescriptor(std::move(lambda), std::move(mu));
}

inline polyvf::ModuleElement random_module_element(std::mt19937& rng, const polyvf::ModuleDescriptor& d,
                                                   int max_weight, int terms) {
  std::uniform_int_distribution<int> wdist(0, max_weight);
  polyvf::ModuleElement m(d);
  for (int t = 0; t < terms; ++t) {
    auto mons = polyvf::monomials_of_degree(d.rank(), wdist(rng));
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    m.add_term(mons[pick(rng)], random_rat(rng));
  }
  return m;
}

/// Factorwise action written out directly: e_k acts on factor i by
/// z_i^{a_i} -> (a_i + mu_i + (k+1) lambda_i) z_i^{a_i + k}, and on the tensor product by Leibniz.
inline polyvf::ModuleElement leibniz_e(int k, const polyvf::ModuleElement& m) {
  const auto& d = m.descriptor();
  polyvf::ModuleElement out(d);
  for (const auto& [a, c] : m.terms())
    for (std::size_t i = 0; i < d.rank(); ++i) {
      polyvf::Exponent b = a;
      b[i] += k;
      out.add_term(b, c * (Rat(a[i]) + d.mu[i] + Rat(k + 1) * d.lambda[i]));
    }
  return out;
}

inline MPoly random_poly(std::mt19937& rng, std::size_t n, int max_degree, int terms) {
  auto vars = polyvf::default_variables(n);
  MPoly f(vars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  while (f.is_zero())
    for (int t = 0; t < terms; ++t) {
      auto mons = polyvf::monomials_of_degree(n, deg(rng));
      f.add_term(mons[rng() % mons.size()], random_rat(rng));
    }
  return f;
}

inline polyvf::ModuleElement as_module_element(const MPoly& f, const polyvf::ModuleDescriptor& d) {
  polyvf::ModuleElement m(d);
  for (const auto& [e, c] : f.terms()) m.add_term(e, c);
  return m;
}

/// Graded dimensions of the L_1-submodule of T_0^{(x)n} generated by the homogeneous
/// components of the generators, saturated by repeated application of act_e.
inline std::vector<std::size_t> module_route_dims(const std::vector<MPoly>& gens, std::size_t n, int cutoff) {
  polyvf::ModuleDescriptor d(std::vector<Rat>(n, Rat(0)), std::vector<Rat>(n, Rat(0)));
  std::vector<std::vector<polyvf::ModuleElement>> spans(static_cast<std::size_t>(cutoff + 1));
  for (const auto& g : gens)
    for (int w : g.degrees())
      if (w <= cutoff) spans[static_cast<std::size_t>(w)].push_back(as_module_element(g.homogeneous_component(w), d));
  std::vector<std::size_t> dims;
  for (int w = 0; w <= cutoff; ++w) {
    auto mons = polyvf::monomials_of_degree(n, w);
    for (int k = 1; k <= w; ++k)
      for (const auto& m : spans[static_cast<std::size_t>(w - k)]) spans[static_cast<std::size_t>(w)].push_back(polyvf::act_e(k, m));
    std::vector<std::vector<Rat>> rows;
    for (const auto& m : spans[static_cast<std::size_t>(w)]) {
      std::vector<Rat> row(mons.size(), Rat(0));
      for (const auto& [e, c] : m.terms())
        row[static_cast<std::size_t>(std::find(mons.begin(), mons.end(), e) - mons.begin())] = c;
      rows.push_back(row);
    }
    dims.push_back(rows.empty() ? 0 : dense_rank(rows));
  }
  return dims;
}

}  // namespace oracle
