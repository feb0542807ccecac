#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "polyvf/mpoly.hpp"
#include "polyvf/pbw_hilbert.hpp"

namespace polyvf {

/// Graded subspace of k[x_1..x_n], stored as a basis per weight up to a cutoff.
struct TSpace {
  std::size_t n = 0;
  int cutoff = 0;
  std::map<int, std::vector<MPoly>> graded_basis;

  std::size_t dim(int w) const;
  /// dim S_w for w = 0..cutoff.
  std::vector<std::size_t> dims() const;
  /// True when the homogeneous polynomial f lies in the span of its weight's basis.
  bool contains_homogeneous(const MPoly& f) const;
};

/// f(p(x_1), ..., p(x_n)) for a one-variable polynomial p with p(0) = 0.
MPoly substitute(const MPoly& f, const MPoly& p);

/// Homogeneous components recovered from substitute(f, lambda_i t):
/// components[j] = sum_i weights[j][i] * substitute(f, lambda_i t).
struct HomogeneousSplit {
  std::vector<int> degrees;
  std::vector<Rat> lambdas;
  std::vector<std::vector<Rat>> weights;  ///< inverse Vandermonde rows
  std::vector<MPoly> components;
};

/// Splits f into the components of the listed degrees using lambda_i = 1..k unless given.
/// Throws std::invalid_argument when the lambdas repeat or f has other degrees.
HomogeneousSplit homogeneous_split(const MPoly& f, const std::vector<int>& degrees,
                                   std::vector<Rat> lambdas = {});

/// sum_i p(x_i) df/dx_i for a one-variable p with p(0) = 0.
MPoly infinitesimal_act(const MPoly& p, const MPoly& f);

/// t^{k+1} as a one-variable polynomial in t.
MPoly t_power(int k);

/// Span of the homogeneous components of the generators, saturated weight by weight under
/// the fields sum_i x_i^{k+1} d_i, k >= 1.
TSpace closure_basis(const std::vector<MPoly>& generators, int cutoff);

/// Truncated dimension series and, when it fits inside the window, N(t) / prod_{i<=m}(1 - t^i).
struct TSpaceSeries {
  std::vector<std::size_t> dims;
  std::optional<RationalSeries> fit;
  int denominator_order = 0;     ///< m
  int numerator_degree = -1;     ///< degree of N before reduction
  int verified_window = 0;       ///< trailing coefficients of dims * prod(1 - t^i) that vanish
};

/// Fits with m = max(n, 1) unless given. A fit is reported only when at least m coefficients past
/// the numerator degree vanish.
TSpaceSeries tspace_series(const TSpace& ts, int m = 0);

/// Every component of weight <= cutoff of substitute(f, p), f in the basis, lies in the space.
bool substitution_closed(const TSpace& ts, const MPoly& p);

}  // namespace polyvf
