#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyvf/liealg.hpp"
#include "polyvf/linalg.hpp"
#include "polyvf/tensormod.hpp"

namespace polyvf {

/// Coefficient module of the chain complex: the trivial module k or a tensor product T^r.
/// T^r is acted on diagonally by e_k (one-variable algebras) or factorwise by the
/// coordinate-sum algebra with r = n.
struct Coefficients {
  enum class Kind { Trivial, Tensor };
  Kind kind = Kind::Trivial;
  ModuleDescriptor module;

  static Coefficients trivial() { return {}; }
  static Coefficients tensor(ModuleDescriptor desc) { return {Kind::Tensor, std::move(desc)}; }
  /// "trivial" or "T:<lambda list>;<mu list>", e.g. "T:1;0".
  static Coefficients parse(const std::string& text);
  std::string to_string() const;
};

/// x_1 ^ ... ^ x_p (x) z^a with x_1 < ... < x_p in basis order.
struct ChainBasisElement {
  std::vector<VFBasis> wedge;
  Exponent module_exponent;

  int weight() const;
  bool operator<(const ChainBasisElement& o) const;
  bool operator==(const ChainBasisElement& o) const;
};

/// Basis of C_p(g; M) in weight w, ordered. Throws ResourceError once more than `limit`
/// elements are found.
std::vector<ChainBasisElement> chain_basis(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w,
                                           std::size_t limit = 20000);

/// Matrix of d_p: C_p(w) -> C_{p-1}(w) in the chain bases (rows: degree p-1).
SparseMat ce_boundary(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w,
                      std::size_t limit = 20000);

/// Everything computed for one (p, w).
struct WeightSlice {
  int p = 0;
  int w = 0;
  std::size_t chain_dim = 0;
  std::size_t rank_d_p = 0;    ///< rank of d_p leaving degree p
  std::size_t rank_d_next = 0; ///< rank of d_{p+1} entering degree p
  bool d_squared_zero = true;  ///< d_p d_{p+1} == 0
  std::size_t homology() const { return chain_dim - rank_d_p - rank_d_next; }
};

WeightSlice compute_slice(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w,
                          std::size_t limit = 20000);

/// dim H_p(g; M) in weight w.
std::size_t homology_dim(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w,
                         std::size_t limit = 20000);

struct HomologyOptions {
  std::size_t max_slice_dim = 20000;
  unsigned jobs = 1;
  /// For algebras of positive weight, also computes every degree with nonzero chains per
  /// weight and checks the Euler characteristic.
  bool euler = true;
};

struct HomologyTable {
  AlgebraDescriptor algebra;
  Coefficients coefficients;
  int p_max = 0;
  int w_min = 0;
  int w_max = 0;
  std::map<std::pair<int, int>, WeightSlice> slices;  ///< keyed by (p, w), p <= p_max
  bool d_squared_zero = true;
  /// Per weight: (sum (-1)^p dim C_p, sum (-1)^p dim H_p) over all degrees with nonzero chains.
  std::map<int, std::pair<long, long>> euler;
  bool euler_ok = true;

  std::size_t dim(int p, int w) const;
  /// Rows p = 0..p_max, columns w = w_min..w_max, with a header row.
  std::string to_csv() const;
};

/// Largest p with C_p(w) possibly nonzero.
int max_chain_degree(const AlgebraDescriptor& alg, const Coefficients& coeffs, int w);

/// Exact homology on the window p <= p_max, w_min(alg) <= w <= w_max. Slices are
/// independent and run on `jobs` threads. Throws ResourceError naming the first slice
/// whose chain dimension exceeds the limit.
HomologyTable homology_table(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p_max, int w_max,
                             const HomologyOptions& options = {});

}  // namespace polyvf
