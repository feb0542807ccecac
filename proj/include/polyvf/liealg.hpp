#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "polyvf/exponent.hpp"
#include "polyvf/rational.hpp"

namespace polyvf {

/// Monomial vector field x^a d_i. `direction` is zero-based.
struct VFBasis {
  Exponent exponent;
  int direction = 0;

  std::size_t n() const { return exponent.size(); }
  /// Euler weight |a| - 1; e_k = z^{k+1} d has weight k.
  int weight() const { return total_degree(exponent) - 1; }
  std::string to_string() const;
};

/// Order (|a|, a, i); fixes wedge signs and matrix layouts downstream.
bool operator<(const VFBasis& u, const VFBasis& v);
bool operator==(const VFBasis& u, const VFBasis& v);

/// Sparse combination of monomial vector fields in a fixed number of variables.
class LieElement {
 public:
  using Terms = std::map<VFBasis, Rat>;

  LieElement() = default;
  explicit LieElement(std::size_t n) : n_(n) {}
  static LieElement basis(const VFBasis& b, const Rat& c = 1);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const VFBasis& b, const Rat& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rat& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rat& c, LieElement a) { return a *= c; }
  bool operator==(const LieElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// e_k = z^{k+1} d in one variable.
VFBasis e_basis(int k);
LieElement e(int k, const Rat& c = 1);

/// [x^a d_i, x^b d_j] = b_i x^{a+b-e_i} d_j - a_j x^{a+b-e_j} d_i.
LieElement bracket(const VFBasis& u, const VFBasis& v);
LieElement bracket(const LieElement& u, const LieElement& v);

enum class Flavor {
  Full,          ///< all of W_n^pol, weights >= -1
  Truncated,     ///< L_d(n): fields of weight >= d
  CoordinateSum  ///< L_1^{(x_1)} + ... + L_1^{(x_n)}: x_m^{k+1} d_m with k >= 1
};

struct AlgebraDescriptor {
  std::size_t n = 1;
  int d = 1;
  Flavor flavor = Flavor::Truncated;

  static AlgebraDescriptor full(std::size_t n) { return {n, -1, Flavor::Full}; }
  static AlgebraDescriptor truncated(std::size_t n, int d) { return {n, d, Flavor::Truncated}; }
  static AlgebraDescriptor coordinate_sum(std::size_t n) { return {n, 1, Flavor::CoordinateSum}; }
  /// Parses "W:n", "L<d>:n" or "D:n" (coordinate sum).
  static AlgebraDescriptor parse(const std::string& text);

  bool contains(const VFBasis& b) const;
  /// Smallest weight carried by a basis element.
  int min_weight() const;
  std::string to_string() const;
};

/// All basis vectors of weight w, in basis order.
std::vector<VFBasis> basis_of_weight(const AlgebraDescriptor& alg, int w);

/// iota_d(e_k) = e_{dk} / d, a Lie-algebra embedding L_1 -> L_d.
LieElement iota(int k, int d);

/// Memoized basis brackets. Safe for concurrent lookup and insertion.
class BracketTable {
 public:
  const LieElement& operator()(const VFBasis& u, const VFBasis& v);

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<VFBasis, VFBasis>, LieElement> cache_;
};

}  // namespace polyvf
