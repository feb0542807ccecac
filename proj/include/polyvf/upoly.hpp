#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyvf/mpoly.hpp"
#include "polyvf/rational.hpp"

namespace polyvf {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 upward.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coefficients);
  static UPoly constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }
  static UPoly x_power(int k, const Rat& c = 1);

  const std::vector<Rat>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
  Rat leading_coefficient() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat evaluate(const Rat& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Polynomial long division; returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly monic() const;

  MPoly to_mpoly(const std::string& var) const;
  static UPoly from_mpoly(const MPoly& p);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace polyvf
