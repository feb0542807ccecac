#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyvf/exponent.hpp"
#include "polyvf/rational.hpp"

namespace polyvf {

/// Sparse multivariate polynomial over Q. No zero coefficients are stored.
class MPoly {
 public:
  using Terms = std::map<Exponent, Rat, DegLexLess>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> variables);

  static MPoly constant(std::vector<std::string> variables, const Rat& c);
  static MPoly variable(std::vector<std::string> variables, std::size_t index);
  static MPoly monomial(std::vector<std::string> variables, Exponent exponent, const Rat& c);

  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Rat& c);
  Rat coefficient(const Exponent& e) const;

  /// Largest total degree, -1 for the zero polynomial.
  int total_degree() const;
  /// Distinct total degrees of the homogeneous components, ascending.
  std::vector<int> degrees() const;
  MPoly homogeneous_component(int degree) const;
  bool is_homogeneous() const;

  /// Deg-lex leading exponent; requires a nonzero polynomial.
  const Exponent& leading_exponent() const;
  const Rat& leading_coefficient() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const MPoly& other) const;

  MPoly pow(unsigned k) const;
  MPoly derivative(std::size_t var) const;
  Rat evaluate(std::span<const Rat> point) const;
  /// Replaces variable `var` by `value` (a polynomial over the same variables).
  MPoly substitute(std::size_t var, const MPoly& value) const;

  std::string to_string() const;

 private:
  void check_compatible(const MPoly& other) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a. Throws on division by zero.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

/// Default variable names x1..xn.
std::vector<std::string> default_variables(std::size_t n, const std::string& stem = "x");

}  // namespace polyvf
