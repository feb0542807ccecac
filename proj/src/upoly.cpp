#include "polyvf/upoly.hpp"

#include <stdexcept>

#include "polyvf/errors.hpp"

namespace polyvf {

UPoly::UPoly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { trim(); }

UPoly UPoly::x_power(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("univariate division by zero");
  UPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {UPoly{}, rem};
  std::vector<Rat> quo(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), Rat(0));
  const Rat& lead = divisor.c_.back();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rat q = rem.c_.back() / lead;
    quo[shift] = q;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem.c_[shift + j] -= q * divisor.c_[j];
    rem.trim();
  }
  return {UPoly(std::move(quo)), rem};
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly out = *this;
  Rat inv = 1 / c_.back();
  return out *= inv;
}

MPoly UPoly::to_mpoly(const std::string& var) const {
  MPoly p(std::vector<std::string>{var});
  for (std::size_t k = 0; k < c_.size(); ++k) p.add_term(Exponent{static_cast<int>(k)}, c_[k]);
  return p;
}

UPoly UPoly::from_mpoly(const MPoly& p) {
  if (p.num_vars() != 1) throw DimensionMismatch("expected a univariate polynomial");
  std::vector<Rat> c(static_cast<std::size_t>(p.total_degree() + 1), Rat(0));
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const { return to_mpoly(var).to_string(); }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw DimensionMismatch("interpolation needs matching abscissae and values");
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<Rat> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      if (xs[i] == xs[i - level]) throw std::invalid_argument("repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UPoly(std::vector<Rat>{-xs[i], Rat(1)});
    result += UPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace polyvf
