#include "polyvf/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polyvf/errors.hpp"

namespace polyvf {

std::string VFBasis::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    if (exponent[i] == 0) continue;
    if (any) os << "*";
    os << "x" << i + 1;
    if (exponent[i] > 1) os << "^" << exponent[i];
    any = true;
  }
  if (any) os << "*";
  os << "d" << direction + 1;
  return os.str();
}

bool operator<(const VFBasis& u, const VFBasis& v) {
  int du = total_degree(u.exponent), dv = total_degree(v.exponent);
  if (du != dv) return du < dv;
  if (u.exponent != v.exponent) return u.exponent < v.exponent;
  return u.direction < v.direction;
}

bool operator==(const VFBasis& u, const VFBasis& v) {
  return u.direction == v.direction && u.exponent == v.exponent;
}

LieElement LieElement::basis(const VFBasis& b, const Rat& c) {
  LieElement x(b.n());
  x.add_term(b, c);
  return x;
}

void LieElement::add_term(const VFBasis& b, const Rat& c) {
  if (b.n() != n_) throw DimensionMismatch("vector field in the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.n_ != n_) throw DimensionMismatch("adding vector fields in different dimensions");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (o.n_ != n_) throw DimensionMismatch("subtracting vector fields in different dimensions");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rat& c) {
  if (c == 0) terms_.clear();
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << c.get_str() << ")*";
    os << b.to_string();
  }
  return os.str();
}

VFBasis e_basis(int k) {
  if (k < -1) throw std::invalid_argument("e_k needs k >= -1");
  return VFBasis{Exponent{k + 1}, 0};
}

LieElement e(int k, const Rat& c) { return LieElement::basis(e_basis(k), c); }

LieElement bracket(const VFBasis& u, const VFBasis& v) {
  if (u.n() != v.n()) throw DimensionMismatch("bracket of vector fields in different dimensions");
  LieElement out(u.n());
  const auto i = static_cast<std::size_t>(u.direction);
  const auto j = static_cast<std::size_t>(v.direction);
  Exponent sum = add(u.exponent, v.exponent);
  if (v.exponent[i] > 0) {
    Exponent a = sum;
    --a[i];
    out.add_term(VFBasis{a, v.direction}, Rat(v.exponent[i]));
  }
  if (u.exponent[j] > 0) {
    Exponent a = sum;
    --a[j];
    out.add_term(VFBasis{a, u.direction}, Rat(-u.exponent[j]));
  }
  return out;
}

LieElement bracket(const LieElement& u, const LieElement& v) {
  if (u.n() != v.n()) throw DimensionMismatch("bracket of vector fields in different dimensions");
  LieElement out(u.n());
  for (const auto& [bu, cu] : u.terms())
    for (const auto& [bv, cv] : v.terms()) {
      LieElement t = bracket(bu, bv);
      out += (cu * cv) * t;
    }
  return out;
}

AlgebraDescriptor AlgebraDescriptor::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 >= text.size())
    throw std::invalid_argument("algebra must look like W:n, L<d>:n or D:n, got '" + text + "'");
  std::string head = text.substr(0, colon);
  std::size_t n = 0;
  try {
    n = static_cast<std::size_t>(std::stoul(text.substr(colon + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad dimension in algebra '" + text + "'");
  }
  if (n == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (head == "W") return full(n);
  if (head == "D") return coordinate_sum(n);
  if (head.size() >= 2 && head[0] == 'L') {
    try {
      return truncated(n, std::stoi(head.substr(1)));
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown algebra '" + text + "'");
}

bool AlgebraDescriptor::contains(const VFBasis& b) const {
  if (b.n() != n) return false;
  switch (flavor) {
    case Flavor::Full:
      return true;
    case Flavor::Truncated:
      return b.weight() >= d;
    case Flavor::CoordinateSum: {
      const auto m = static_cast<std::size_t>(b.direction);
      return b.weight() >= 1 && b.exponent[m] == total_degree(b.exponent);
    }
  }
  return false;
}

int AlgebraDescriptor::min_weight() const {
  switch (flavor) {
    case Flavor::Full:
      return -1;
    case Flavor::Truncated:
      return std::max(d, -1);
    case Flavor::CoordinateSum:
      return 1;
  }
  return 0;
}

std::string AlgebraDescriptor::to_string() const {
  switch (flavor) {
    case Flavor::Full:
      return "W:" + std::to_string(n);
    case Flavor::Truncated:
      return "L" + std::to_string(d) + ":" + std::to_string(n);
    case Flavor::CoordinateSum:
      return "D:" + std::to_string(n);
  }
  return "?";
}

std::vector<VFBasis> basis_of_weight(const AlgebraDescriptor& alg, int w) {
  std::vector<VFBasis> out;
  if (w < alg.min_weight()) return out;
  for (const Exponent& a : monomials_of_degree(alg.n, w + 1))
    for (std::size_t i = 0; i < alg.n; ++i) {
      VFBasis b{a, static_cast<int>(i)};
      if (alg.contains(b)) out.push_back(std::move(b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

LieElement iota(int k, int d) {
  if (k < 1) throw std::invalid_argument("iota_d is defined on L_1: need k >= 1");
  if (d < 1) throw std::invalid_argument("iota_d needs d >= 1");
  return e(d * k, Rat(1, d));
}

const LieElement& BracketTable::operator()(const VFBasis& u, const VFBasis& v) {
  auto key = std::make_pair(u, v);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  LieElement value = bracket(u, v);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace polyvf
