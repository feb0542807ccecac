#include "polyvf/mpoly.hpp"

#include <set>
#include <sstream>

#include "polyvf/errors.hpp"

namespace polyvf {

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MPoly MPoly::constant(std::vector<std::string> variables, const Rat& c) {
  MPoly p(std::move(variables));
  p.add_term(Exponent(p.num_vars(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MPoly p(std::move(variables));
  p.add_term(unit(p.num_vars(), index), Rat(1));
  return p;
}

MPoly MPoly::monomial(std::vector<std::string> variables, Exponent exponent, const Rat& c) {
  MPoly p(std::move(variables));
  if (exponent.size() != p.num_vars()) throw DimensionMismatch("monomial exponent length differs from variable count");
  p.add_term(exponent, c);
  return p;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : polyvf::total_degree(terms_.rbegin()->first);
}

std::vector<int> MPoly::degrees() const {
  std::set<int> ds;
  for (const auto& [e, c] : terms_) ds.insert(polyvf::total_degree(e));
  return {ds.begin(), ds.end()};
}

MPoly MPoly::homogeneous_component(int degree) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (polyvf::total_degree(e) == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

bool MPoly::is_homogeneous() const { return degrees().size() <= 1; }

const Exponent& MPoly::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

void MPoly::check_compatible(const MPoly& other) const {
  if (vars_.size() != other.vars_.size()) throw DimensionMismatch("polynomials over different variable counts");
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (vars_.empty() && terms_.empty()) vars_ = other.vars_;
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (vars_.empty() && terms_.empty()) vars_ = other.vars_;
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.vars_);
  Rat prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(add(ea, eb), prod);
    }
  return out;
}

bool MPoly::operator==(const MPoly& other) const {
  return vars_.size() == other.vars_.size() && terms_ == other.terms_;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(vars_, Rat(1));
  MPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    out.add_term(f, c * e[var]);
  }
  return out;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != vars_.size()) throw DimensionMismatch("evaluation point has wrong length");
  Rat total = 0, term, power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= power;
    }
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  check_compatible(value);
  MPoly out(vars_);
  std::map<int, MPoly> powers;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    int k = rest[var];
    rest[var] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(static_cast<unsigned>(k))).first;
    out += monomial(vars_, rest, c) * it->second;
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_const = polyvf::total_degree(e) == 0;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (is_const || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  MPoly quotient(a.variables());
  MPoly remainder = a;
  const Exponent& lb = b.leading_exponent();
  const Rat& cb = b.leading_coefficient();
  while (!remainder.is_zero()) {
    const Exponent& lr = remainder.leading_exponent();
    if (!divides(lb, lr)) return std::nullopt;
    Exponent shift = lr;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= lb[i];
    Rat q = remainder.leading_coefficient() / cb;
    MPoly step = MPoly::monomial(a.variables(), shift, q);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

std::vector<std::string> default_variables(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

}  // namespace polyvf
