#include "polyvf/tensormod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "polyvf/errors.hpp"

namespace polyvf {

ModuleDescriptor::ModuleDescriptor(std::vector<Rat> lambda_, std::vector<Rat> mu_)
    : lambda(std::move(lambda_)), mu(std::move(mu_)) {
  if (lambda.size() != mu.size()) throw DimensionMismatch("lambda and mu must have the same length");
}

std::string ModuleDescriptor::to_string() const {
  std::ostringstream os;
  os << "T(lambda=[";
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i].get_str();
  os << "], mu=[";
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i].get_str();
  os << "])";
  return os.str();
}

int PartitionVector::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) w += static_cast<int>(i + 1) * rho[i];
  return w;
}

int PartitionVector::length() const { return std::accumulate(rho.begin(), rho.end(), 0); }

ModuleElement ModuleElement::monomial(ModuleDescriptor desc, Exponent a, const Rat& c) {
  if (a.size() != desc.rank()) throw DimensionMismatch("exponent length differs from module rank");
  ModuleElement m(std::move(desc));
  m.add_term(a, c);
  return m;
}

void ModuleElement::add_term(const Exponent& a, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ModuleElement::check_same(const ModuleElement& o) const {
  if (!(desc_ == o.desc_)) throw DimensionMismatch("elements of different modules");
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  check_same(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  check_same(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Rat& c) {
  if (c == 0) terms_.clear();
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

int ModuleElement::weight() const {
  if (terms_.empty()) return -1;
  int w = total_degree(terms_.begin()->first);
  return w == total_degree(terms_.rbegin()->first) ? w : -1;
}

std::string ModuleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")*z^(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
  }
  return os.str();
}

namespace detail {

ModuleElement::Terms apply_e(const ModuleDescriptor& d, int k, const ModuleElement::Terms& terms) {
  std::vector<Rat> base(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) base[i] = d.mu[i] + (k + 1) * d.lambda[i];
  ModuleElement::Terms out;
  Rat coeff;
  for (const auto& [a, c] : terms) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      coeff = base[i] + a[i];
      if (coeff == 0) continue;
      Exponent b = a;
      b[i] += k;
      coeff *= c;
      auto [it, inserted] = out.try_emplace(std::move(b), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace detail

ModuleElement act_e(int k, const ModuleElement& m) {
  if (k < 1) throw std::invalid_argument("only e_k with k >= 1 act on deformed tensor modules");
  ModuleElement out(m.descriptor());
  out.mutable_terms() = detail::apply_e(m.descriptor(), k, m.terms());
  return out;
}

ModuleElement act_word(const PartitionVector& rho, const ModuleElement& m) {
  ModuleElement cur = m;
  for (std::size_t i = rho.rho.size(); i-- > 0;)
    for (int t = 0; t < rho.rho[i] && !cur.is_zero(); ++t) cur = act_e(static_cast<int>(i + 1), cur);
  return cur;
}

ModuleElement act(const LieElement& u, const ModuleElement& m) {
  if (u.n() != 1) throw DimensionMismatch("tensor modules T^r are modules over one-variable fields");
  ModuleElement out(m.descriptor());
  for (const auto& [b, c] : u.terms()) out += c * act_e(b.weight(), m);
  return out;
}

ModuleElement act_coordinate(const VFBasis& b, const ModuleElement& m) {
  const ModuleDescriptor& d = m.descriptor();
  if (b.n() != d.rank()) throw DimensionMismatch("coordinate action needs module rank equal to n");
  const auto j = static_cast<std::size_t>(b.direction);
  int k = b.weight();
  if (b.exponent[j] != k + 1 || k < 1)
    throw std::invalid_argument("coordinate action is defined for x_j^{k+1} d_j with k >= 1");
  Rat base = d.mu[j] + (k + 1) * d.lambda[j];
  ModuleElement out(d);
  for (const auto& [a, c] : m.terms()) {
    Rat coeff = base + a[j];
    if (coeff == 0) continue;
    Exponent s = a;
    s[j] += k;
    out.add_term(s, coeff * c);
  }
  return out;
}

bool module_axiom_check(const LieElement& u, const LieElement& v, const ModuleElement& m) {
  ModuleElement lhs = act(u, act(v, m)) - act(v, act(u, m));
  return lhs == act(bracket(u, v), m);
}

ModuleDescriptor shift_submodule(const ModuleDescriptor& d, const Exponent& shift) {
  if (shift.size() != d.rank()) throw DimensionMismatch("shift length differs from module rank");
  ModuleDescriptor out = d;
  for (std::size_t i = 0; i < shift.size(); ++i) {
    if (shift[i] < 0) throw std::invalid_argument("shift must be componentwise nonnegative");
    out.mu[i] += shift[i];
  }
  return out;
}

ModuleElement include_shifted(const ModuleElement& m, const ModuleDescriptor& ambient, const Exponent& shift) {
  if (!(shift_submodule(ambient, shift) == m.descriptor()))
    throw DimensionMismatch("element does not live in the shifted submodule");
  ModuleElement out(ambient);
  for (const auto& [a, c] : m.terms()) out.add_term(add(a, shift), c);
  return out;
}

ModuleDescriptor remove_factor(const ModuleDescriptor& d, std::size_t i) {
  if (i >= d.rank()) throw std::out_of_range("no such tensor factor");
  ModuleDescriptor out = d;
  out.lambda.erase(out.lambda.begin() + static_cast<long>(i));
  out.mu.erase(out.mu.begin() + static_cast<long>(i));
  return out;
}

Int graded_dimension(std::size_t r, int w) {
  if (w < 0) return 0;
  if (r == 0) return w == 0 ? 1 : 0;
  return binomial(w + static_cast<long>(r) - 1, static_cast<long>(r) - 1);
}

namespace {

bool is_dominant(const std::vector<int>& lambda) {
  return std::is_sorted(lambda.begin(), lambda.end(), std::greater<>());
}

// Fills rows[row] (length row+1) interlacing with rows[row+1], then recurses downward.
void extend_pattern(std::vector<std::vector<int>>& rows, int row,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (row < 0) {
    out.push_back(rows);
    return;
  }
  const auto& above = rows[row + 1];
  auto& cur = rows[row];
  std::size_t len = static_cast<std::size_t>(row) + 1;
  cur.assign(len, 0);
  // cur[j] in [above[j+1], above[j]]
  std::vector<int> idx(len);
  std::function<void(std::size_t)> fill = [&](std::size_t j) {
    if (j == len) {
      extend_pattern(rows, row - 1, out);
      return;
    }
    for (int v = above[j]; v >= above[j + 1]; --v) {
      cur[j] = v;
      fill(j + 1);
    }
  };
  fill(0);
}

}  // namespace

std::vector<std::vector<std::vector<int>>> gelfand_tsetlin_patterns(const std::vector<int>& top) {
  if (!is_dominant(top)) throw std::invalid_argument("Gelfand-Tsetlin top row must be non-increasing");
  std::vector<std::vector<std::vector<int>>> out;
  if (top.empty()) return out;
  std::vector<std::vector<int>> rows(top.size());
  rows.back() = top;
  extend_pattern(rows, static_cast<int>(top.size()) - 2, out);
  return out;
}

std::vector<WeightVector> weight_support(const std::vector<int>& lambda, std::size_t n) {
  if (lambda.size() != n) throw DimensionMismatch("dominant weight must have n entries");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant (needs lambda_1 >= ... >= lambda_n)");
  std::map<std::vector<int>, std::size_t, std::greater<>> counts;
  for (const auto& pattern : gelfand_tsetlin_patterns(lambda)) {
    std::vector<int> alpha(n);
    int previous = 0;
    for (std::size_t k = 0; k < n; ++k) {
      int s = std::accumulate(pattern[k].begin(), pattern[k].end(), 0);
      alpha[k] = s - previous;
      previous = s;
    }
    ++counts[alpha];
  }
  std::vector<WeightVector> out;
  for (auto& [alpha, mult] : counts) out.push_back({alpha, mult});
  return out;
}

std::vector<std::pair<ModuleDescriptor, std::size_t>> decompose_coinduced(const std::vector<int>& lambda,
                                                                          std::size_t n) {
  std::vector<std::pair<ModuleDescriptor, std::size_t>> out;
  for (const auto& wv : weight_support(lambda, n)) {
    std::vector<Rat> l(wv.alpha.begin(), wv.alpha.end());
    out.emplace_back(ModuleDescriptor(std::move(l), std::vector<Rat>(n, Rat(0))), wv.multiplicity);
  }
  return out;
}

}  // namespace polyvf
