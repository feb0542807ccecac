#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyvf/exponent.hpp"
#include "polyvf/liealg.hpp"
#include "polyvf/rational.hpp"

namespace polyvf {

/// Parameters of T^r = T_{l_1,m_1} (x) ... (x) T_{l_r,m_r}.
struct ModuleDescriptor {
  std::vector<Rat> lambda;
  std::vector<Rat> mu;

  ModuleDescriptor() = default;
  ModuleDescriptor(std::vector<Rat> lambda_, std::vector<Rat> mu_);
  std::size_t rank() const { return lambda.size(); }
  bool operator==(const ModuleDescriptor&) const = default;
  std::string to_string() const;
};

/// PBW word e_1^{rho_1} ... e_r^{rho_r}, i.e. the partition 1^{rho_1} 2^{rho_2} ... r^{rho_r}.
struct PartitionVector {
  std::vector<int> rho;

  int weight() const;
  int length() const;
  bool operator==(const PartitionVector&) const = default;
};

/// Element of T^r written in the monomial basis z^a z^mu d^{-lambda}.
class ModuleElement {
 public:
  using Terms = std::map<Exponent, Rat, DegLexLess>;

  ModuleElement() = default;
  explicit ModuleElement(ModuleDescriptor desc) : desc_(std::move(desc)) {}
  static ModuleElement monomial(ModuleDescriptor desc, Exponent a, const Rat& c = 1);

  const ModuleDescriptor& descriptor() const { return desc_; }
  const Terms& terms() const { return terms_; }
  Terms& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& a, const Rat& c);
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement& operator*=(const Rat& c);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Rat& c, ModuleElement a) { return a *= c; }
  bool operator==(const ModuleElement& o) const { return desc_ == o.desc_ && terms_ == o.terms_; }

  /// Degree a_1 + ... + a_r of every term, or -1 if not homogeneous (or zero).
  int weight() const;
  std::string to_string() const;

 private:
  void check_same(const ModuleElement& o) const;

  ModuleDescriptor desc_;
  Terms terms_;
};

namespace detail {
/// e_k on raw monomial terms of a module with descriptor `desc` (k >= 1 not checked).
ModuleElement::Terms apply_e(const ModuleDescriptor& desc, int k, const ModuleElement::Terms& terms);
}  // namespace detail

/// e_k . z^a = (sum_i (a_i + mu_i + (k+1) lambda_i) z_i^k) z^a, for k >= 1.
ModuleElement act_e(int k, const ModuleElement& m);
/// Applies e_r^{rho_r} first and e_1^{rho_1} last.
ModuleElement act_word(const PartitionVector& rho, const ModuleElement& m);
/// Linear extension of act_e to combinations of e_k (n = 1, k >= 1).
ModuleElement act(const LieElement& u, const ModuleElement& m);
/// x_j^{k+1} d_j acting on tensor factor j only (the coordinate-sum algebra, rank r = n).
ModuleElement act_coordinate(const VFBasis& b, const ModuleElement& m);

/// u(v m) - v(u m) == [u,v] m, exactly.
bool module_axiom_check(const LieElement& u, const LieElement& v, const ModuleElement& m);

/// T^r_{lambda, mu + N}; its inclusion sends z^a to z^{a+N}.
ModuleDescriptor shift_submodule(const ModuleDescriptor& d, const Exponent& shift);
ModuleElement include_shifted(const ModuleElement& m, const ModuleDescriptor& ambient, const Exponent& shift);
/// T^r_{lambda,mu} / T^r_{lambda, mu + e_i} is T^{r-1} with factor i removed.
ModuleDescriptor remove_factor(const ModuleDescriptor& d, std::size_t i);

/// dim T^r_w = binom(w + r - 1, r - 1).
Int graded_dimension(std::size_t r, int w);

struct WeightVector {
  std::vector<int> alpha;
  std::size_t multiplicity = 1;
  bool operator==(const WeightVector&) const = default;
};

/// Gelfand-Tsetlin patterns with top row `top`, in enumeration order.
std::vector<std::vector<std::vector<int>>> gelfand_tsetlin_patterns(const std::vector<int>& top);
/// Weight multiset of the irreducible gl_n-module V_lambda, sorted decreasing lexicographically.
std::vector<WeightVector> weight_support(const std::vector<int>& lambda, std::size_t n);

/// Restriction of T_lambda to the coordinate-sum algebra: one summand per weight of V_lambda.
std::vector<std::pair<ModuleDescriptor, std::size_t>> decompose_coinduced(const std::vector<int>& lambda,
                                                                          std::size_t n);

}  // namespace polyvf
