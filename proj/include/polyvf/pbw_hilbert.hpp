#pragma once

#include <string>
#include <vector>

#include "polyvf/mpoly.hpp"
#include "polyvf/spanning.hpp"
#include "polyvf/tensormod.hpp"
#include "polyvf/upoly.hpp"

namespace polyvf {

/// Left-normalized word for a commutative monomial g_1^{a_1} ... g_r^{a_r}:
/// letters (zero-based variable indices) g_1,...,g_1, ..., g_r,...,g_r.
std::vector<int> psi_lift(const Exponent& monomial);

/// Applies a word of e-letters to m, rightmost letter first. Letter i means e_{letter_weights[i]}.
ModuleElement apply_word(const std::vector<int>& word, const ModuleElement& m, const std::vector<int>& letter_weights);

/// Quotient of the free module k[g_1..g_r]^k by the submodule spanned by `relations`.
/// Variable g_i carries weight variable_weights[i]; generator m_s carries generator_weights[s].
struct PolyModulePresentation {
  std::size_t num_generators = 0;
  std::vector<std::string> ring_vars;
  std::vector<int> variable_weights;
  std::vector<int> generator_weights;
  std::vector<std::vector<MPoly>> relations;  ///< each of length num_generators
  bool groebner = false;

  /// Free module on `weights.size()` generators over g_1..g_r with deg g_i = i.
  static PolyModulePresentation free(std::size_t r, std::vector<int> generator_weights);
  /// Adds the relation  monomial * m_position = 0.
  void add_monomial_relation(std::size_t position, const Exponent& monomial);
  std::size_t num_vars() const { return ring_vars.size(); }
};

/// Generators S; relations are (a) g_i m_s = 0 for i beyond the free rank of s, which hold in
/// the associated graded of the layer filtration, and (b) kernel vectors of the weight-w
/// expansion of the remaining ordered words, for w <= cutoff. Throws VerificationError if S
/// does not span up to the cutoff.
PolyModulePresentation associated_graded_presentation(const ModuleDescriptor& desc, const GeneratorSet& s,
                                                      int cutoff);

/// Reduced Gröbner basis of the relation submodule, position-over-term with weighted
/// deg-lex on each component (deg g_i = variable_weights[i]).
PolyModulePresentation module_groebner(const PolyModulePresentation& p);

/// True when every S-vector of the relations reduces to zero.
bool is_groebner_basis(const PolyModulePresentation& p);

/// Leading monomial of each relation, as (position, exponent).
std::vector<std::pair<std::size_t, Exponent>> leading_terms(const PolyModulePresentation& p);

/// p(t)/q(t) with q(0) != 0, kept in lowest terms with q primitive integral and q(0) > 0.
class RationalSeries {
 public:
  RationalSeries() : num_(), den_(UPoly::constant(1)) {}
  RationalSeries(UPoly num, UPoly den);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  /// Power series coefficients of degree 0..n.
  std::vector<Rat> coefficients(int n) const;
  /// Order of the pole at t = 1.
  int pole_order_at_one() const;
  bool operator==(const RationalSeries& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string to_string(const std::string& var = "t") const;

 private:
  UPoly num_, den_;
};

/// Series of standard monomials of the Gröbner basis (computed first if needed).
RationalSeries hilbert_series(const PolyModulePresentation& p);

/// K-polynomial numerator of k[g]/I for a monomial ideal with weighted variables:
/// HS(k[g]/I) = K(t) / prod_i (1 - t^{w_i}).
UPoly monomial_ideal_numerator(const std::vector<Exponent>& generators, const std::vector<int>& weights);

/// Eventual polynomial f(n) = sum_{k<=n} a_k, degree d and c with leading term c n^d / d!.
struct PartialSumFit {
  UPoly polynomial;  ///< in the variable n
  int degree = 0;
  Int leading_constant;
  int stable_from = 0;  ///< first n from which the fit was verified
};

/// Fits the partial sums by finite differences over [window/2, window].
/// Throws Inconclusive when no polynomial of degree < window/2 - 1 fits.
PartialSumFit partial_sum_polynomial(const RationalSeries& s, int window);

/// Exact evidence that a presentation matches the module it came from.
struct PresentationCertificate {
  struct Row {
    int weight;
    Rat series_coefficient;
    Int module_dimension;
    std::size_t standard_monomials;
    std::size_t standard_rank;  ///< rank of the standard words in T^r_w
  };
  std::vector<Row> rows;
  bool verified = false;
};

/// For w <= cutoff: the Hilbert series coefficient equals dim T^r_w and the standard
/// monomials of the Gröbner basis, lifted through psi to ordered words, are a basis of T^r_w.
PresentationCertificate certify_presentation(const PolyModulePresentation& p, const ModuleDescriptor& desc,
                                             const GeneratorSet& s, int cutoff);

}  // namespace polyvf
