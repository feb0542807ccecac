#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyvf/exponent.hpp"
#include "polyvf/linalg.hpp"
#include "polyvf/rational.hpp"
#include "polyvf/tensormod.hpp"
#include "polyvf/upoly.hpp"

namespace polyvf {

/// Rank bookkeeping for one weight of a certificate.
struct WeightRank {
  int weight = 0;
  Int expected;             ///< dim T^r_w
  std::size_t vectors = 0;  ///< number of words expanded
  std::size_t rank = 0;
  bool ok = false;
};

/// Exact rank evidence behind a graded-basis or spanning verdict.
struct RankCertificate {
  ModuleDescriptor module;
  Exponent shift;  ///< N; all exponents are relative to mu + N
  int cutoff = 0;
  std::vector<WeightRank> weights;
  bool verified = false;

  /// First weight whose check failed, or -1.
  int first_failure() const;
};

/// Finite generator set S with, per generator, how many of e_1, ..., e_r act freely on it.
/// A generator with free rank f contributes the words e_1^{b_1} ... e_f^{b_f} z^s to the
/// layered basis produced by spanning_generators.
struct GeneratorSet {
  std::vector<Exponent> exponents;
  std::vector<int> free_ranks;

  std::size_t size() const { return exponents.size(); }
  void add(Exponent s, int free_rank);
  /// Generators with free rank equal to the module rank (the default for user input).
  static GeneratorSet full_rank(std::vector<Exponent> exponents, std::size_t r);
};

/// Column labels (rho, a) of the Newton matrix: a_i < i, |rho| weight + |a| == r,
/// ordered by (weight of rho, rho, a).
std::vector<std::pair<PartitionVector, Exponent>> newton_columns(std::size_t r);

/// Degree-r component of T^r: column (rho, a) holds e_1^{rho_1}...e_r^{rho_r} z^a in the
/// monomial basis (rows: degree-r monomials, deg-lex).
SparseMat newton_matrix(const ModuleDescriptor& desc);

/// Same layout with column (rho, a) holding p_rho z^a (Newton power sums), i.e. the
/// change of basis from the Newton basis to monomials.
SparseMat newton_transition_matrix(std::size_t r);

/// Sum of l(rho) over the Newton columns: the N-degree of phi.
int phi_degree(std::size_t r);

/// N -> det A_r(lambda, mu + (N,...,N)), the determinant of the endomorphism
/// p_rho z^a -> e^rho z^a written in the Newton basis. Computed by exact evaluation at
/// phi_degree(r)+1 points and interpolation. Throws ResourceError when r > max_r.
UPoly phi(const ModuleDescriptor& desc, std::size_t max_r = 5);

/// Checks that e_1^{b_1}...e_r^{b_r} z^a (0 <= a_i < i) is a graded basis of
/// T^r_{lambda, mu + N} for every weight <= cutoff.
RankCertificate check_graded_basis(const ModuleDescriptor& desc, const Exponent& shift, int cutoff,
                                   bool stop_at_failure = false);
bool verify_graded_basis(const ModuleDescriptor& desc, const Exponent& shift, int cutoff);

struct ShiftResult {
  Exponent shift;
  RankCertificate certificate;
  std::size_t candidates_tried = 0;
};

/// Bounded search for N with a verified graded basis: diagonal shifts (t,...,t) for
/// t = 0..bound first, then single-coordinate increments of each diagonal.
/// Throws SearchFailure naming the last failing weight.
ShiftResult find_good_shift(const ModuleDescriptor& desc, int bound, int cutoff = 8);

/// Finite S whose words span T^r, built by induction over the quotient layers
/// T^r_{mu'} / T^r_{mu' + e_i} and the free block N + {a : a_i < i}.
GeneratorSet spanning_generators(const ModuleDescriptor& desc, int cutoff = 8, int bound = 10);

/// Rank of all words e_1^{b_1}...e_r^{b_r} z^s, s in S, equals dim T^r_w for w <= cutoff.
RankCertificate check_spanning(const GeneratorSet& s, const ModuleDescriptor& desc, int cutoff);
bool verify_spanning(const GeneratorSet& s, const ModuleDescriptor& desc, int cutoff);

/// Words restricted to each generator's free rank are linearly independent and their count
/// matches dim T^r_w: the layered set is a graded basis up to the cutoff.
RankCertificate check_layered_basis(const GeneratorSet& s, const ModuleDescriptor& desc, int cutoff);

/// The residue summand k[x^d] x^{s + mu} of T_{lambda,mu} under iota_d is T_{lambda, mu'}
/// with mu' = (mu + s - (d-1) lambda) / d (factorwise for T^r).
ModuleDescriptor residue_descriptor(const ModuleDescriptor& desc, int d, const Exponent& residue);

/// Generators for spanning T^r by words in e_d, e_{2d}, ..., e_{rd}: the union over residue
/// classes s in {0..d-1}^r of s + d * spanning_generators(residue module).
GeneratorSet spanning_generators_L_d(const ModuleDescriptor& desc, int d, int cutoff = 8, int bound = 10);

/// Rank test of verify_spanning with letters e_d, e_{2d}, ..., e_{rd}.
RankCertificate check_span_under_L_d(const GeneratorSet& s, const ModuleDescriptor& desc, int d, int cutoff);
bool span_under_L_d(const GeneratorSet& s, const ModuleDescriptor& desc, int d, int cutoff);

namespace detail {

/// Expands words e_{w_1}^{b_1} ... e_{w_f}^{b_f} z^a with caching of shared suffixes.
class WordExpander {
 public:
  WordExpander(ModuleDescriptor desc, std::vector<int> letter_weights);
  /// Expansion of the word b applied to z^a (rightmost letters first).
  const ModuleElement::Terms& expand(const Exponent& b, const Exponent& a);
  /// Drops cached words of total weight below `weight`.
  void forget_below(int weight);
  const ModuleDescriptor& descriptor() const { return desc_; }
  const std::vector<int>& letter_weights() const { return letters_; }

 private:
  ModuleDescriptor desc_;
  std::vector<int> letters_;
  std::map<int, std::map<std::pair<Exponent, Exponent>, ModuleElement::Terms>> cache_;
};

}  // namespace detail

}  // namespace polyvf
