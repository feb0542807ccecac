#include "polyvf/spanning.hpp"

#include <algorithm>
#include <sstream>

#include "polyvf/errors.hpp"

namespace polyvf {

int RankCertificate::first_failure() const {
  for (const auto& w : weights)
    if (!w.ok) return w.weight;
  return verified ? -1 : (weights.empty() ? 0 : weights.back().weight);
}

void GeneratorSet::add(Exponent s, int free_rank) {
  exponents.push_back(std::move(s));
  free_ranks.push_back(free_rank);
}

GeneratorSet GeneratorSet::full_rank(std::vector<Exponent> exponents, std::size_t r) {
  GeneratorSet s;
  for (auto& e : exponents) {
    if (e.size() != r) throw DimensionMismatch("generator exponent length differs from module rank");
    s.add(std::move(e), static_cast<int>(r));
  }
  return s;
}

namespace detail {

WordExpander::WordExpander(ModuleDescriptor desc, std::vector<int> letter_weights)
    : desc_(std::move(desc)), letters_(std::move(letter_weights)) {}

const ModuleElement::Terms& WordExpander::expand(const Exponent& b, const Exponent& a) {
  int weight = total_degree(a);
  for (std::size_t i = 0; i < b.size(); ++i) weight += letters_[i] * b[i];
  auto& slot = cache_[weight];
  auto key = std::make_pair(b, a);
  auto it = slot.find(key);
  if (it != slot.end()) return it->second;
  std::size_t first = 0;
  while (first < b.size() && b[first] == 0) ++first;
  ModuleElement::Terms value;
  if (first == b.size()) {
    value.emplace(a, Rat(1));
  } else {
    Exponent rest = b;
    --rest[first];
    const auto& inner = expand(rest, a);
    value = apply_e(desc_, letters_[first], inner);
  }
  return slot.emplace(std::move(key), std::move(value)).first->second;
}

void WordExpander::forget_below(int weight) { cache_.erase(cache_.begin(), cache_.lower_bound(weight)); }

}  // namespace detail

namespace {

enum class Mode { Basis, Span };

struct WordFamily {
  Exponent generator;
  int letters;  // number of leading letters allowed
};

RankCertificate word_rank_certificate(const ModuleDescriptor& desc, const Exponent& shift,
                                      const std::vector<int>& letter_weights,
                                      const std::vector<WordFamily>& families, int cutoff, Mode mode,
                                      bool stop_at_failure) {
  const std::size_t r = desc.rank();
  RankCertificate cert;
  cert.module = desc;
  cert.shift = shift;
  cert.cutoff = cutoff;
  cert.verified = true;
  ModuleDescriptor acting = shift.empty() ? desc : shift_submodule(desc, shift);
  detail::WordExpander words(acting, letter_weights);
  int max_letter = letter_weights.empty() ? 1 : *std::max_element(letter_weights.begin(), letter_weights.end());

  for (int w = 0; w <= cutoff; ++w) {
    auto rows = monomials_of_degree(r, w);
    std::map<Exponent, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    Echelon ech(rows.size());
    WeightRank wr;
    wr.weight = w;
    wr.expected = graded_dimension(r, w);
    bool dependent = false;
    for (const auto& fam : families) {
      int rem = w - total_degree(fam.generator);
      if (rem < 0) continue;
      std::vector<int> active(letter_weights.begin(), letter_weights.begin() + fam.letters);
      for (Exponent b : weighted_compositions(active, rem)) {
        b.resize(r, 0);
        const auto& terms = words.expand(b, fam.generator);
        SparseVec v;
        for (const auto& [m, c] : terms) v.emplace(row_index.at(m), c);
        ++wr.vectors;
        if (!ech.insert(v)) dependent = true;
        if (mode == Mode::Basis && dependent && stop_at_failure) break;
      }
      if (mode == Mode::Basis && dependent && stop_at_failure) break;
    }
    wr.rank = ech.rank();
    bool ok = mode == Mode::Basis ? (!dependent && wr.expected == wr.vectors && wr.rank == wr.vectors)
                                  : wr.rank == wr.expected;
    wr.ok = ok;
    cert.weights.push_back(wr);
    if (!ok) {
      cert.verified = false;
      if (stop_at_failure) break;
    }
    words.forget_below(w + 1 - max_letter);
  }
  return cert;
}

std::vector<int> newton_letters(std::size_t r, int d = 1) {
  std::vector<int> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = d * static_cast<int>(i + 1);
  return out;
}

std::vector<WordFamily> staircase_families(std::size_t r, int max_weight) {
  std::vector<WordFamily> out;
  int top = static_cast<int>(r * (r - (r ? 1 : 0)) / 2);
  for (int s = 0; s <= std::min(top, max_weight); ++s)
    for (auto& a : staircase_exponents(r, s)) out.push_back({std::move(a), static_cast<int>(r)});
  return out;
}

}  // namespace

std::vector<std::pair<PartitionVector, Exponent>> newton_columns(std::size_t r) {
  std::vector<std::pair<PartitionVector, Exponent>> cols;
  auto letters = newton_letters(r);
  for (int rw = 0; rw <= static_cast<int>(r); ++rw)
    for (const auto& rho : weighted_compositions(letters, rw))
      for (const auto& a : staircase_exponents(r, static_cast<int>(r) - rw)) cols.emplace_back(PartitionVector{rho}, a);
  auto rows = monomials_of_degree(r, static_cast<int>(r));
  if (cols.size() != rows.size())
    throw std::logic_error("Newton column count differs from the number of degree-r monomials");
  return cols;
}

SparseMat newton_matrix(const ModuleDescriptor& desc) {
  const std::size_t r = desc.rank();
  auto rows = monomials_of_degree(r, static_cast<int>(r));
  std::map<Exponent, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  auto cols = newton_columns(r);
  SparseMat m(rows.size(), cols.size());
  detail::WordExpander words(desc, newton_letters(r));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, c] : words.expand(cols[j].first.rho, cols[j].second)) m.set(row_index.at(e), j, c);
  return m;
}

SparseMat newton_transition_matrix(std::size_t r) {
  auto vars = default_variables(r, "z");
  auto rows = monomials_of_degree(r, static_cast<int>(r));
  std::map<Exponent, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  std::vector<MPoly> power_sums;
  for (std::size_t k = 1; k <= r; ++k) {
    MPoly p(vars);
    for (std::size_t i = 0; i < r; ++i) p.add_term(unit(r, i, static_cast<int>(k)), Rat(1));
    power_sums.push_back(std::move(p));
  }
  auto cols = newton_columns(r);
  SparseMat m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    MPoly prod = MPoly::monomial(vars, cols[j].second, Rat(1));
    for (std::size_t k = 0; k < r; ++k) prod = prod * power_sums[k].pow(static_cast<unsigned>(cols[j].first.rho[k]));
    for (const auto& [e, c] : prod.terms()) m.set(row_index.at(e), j, c);
  }
  return m;
}

int phi_degree(std::size_t r) {
  int d = 0;
  for (const auto& [rho, a] : newton_columns(r)) d += rho.length();
  return d;
}

UPoly phi(const ModuleDescriptor& desc, std::size_t max_r) {
  const std::size_t r = desc.rank();
  if (r > max_r) {
    std::ostringstream os;
    os << "phi requested for r = " << r << " above the configured bound " << max_r;
    throw ResourceError(os.str());
  }
  Rat transition = determinant(newton_transition_matrix(r));
  int degree = phi_degree(r);
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= degree; ++t) {
    ModuleDescriptor shifted = desc;
    for (auto& m : shifted.mu) m += t;
    xs.emplace_back(t);
    ys.push_back(determinant(newton_matrix(shifted)) / transition);
  }
  return interpolate(xs, ys);
}

RankCertificate check_graded_basis(const ModuleDescriptor& desc, const Exponent& shift, int cutoff,
                                   bool stop_at_failure) {
  const std::size_t r = desc.rank();
  if (shift.size() != r) throw DimensionMismatch("shift length differs from module rank");
  return word_rank_certificate(desc, shift, newton_letters(r), staircase_families(r, cutoff), cutoff, Mode::Basis,
                               stop_at_failure);
}

bool verify_graded_basis(const ModuleDescriptor& desc, const Exponent& shift, int cutoff) {
  return check_graded_basis(desc, shift, cutoff, true).verified;
}

ShiftResult find_good_shift(const ModuleDescriptor& desc, int bound, int cutoff) {
  if (bound < 0) throw std::invalid_argument("shift search bound must be nonnegative");
  const std::size_t r = desc.rank();
  ShiftResult result;
  RankCertificate last;
  auto attempt = [&](const Exponent& n) {
    ++result.candidates_tried;
    last = check_graded_basis(desc, n, cutoff, true);
    if (last.verified) {
      result.shift = n;
      result.certificate = last;
      return true;
    }
    return false;
  };
  for (int t = 0; t <= bound; ++t)
    if (attempt(Exponent(r, t))) return result;
  for (int t = 0; t <= bound; ++t)
    for (std::size_t i = 0; i < r; ++i)
      for (int j = 1; t + j <= bound; ++j) {
        Exponent n(r, t);
        n[i] += j;
        if (attempt(n)) return result;
      }
  std::ostringstream os;
  os << "no shift with entries <= " << bound << " gives a verified graded basis of " << desc.to_string()
     << " at cutoff " << cutoff;
  if (!last.weights.empty()) {
    const auto& w = last.weights.back();
    os << "; last candidate failed at weight " << w.weight << " (rank " << w.rank << " of " << w.expected << ")";
    if (w.weight == static_cast<int>(r)) os << ", i.e. phi_" << r << " vanished there";
  }
  throw SearchFailure(os.str());
}

GeneratorSet spanning_generators(const ModuleDescriptor& desc, int cutoff, int bound) {
  const std::size_t r = desc.rank();
  GeneratorSet out;
  if (r == 0) {
    out.add(Exponent{}, 0);
    return out;
  }
  Exponent shift = find_good_shift(desc, bound, cutoff).shift;
  // Layers T_{mu'} / T_{mu' + e_i}, mu' = mu + (N_1, ..., N_{i-1}, j, 0, ..., 0).
  for (std::size_t i = 0; i < r; ++i) {
    for (int j = 0; j < shift[i]; ++j) {
      Exponent offset(r, 0);
      for (std::size_t m = 0; m < i; ++m) offset[m] = shift[m];
      offset[i] = j;
      ModuleDescriptor layer = remove_factor(shift_submodule(desc, offset), i);
      GeneratorSet sub = spanning_generators(layer, cutoff, bound);
      for (std::size_t g = 0; g < sub.size(); ++g) {
        Exponent lifted(r, 0);
        for (std::size_t m = 0, k = 0; m < r; ++m) {
          if (m == i) {
            lifted[m] = j;
            continue;
          }
          lifted[m] = sub.exponents[g][k++] + offset[m];
        }
        out.add(std::move(lifted), sub.free_ranks[g]);
      }
    }
  }
  for (const auto& fam : staircase_families(r, static_cast<int>(r * r)))
    out.add(add(fam.generator, shift), static_cast<int>(r));
  return out;
}

RankCertificate check_spanning(const GeneratorSet& s, const ModuleDescriptor& desc, int cutoff) {
  const std::size_t r = desc.rank();
  std::vector<WordFamily> fams;
  for (const auto& e : s.exponents) {
    if (e.size() != r) throw DimensionMismatch("generator exponent length differs from module rank");
    fams.push_back({e, static_cast<int>(r)});
  }
  return word_rank_certificate(desc, {}, newton_letters(r), fams, cutoff, Mode::Span, false);
}

bool verify_spanning(const GeneratorSet& s, const ModuleDescriptor& desc, int cutoff) {
  return check_spanning(s, desc, cutoff).verified;
}

RankCertificate check_layered_basis(const GeneratorSet& s, const ModuleDescriptor& desc, int cutoff) {
  const std::size_t r = desc.rank();
  std::vector<WordFamily> fams;
  for (std::size_t g = 0; g < s.size(); ++g) {
    if (s.exponents[g].size() != r) throw DimensionMismatch("generator exponent length differs from module rank");
    fams.push_back({s.exponents[g], s.free_ranks[g]});
  }
  return word_rank_certificate(desc, {}, newton_letters(r), fams, cutoff, Mode::Basis, false);
}

ModuleDescriptor residue_descriptor(const ModuleDescriptor& desc, int d, const Exponent& residue) {
  if (d < 1) throw std::invalid_argument("residue decomposition needs d >= 1");
  if (residue.size() != desc.rank()) throw DimensionMismatch("residue length differs from module rank");
  ModuleDescriptor out = desc;
  for (std::size_t i = 0; i < desc.rank(); ++i) {
    if (residue[i] < 0 || residue[i] >= d) throw std::invalid_argument("residue entries must lie in [0, d)");
    out.mu[i] = (desc.mu[i] + residue[i] - (d - 1) * desc.lambda[i]) / d;
  }
  return out;
}

GeneratorSet spanning_generators_L_d(const ModuleDescriptor& desc, int d, int cutoff, int bound) {
  if (d < 1) throw std::invalid_argument("L_d spanning needs d >= 1");
  const std::size_t r = desc.rank();
  GeneratorSet out;
  int sub_cutoff = cutoff / d + 1;
  for_each_in_box(Exponent(r, d - 1), [&](const Exponent& residue) {
    GeneratorSet sub = spanning_generators(residue_descriptor(desc, d, residue), sub_cutoff, bound);
    for (std::size_t g = 0; g < sub.size(); ++g) {
      Exponent lifted = residue;
      for (std::size_t i = 0; i < r; ++i) lifted[i] += d * sub.exponents[g][i];
      out.add(std::move(lifted), sub.free_ranks[g]);
    }
  });
  return out;
}

RankCertificate check_span_under_L_d(const GeneratorSet& s, const ModuleDescriptor& desc, int d, int cutoff) {
  if (d < 1) throw std::invalid_argument("L_d spanning needs d >= 1");
  const std::size_t r = desc.rank();
  std::vector<WordFamily> fams;
  for (const auto& e : s.exponents) {
    if (e.size() != r) throw DimensionMismatch("generator exponent length differs from module rank");
    fams.push_back({e, static_cast<int>(r)});
  }
  return word_rank_certificate(desc, {}, newton_letters(r, d), fams, cutoff, Mode::Span, false);
}

bool span_under_L_d(const GeneratorSet& s, const ModuleDescriptor& desc, int d, int cutoff) {
  return check_span_under_L_d(s, desc, d, cutoff).verified;
}

}  // namespace polyvf
