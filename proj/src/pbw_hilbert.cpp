#include "polyvf/pbw_hilbert.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "polyvf/errors.hpp"
#include "polyvf/linalg.hpp"

namespace polyvf {

std::vector<int> psi_lift(const Exponent& monomial) {
  std::vector<int> word;
  for (std::size_t i = 0; i < monomial.size(); ++i)
    for (int t = 0; t < monomial[i]; ++t) word.push_back(static_cast<int>(i));
  return word;
}

ModuleElement apply_word(const std::vector<int>& word, const ModuleElement& m, const std::vector<int>& letter_weights) {
  ModuleElement cur = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_e(letter_weights.at(static_cast<std::size_t>(*it)), cur);
  return cur;
}

PolyModulePresentation PolyModulePresentation::free(std::size_t r, std::vector<int> generator_weights) {
  PolyModulePresentation p;
  p.num_generators = generator_weights.size();
  p.ring_vars = default_variables(r, "g");
  for (std::size_t i = 0; i < r; ++i) p.variable_weights.push_back(static_cast<int>(i + 1));
  p.generator_weights = std::move(generator_weights);
  p.groebner = true;
  return p;
}

void PolyModulePresentation::add_monomial_relation(std::size_t position, const Exponent& monomial) {
  if (position >= num_generators) throw std::out_of_range("relation position beyond generator count");
  std::vector<MPoly> rel(num_generators, MPoly(ring_vars));
  rel[position] = MPoly::monomial(ring_vars, monomial, Rat(1));
  relations.push_back(std::move(rel));
  groebner = false;
}

namespace {

struct Term {
  std::size_t pos;
  Exponent exp;
};

// Position over term: lower position first, then larger monomial first; begin() is the leading term.
struct TermOrder {
  WeightedDegLexLess less;
  bool operator()(const Term& a, const Term& b) const {
    if (a.pos != b.pos) return a.pos < b.pos;
    return less(b.exp, a.exp);
  }
};

using Vec = std::map<Term, Rat, TermOrder>;

Vec to_vec(const std::vector<MPoly>& rel, const TermOrder& order) {
  Vec v(order);
  for (std::size_t s = 0; s < rel.size(); ++s)
    for (const auto& [e, c] : rel[s].terms()) v.emplace(Term{s, e}, c);
  return v;
}

std::vector<MPoly> from_vec(const Vec& v, std::size_t k, const std::vector<std::string>& vars) {
  std::vector<MPoly> out(k, MPoly(vars));
  for (const auto& [t, c] : v) out[t.pos].add_term(t.exp, c);
  return out;
}

// a -= c * x^shift * b
void sub_multiple(Vec& a, const Rat& c, const Exponent& shift, const Vec& b) {
  for (const auto& [t, v] : b) {
    Term tt{t.pos, add(t.exp, shift)};
    Rat delta = c * v;
    auto [it, inserted] = a.try_emplace(std::move(tt), -delta);
    if (!inserted) {
      it->second -= delta;
      if (it->second == 0) a.erase(it);
    }
  }
}

void make_monic(Vec& v) {
  if (v.empty()) return;
  Rat inv = 1 / v.begin()->second;
  for (auto& [t, c] : v) c *= inv;
}

Exponent diff(const Exponent& a, const Exponent& b) {
  Exponent out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec reduce(Vec f, const std::vector<Vec>& basis, const TermOrder& order) {
  Vec rem(order);
  while (!f.empty()) {
    auto lead = f.begin();
    const Vec* divisor = nullptr;
    for (const auto& g : basis) {
      const Term& lg = g.begin()->first;
      if (lg.pos == lead->first.pos && divides(lg.exp, lead->first.exp)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      rem.insert(f.extract(lead));
      continue;
    }
    Rat c = lead->second / divisor->begin()->second;
    Exponent shift = diff(lead->first.exp, divisor->begin()->first.exp);
    sub_multiple(f, c, shift, *divisor);
  }
  return rem;
}

Vec s_vector(const Vec& f, const Vec& g, const TermOrder& order) {
  const Term& lf = f.begin()->first;
  const Term& lg = g.begin()->first;
  Exponent lcm(lf.exp.size());
  for (std::size_t i = 0; i < lcm.size(); ++i) lcm[i] = std::max(lf.exp[i], lg.exp[i]);
  Vec s(order);
  sub_multiple(s, Rat(-1) / f.begin()->second, diff(lcm, lf.exp), f);
  sub_multiple(s, Rat(1) / g.begin()->second, diff(lcm, lg.exp), g);
  return s;
}

std::vector<Vec> buchberger(std::vector<Vec> input, const TermOrder& order) {
  std::vector<Vec> basis;
  for (auto& f : input) {
    Vec h = reduce(std::move(f), basis, order);
    if (h.empty()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (basis[i].begin()->first.pos == basis[j].begin()->first.pos) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Vec h = reduce(s_vector(basis[i], basis[j], order), basis, order);
    if (h.empty()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
    std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m)
      if (basis[m].begin()->first.pos == basis[k].begin()->first.pos) pairs.emplace_back(m, k);
  }
  // Minimal basis: drop elements whose leading term is a multiple of another one.
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Term& li = basis[i].begin()->first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Term& lj = basis[j].begin()->first;
      if (lj.pos != li.pos || !divides(lj.exp, li.exp)) continue;
      redundant = lj.exp != li.exp || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce the tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Vec head(order);
    head.insert(minimal[i].extract(minimal[i].begin()));
    Vec tail = reduce(std::move(minimal[i]), others, order);
    head.merge(tail);
    minimal[i] = std::move(head);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Vec& a, const Vec& b) {
    return order(a.begin()->first, b.begin()->first);
  });
  return minimal;
}

void check_presentation(const PolyModulePresentation& p) {
  if (p.variable_weights.size() != p.ring_vars.size()) throw DimensionMismatch("one weight per ring variable");
  if (p.generator_weights.size() != p.num_generators) throw DimensionMismatch("one weight per generator");
  for (const auto& rel : p.relations) {
    if (rel.size() != p.num_generators) throw DimensionMismatch("relation length differs from generator count");
    for (const auto& c : rel)
      if (c.num_vars() != p.ring_vars.size()) throw DimensionMismatch("relation entry over the wrong ring");
  }
}

TermOrder order_of(const PolyModulePresentation& p) { return TermOrder{WeightedDegLexLess{p.variable_weights}}; }

}  // namespace

PolyModulePresentation module_groebner(const PolyModulePresentation& p) {
  check_presentation(p);
  TermOrder order = order_of(p);
  std::vector<Vec> input;
  for (const auto& rel : p.relations) input.push_back(to_vec(rel, order));
  auto gb = buchberger(std::move(input), order);
  PolyModulePresentation out = p;
  out.relations.clear();
  for (const auto& g : gb) out.relations.push_back(from_vec(g, p.num_generators, p.ring_vars));
  out.groebner = true;
  return out;
}

bool is_groebner_basis(const PolyModulePresentation& p) {
  check_presentation(p);
  TermOrder order = order_of(p);
  std::vector<Vec> basis;
  for (const auto& rel : p.relations) {
    Vec v = to_vec(rel, order);
    if (!v.empty()) basis.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].begin()->first.pos != basis[j].begin()->first.pos) continue;
      if (!reduce(s_vector(basis[i], basis[j], order), basis, order).empty()) return false;
    }
  return true;
}

std::vector<std::pair<std::size_t, Exponent>> leading_terms(const PolyModulePresentation& p) {
  TermOrder order = order_of(p);
  std::vector<std::pair<std::size_t, Exponent>> out;
  for (const auto& rel : p.relations) {
    Vec v = to_vec(rel, order);
    if (!v.empty()) out.emplace_back(v.begin()->first.pos, v.begin()->first.exp);
  }
  return out;
}

RationalSeries::RationalSeries(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.coefficient(0) == 0) throw std::invalid_argument("series denominator must not vanish at t = 0");
  if (num_.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = gcd(num_, den_);
  num_ = num_.divmod(g).first;
  den_ = den_.divmod(g).first;
  Int l = common_denominator(den_.coefficients());
  num_ *= Rat(l);
  den_ *= Rat(l);
  Int content = 0;
  for (const auto& c : den_.coefficients()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  if (den_.coefficient(0) < 0) content = -content;
  num_ *= Rat(1) / Rat(content);
  den_ *= Rat(1) / Rat(content);
}

std::vector<Rat> RationalSeries::coefficients(int n) const {
  std::vector<Rat> a(static_cast<std::size_t>(std::max(n + 1, 0)), Rat(0));
  const Rat d0 = den_.coefficient(0);
  for (int k = 0; k <= n; ++k) {
    Rat v = num_.coefficient(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j) v -= den_.coefficient(j) * a[k - j];
    a[k] = v / d0;
  }
  return a;
}

int RationalSeries::pole_order_at_one() const {
  auto multiplicity = [](UPoly p) {
    int m = 0;
    UPoly lin(std::vector<Rat>{Rat(-1), Rat(1)});
    while (!p.is_zero() && p.evaluate(Rat(1)) == 0) {
      p = p.divmod(lin).first;
      ++m;
    }
    return m;
  };
  return multiplicity(den_) - multiplicity(num_);
}

std::string RationalSeries::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

namespace {

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(), DegLexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

UPoly k_numerator(std::vector<Exponent> gens, const std::vector<int>& weights) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return UPoly::constant(1);
  if (total_degree(gens.front()) == 0) return UPoly{};
  Exponent last = gens.back();
  gens.pop_back();
  std::vector<Exponent> colon;
  for (const auto& g : gens) {
    Exponent q(g);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = std::max(0, g[i] - last[i]);
    colon.push_back(std::move(q));
  }
  int deg = WeightedDegLexLess{weights}.degree(last);
  return k_numerator(std::move(gens), weights) - UPoly::x_power(deg) * k_numerator(std::move(colon), weights);
}

UPoly free_denominator(const std::vector<int>& weights) {
  UPoly den = UPoly::constant(1);
  for (int w : weights) den = den * (UPoly::constant(1) - UPoly::x_power(w));
  return den;
}

}  // namespace

UPoly monomial_ideal_numerator(const std::vector<Exponent>& generators, const std::vector<int>& weights) {
  for (const auto& g : generators)
    if (g.size() != weights.size()) throw DimensionMismatch("monomial length differs from variable count");
  return k_numerator(generators, weights);
}

RationalSeries hilbert_series(const PolyModulePresentation& p) {
  PolyModulePresentation gb = p.groebner ? p : module_groebner(p);
  std::vector<std::vector<Exponent>> per_position(gb.num_generators);
  for (auto& [pos, e] : leading_terms(gb)) per_position[pos].push_back(std::move(e));
  UPoly num;
  for (std::size_t s = 0; s < gb.num_generators; ++s)
    num += UPoly::x_power(gb.generator_weights[s]) * monomial_ideal_numerator(per_position[s], gb.variable_weights);
  return RationalSeries(std::move(num), free_denominator(gb.variable_weights));
}

PartialSumFit partial_sum_polynomial(const RationalSeries& s, int window) {
  if (window < 4) throw Inconclusive("window too small to fit an eventual polynomial");
  auto a = s.coefficients(window);
  std::vector<Rat> f(a.size());
  Rat acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) f[k] = (acc += a[k]);
  const int from = window / 2;
  const int points = window - from + 1;
  for (int d = 0; d + 3 <= points; ++d) {
    // (d+1)-th differences of f on [from, window] must vanish.
    std::vector<Rat> diffs(f.begin() + from, f.end());
    for (int level = 0; level <= d; ++level)
      for (std::size_t i = 0; i + 1 < diffs.size() - level; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    bool zero = true;
    for (std::size_t i = 0; i + d + 1 < diffs.size(); ++i)
      if (diffs[i] != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    std::vector<Rat> xs, ys;
    for (int k = from; k <= from + d; ++k) {
      xs.emplace_back(k);
      ys.push_back(f[static_cast<std::size_t>(k)]);
    }
    PartialSumFit fit;
    fit.polynomial = interpolate(xs, ys);
    fit.degree = fit.polynomial.degree() < 0 ? 0 : fit.polynomial.degree();
    Rat c = fit.polynomial.leading_coefficient() * Rat(factorial(fit.degree));
    if (!is_integer(c)) throw Inconclusive("fitted leading constant " + c.get_str() + " is not an integer");
    fit.leading_constant = c.get_num();
    fit.stable_from = from;
    // Report the earliest n from which the polynomial already agrees.
    while (fit.stable_from > 0 && fit.polynomial.evaluate(Rat(fit.stable_from - 1)) == f[fit.stable_from - 1])
      --fit.stable_from;
    return fit;
  }
  std::ostringstream os;
  os << "partial sums do not stabilize to a polynomial on [" << from << ", " << window << "]";
  throw Inconclusive(os.str());
}

PolyModulePresentation associated_graded_presentation(const ModuleDescriptor& desc, const GeneratorSet& s, int cutoff) {
  const std::size_t r = desc.rank();
  if (!verify_spanning(s, desc, cutoff)) throw VerificationError("generator set does not span the module up to the cutoff");
  std::vector<int> weights;
  for (const auto& e : s.exponents) weights.push_back(total_degree(e));
  PolyModulePresentation p = PolyModulePresentation::free(r, weights);
  for (std::size_t g = 0; g < s.size(); ++g)
    for (int i = s.free_ranks[g]; i < static_cast<int>(r); ++i) p.add_monomial_relation(g, unit(r, static_cast<std::size_t>(i)));

  if (!check_layered_basis(s, desc, cutoff).verified) {
    // Syzygies among the ordered words that remain after the layer relations.
    detail::WordExpander words(desc, p.variable_weights);
    for (int w = 0; w <= cutoff; ++w) {
      auto rows = monomials_of_degree(r, w);
      std::map<Exponent, std::size_t> row_index;
      for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
      std::vector<std::pair<std::size_t, Exponent>> labels;
      std::vector<SparseVec> cols;
      for (std::size_t g = 0; g < s.size(); ++g) {
        int rem = w - weights[g];
        if (rem < 0) continue;
        std::vector<int> active(p.variable_weights.begin(), p.variable_weights.begin() + s.free_ranks[g]);
        for (Exponent b : weighted_compositions(active, rem)) {
          b.resize(r, 0);
          SparseVec v;
          for (const auto& [m, c] : words.expand(b, s.exponents[g])) v.emplace(row_index.at(m), c);
          cols.push_back(std::move(v));
          labels.emplace_back(g, std::move(b));
        }
      }
      if (cols.empty()) continue;
      for (const auto& k : kernel_basis(SparseMat::from_columns(rows.size(), cols))) {
        std::vector<MPoly> rel(p.num_generators, MPoly(p.ring_vars));
        for (std::size_t j = 0; j < k.size(); ++j)
          if (k[j] != 0) rel[labels[j].first].add_term(labels[j].second, k[j]);
        p.relations.push_back(std::move(rel));
      }
      words.forget_below(w + 1 - static_cast<int>(r));
    }
    p.groebner = false;
  }
  return module_groebner(p);
}

PresentationCertificate certify_presentation(const PolyModulePresentation& p, const ModuleDescriptor& desc,
                                             const GeneratorSet& s, int cutoff) {
  const std::size_t r = desc.rank();
  if (p.num_generators != s.size() || p.num_vars() != r) throw DimensionMismatch("presentation does not match generator set");
  PolyModulePresentation gb = p.groebner ? p : module_groebner(p);
  auto series = hilbert_series(gb).coefficients(cutoff);
  std::vector<std::vector<Exponent>> lts(gb.num_generators);
  for (auto& [pos, e] : leading_terms(gb)) lts[pos].push_back(std::move(e));

  PresentationCertificate cert;
  cert.verified = true;
  detail::WordExpander words(desc, gb.variable_weights);
  int max_letter = gb.variable_weights.empty() ? 1 : *std::max_element(gb.variable_weights.begin(), gb.variable_weights.end());
  for (int w = 0; w <= cutoff; ++w) {
    auto rows = monomials_of_degree(r, w);
    std::map<Exponent, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    Echelon ech(rows.size());
    std::size_t count = 0;
    for (std::size_t g = 0; g < gb.num_generators; ++g) {
      int rem = w - gb.generator_weights[g];
      if (rem < 0) continue;
      for (const auto& b : weighted_compositions(gb.variable_weights, rem)) {
        bool standard = std::none_of(lts[g].begin(), lts[g].end(), [&](const Exponent& lt) { return divides(lt, b); });
        if (!standard) continue;
        ++count;
        SparseVec v;
        for (const auto& [m, c] : words.expand(b, s.exponents[g])) v.emplace(row_index.at(m), c);
        ech.insert(v);
      }
    }
    PresentationCertificate::Row row{w, series[static_cast<std::size_t>(w)], graded_dimension(r, w), count, ech.rank()};
    if (row.series_coefficient != Rat(row.module_dimension) || row.standard_rank != row.standard_monomials ||
        Int(static_cast<unsigned long>(row.standard_monomials)) != row.module_dimension)
      cert.verified = false;
    cert.rows.push_back(row);
    words.forget_below(w + 1 - max_letter);
  }
  return cert;
}

}  // namespace polyvf
