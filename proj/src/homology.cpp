#include "polyvf/homology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "polyvf/errors.hpp"

namespace polyvf {

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "trivial" || text == "k") return trivial();
  if (text.rfind("T:", 0) != 0) throw std::invalid_argument("coefficients must be 'trivial' or 'T:<lambda>;<mu>'");
  auto body = text.substr(2);
  auto semi = body.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("tensor coefficients need 'T:<lambda>;<mu>'");
  return tensor(ModuleDescriptor(parse_rat_list(body.substr(0, semi)), parse_rat_list(body.substr(semi + 1))));
}

std::string Coefficients::to_string() const {
  if (kind == Kind::Trivial) return "trivial";
  std::string out = "T:";
  for (std::size_t i = 0; i < module.rank(); ++i) out += (i ? "," : "") + polyvf::to_string(module.lambda[i]);
  out += ";";
  for (std::size_t i = 0; i < module.rank(); ++i) out += (i ? "," : "") + polyvf::to_string(module.mu[i]);
  return out;
}

int ChainBasisElement::weight() const {
  int w = total_degree(module_exponent);
  for (const auto& b : wedge) w += b.weight();
  return w;
}

bool ChainBasisElement::operator<(const ChainBasisElement& o) const {
  if (wedge != o.wedge) return wedge < o.wedge;
  return module_exponent < o.module_exponent;
}

bool ChainBasisElement::operator==(const ChainBasisElement& o) const {
  return wedge == o.wedge && module_exponent == o.module_exponent;
}

namespace {

void validate(const AlgebraDescriptor& alg, const Coefficients& coeffs) {
  if (coeffs.kind == Coefficients::Kind::Trivial) return;
  if (alg.min_weight() < 1) throw std::invalid_argument("tensor coefficients need an algebra of positive weight");
  if (alg.flavor == Flavor::CoordinateSum) {
    if (coeffs.module.rank() != alg.n) throw DimensionMismatch("coordinate-sum algebra acts on T^r with r = n");
  } else if (alg.n != 1) {
    throw std::invalid_argument("tensor coefficients need a one-variable or coordinate-sum algebra");
  }
}

BracketTable& brackets() {
  static BracketTable table;
  return table;
}

std::string slice_name(int p, int w) {
  std::ostringstream os;
  os << "(p=" << p << ", w=" << w << ")";
  return os.str();
}

void enumerate_wedges(const std::vector<VFBasis>& elems, std::size_t start, int p, int remaining,
                      std::vector<VFBasis>& cur, const std::function<void(const std::vector<VFBasis>&)>& emit) {
  if (p == 0) {
    if (remaining == 0) emit(cur);
    return;
  }
  for (std::size_t j = start; j < elems.size(); ++j) {
    int wt = elems[j].weight();
    // Later factors weigh at least wt, since elements are sorted by weight.
    if (static_cast<long>(wt) * p > remaining) break;
    cur.push_back(elems[j]);
    enumerate_wedges(elems, j + 1, p - 1, remaining - wt, cur, emit);
    cur.pop_back();
  }
}

ModuleElement::Terms act_on(const AlgebraDescriptor& alg, const ModuleDescriptor& desc, const VFBasis& b,
                            const Exponent& a) {
  if (alg.flavor == Flavor::CoordinateSum) return act_coordinate(b, ModuleElement::monomial(desc, a)).terms();
  ModuleElement::Terms one;
  one.emplace(a, Rat(1));
  return detail::apply_e(desc, b.weight(), one);
}

/// Inserts b into the sorted wedge; returns the Koszul sign or 0 if b already occurs.
int insert_sorted(std::vector<VFBasis>& wedge, const VFBasis& b) {
  auto it = std::lower_bound(wedge.begin(), wedge.end(), b);
  if (it != wedge.end() && *it == b) return 0;
  auto pos = it - wedge.begin();
  wedge.insert(it, b);
  return pos % 2 == 0 ? 1 : -1;
}

SparseMat boundary_between(const AlgebraDescriptor& alg, const Coefficients& coeffs,
                           const std::vector<ChainBasisElement>& source, const std::vector<ChainBasisElement>& target) {
  std::map<ChainBasisElement, std::size_t> row_index;
  for (std::size_t i = 0; i < target.size(); ++i) row_index.emplace(target[i], i);
  SparseMat d(target.size(), source.size());
  const bool trivial = coeffs.kind == Coefficients::Kind::Trivial;
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& x = source[col].wedge;
    const auto& a = source[col].module_exponent;
    const std::size_t p = x.size();
    std::map<ChainBasisElement, Rat> image;
    auto add = [&](ChainBasisElement e, const Rat& c) {
      auto [it, inserted] = image.try_emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) image.erase(it);
      }
    };
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        const LieElement& br = brackets()(x[i], x[j]);
        if (br.is_zero()) continue;
        std::vector<VFBasis> rest;
        for (std::size_t k = 0; k < p; ++k)
          if (k != i && k != j) rest.push_back(x[k]);
        const int outer = (i + j) % 2 == 0 ? 1 : -1;
        for (const auto& [b, c] : br.terms()) {
          std::vector<VFBasis> wedge = rest;
          int sign = insert_sorted(wedge, b);
          if (sign == 0) continue;
          add({std::move(wedge), a}, Rat(outer * sign) * c);
        }
      }
    if (!trivial)
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<VFBasis> rest;
        for (std::size_t k = 0; k < p; ++k)
          if (k != i) rest.push_back(x[k]);
        const int sign = i % 2 == 0 ? -1 : 1;
        for (const auto& [m, c] : act_on(alg, coeffs.module, x[i], a)) add({rest, m}, Rat(sign) * c);
      }
    for (const auto& [e, c] : image) d.set(row_index.at(e), col, c);
  }
  return d;
}

}  // namespace

std::vector<ChainBasisElement> chain_basis(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w,
                                           std::size_t limit) {
  validate(alg, coeffs);
  std::vector<ChainBasisElement> out;
  if (p < 0) return out;
  const int min_w = alg.min_weight();
  const std::size_t r = coeffs.kind == Coefficients::Kind::Trivial ? 0 : coeffs.module.rank();
  const int top_module = coeffs.kind == Coefficients::Kind::Trivial ? 0 : w - p * min_w;
  for (int m = 0; m <= top_module; ++m) {
    const int wedge_weight = w - m;
    if (p == 0 && wedge_weight != 0) continue;
    std::vector<VFBasis> elems;
    for (int k = min_w; k <= wedge_weight - (p - 1) * min_w; ++k) {
      auto layer = basis_of_weight(alg, k);
      elems.insert(elems.end(), layer.begin(), layer.end());
    }
    std::vector<Exponent> module_part = r == 0 ? std::vector<Exponent>{Exponent{}} : monomials_of_degree(r, m);
    std::vector<VFBasis> cur;
    enumerate_wedges(elems, 0, p, wedge_weight, cur, [&](const std::vector<VFBasis>& wedge) {
      for (const auto& a : module_part) {
        if (out.size() >= limit)
          throw ResourceError("chain space " + slice_name(p, w) + " exceeds the limit of " + std::to_string(limit));
        out.push_back({wedge, a});
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparseMat ce_boundary(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w, std::size_t limit) {
  auto source = chain_basis(alg, coeffs, p, w, limit);
  auto target = chain_basis(alg, coeffs, p - 1, w, limit);
  if (p <= 0) return SparseMat(0, source.size());
  return boundary_between(alg, coeffs, source, target);
}

namespace {

/// Bases, boundaries and ranks of one weight for degrees 0..top (+1 for the incoming map).
struct WeightColumn {
  std::vector<std::size_t> dims;   // dims[p], p = 0..top+1
  std::vector<std::size_t> ranks;  // ranks[p] = rank d_p, p = 0..top+1 (ranks[0] = 0)
  std::vector<bool> d2;            // d2[p]: d_p d_{p+1} == 0
};

WeightColumn compute_column(const AlgebraDescriptor& alg, const Coefficients& coeffs, int top, int w,
                            std::size_t limit) {
  WeightColumn col;
  std::vector<std::vector<ChainBasisElement>> bases;
  for (int p = 0; p <= top + 1; ++p) bases.push_back(chain_basis(alg, coeffs, p, w, limit));
  std::vector<SparseMat> d(static_cast<std::size_t>(top + 2));
  d[0] = SparseMat(0, bases[0].size());
  for (int p = 1; p <= top + 1; ++p) d[p] = boundary_between(alg, coeffs, bases[p], bases[p - 1]);
  for (int p = 0; p <= top + 1; ++p) {
    col.dims.push_back(bases[p].size());
    col.ranks.push_back(p == 0 ? 0 : rank(d[p]));
  }
  for (int p = 0; p <= top; ++p) col.d2.push_back(p == 0 || (d[p] * d[p + 1]).is_zero());
  return col;
}

WeightSlice slice_from(const WeightColumn& col, int p, int w) {
  WeightSlice s;
  s.p = p;
  s.w = w;
  s.chain_dim = col.dims[p];
  s.rank_d_p = col.ranks[p];
  s.rank_d_next = col.ranks[p + 1];
  s.d_squared_zero = col.d2[p];
  return s;
}

}  // namespace

WeightSlice compute_slice(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w, std::size_t limit) {
  if (p < 0) throw std::invalid_argument("homological degree must be nonnegative");
  return slice_from(compute_column(alg, coeffs, p, w, limit), p, w);
}

std::size_t homology_dim(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p, int w, std::size_t limit) {
  return compute_slice(alg, coeffs, p, w, limit).homology();
}

int max_chain_degree(const AlgebraDescriptor& alg, const Coefficients& coeffs, int w) {
  validate(alg, coeffs);
  const int min_w = alg.min_weight();
  if (min_w >= 1) return std::max(0, w / min_w);
  // Finitely many fields of weight <= 0; each further factor adds weight at least 1.
  int nonpositive = 0;
  for (int k = min_w; k <= 0; ++k) nonpositive += static_cast<int>(basis_of_weight(alg, k).size());
  return nonpositive + std::max(0, w + nonpositive);
}

std::size_t HomologyTable::dim(int p, int w) const {
  auto it = slices.find({p, w});
  if (it == slices.end()) throw std::out_of_range("slice " + slice_name(p, w) + " outside the table");
  return it->second.homology();
}

std::string HomologyTable::to_csv() const {
  std::ostringstream os;
  os << "p";
  for (int w = w_min; w <= w_max; ++w) os << ",w" << w;
  os << "\n";
  for (int p = 0; p <= p_max; ++p) {
    os << p;
    for (int w = w_min; w <= w_max; ++w) os << "," << dim(p, w);
    os << "\n";
  }
  return os.str();
}

HomologyTable homology_table(const AlgebraDescriptor& alg, const Coefficients& coeffs, int p_max, int w_max,
                             const HomologyOptions& options) {
  validate(alg, coeffs);
  if (p_max < 0) throw std::invalid_argument("p_max must be nonnegative");
  HomologyTable table;
  table.algebra = alg;
  table.coefficients = coeffs;
  table.p_max = p_max;
  table.w_max = w_max;
  table.w_min = alg.min_weight() < 0 ? -std::min(p_max, static_cast<int>(alg.n)) : 0;
  const bool euler = options.euler && alg.min_weight() >= 1;

  const int count = std::max(0, w_max - table.w_min + 1);
  std::vector<WeightColumn> columns(static_cast<std::size_t>(count));
  std::vector<int> tops(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      const int w = table.w_min + i;
      int top = euler ? std::max(p_max, max_chain_degree(alg, coeffs, w)) : p_max;
      tops[i] = top;
      try {
        columns[i] = compute_column(alg, coeffs, top, w, options.max_slice_dim);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (int i = 0; i < count; ++i) {
    const int w = table.w_min + i;
    const auto& col = columns[i];
    for (int p = 0; p <= tops[i]; ++p) {
      WeightSlice s = slice_from(col, p, w);
      if (!s.d_squared_zero) table.d_squared_zero = false;
      if (p <= p_max) table.slices.emplace(std::make_pair(p, w), s);
    }
    if (euler) {
      long chains = 0, homology = 0;
      for (int p = 0; p <= tops[i]; ++p) {
        const long sign = p % 2 == 0 ? 1 : -1;
        WeightSlice s = slice_from(col, p, w);
        chains += sign * static_cast<long>(s.chain_dim);
        homology += sign * static_cast<long>(s.homology());
      }
      table.euler.emplace(w, std::make_pair(chains, homology));
      if (chains != homology || col.dims[tops[i] + 1] != 0) table.euler_ok = false;
    }
  }
  return table;
}

}  // namespace polyvf
