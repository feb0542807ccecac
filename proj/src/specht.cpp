#include "polyvf/specht.hpp"

#include <algorithm>
#include <set>

#include "polyvf/errors.hpp"
#include "polyvf/linalg.hpp"

namespace polyvf {

namespace {

void check_univariate(const MPoly& p) {
  if (p.num_vars() != 1) throw DimensionMismatch("substitution polynomial must be univariate");
  if (p.coefficient(Exponent{0}) != 0) throw std::invalid_argument("substitution polynomial must vanish at 0");
}

/// p(x_i) inside the ring of `vars`.
MPoly embed(const MPoly& p, const std::vector<std::string>& vars, std::size_t i) {
  MPoly out(vars);
  for (const auto& [e, c] : p.terms()) out.add_term(unit(vars.size(), i, e[0]), c);
  return out;
}

SparseVec coordinates(const MPoly& f, const std::map<Exponent, std::size_t>& index) {
  SparseVec v;
  for (const auto& [e, c] : f.terms()) v.emplace(index.at(e), c);
  return v;
}

std::map<Exponent, std::size_t> monomial_index(std::size_t n, int w) {
  std::map<Exponent, std::size_t> index;
  auto mons = monomials_of_degree(n, w);
  for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
  return index;
}

}  // namespace

std::size_t TSpace::dim(int w) const {
  auto it = graded_basis.find(w);
  return it == graded_basis.end() ? 0 : it->second.size();
}

std::vector<std::size_t> TSpace::dims() const {
  std::vector<std::size_t> out;
  for (int w = 0; w <= cutoff; ++w) out.push_back(dim(w));
  return out;
}

bool TSpace::contains_homogeneous(const MPoly& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw std::invalid_argument("membership test needs a homogeneous polynomial");
  const int w = f.total_degree();
  if (w > cutoff) throw std::out_of_range("weight beyond the stored cutoff");
  auto index = monomial_index(n, w);
  Echelon ech(index.size());
  auto it = graded_basis.find(w);
  if (it != graded_basis.end())
    for (const auto& b : it->second) ech.insert(coordinates(b, index));
  return ech.contains(coordinates(f, index));
}

MPoly substitute(const MPoly& f, const MPoly& p) {
  check_univariate(p);
  const auto& vars = f.variables();
  std::vector<std::vector<MPoly>> powers(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) powers[i].push_back(MPoly::constant(vars, 1));
  MPoly out(vars);
  for (const auto& [e, c] : f.terms()) {
    MPoly term = MPoly::constant(vars, c);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * embed(p, vars, i));
      if (e[i] > 0) term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

HomogeneousSplit homogeneous_split(const MPoly& f, const std::vector<int>& degrees, std::vector<Rat> lambdas) {
  const std::size_t k = degrees.size();
  if (std::set<int>(degrees.begin(), degrees.end()).size() != k) throw std::invalid_argument("degrees must be distinct");
  for (int d : f.degrees())
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
      throw std::invalid_argument("polynomial has a component of unlisted degree " + std::to_string(d));
  if (lambdas.empty())
    for (std::size_t i = 0; i < k; ++i) lambdas.emplace_back(static_cast<long>(i + 1));
  if (lambdas.size() != k) throw DimensionMismatch("one lambda per degree");
  if (std::set<Rat>(lambdas.begin(), lambdas.end()).size() != k)
    throw std::invalid_argument("repeated lambda makes the Vandermonde matrix singular");

  // substitute(f, lambda_i t) = sum_j lambda_i^{d_j} f_j; invert V_{ij} = lambda_i^{d_j}.
  std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(2 * k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rat v = 1;
      for (int t = 0; t < degrees[j]; ++t) v *= lambdas[i];
      aug[i][j] = v;
    }
    aug[i][k + i] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && aug[piv][c] == 0) ++piv;
    if (piv == k) throw std::invalid_argument("singular Vandermonde matrix (a lambda is zero)");
    std::swap(aug[c], aug[piv]);
    Rat inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rat factor = aug[r][c];
      for (std::size_t t = 0; t < 2 * k; ++t) aug[r][t] -= factor * aug[c][t];
    }
  }
  HomogeneousSplit out;
  out.degrees = degrees;
  out.lambdas = lambdas;
  // Row j of V^{-1} expresses f_j through the substituted copies.
  std::vector<MPoly> copies;
  for (const auto& l : lambdas) copies.push_back(substitute(f, MPoly::monomial({"t"}, Exponent{1}, l)));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> row(aug[j].begin() + static_cast<long>(k), aug[j].end());
    MPoly comp(f.variables());
    for (std::size_t i = 0; i < k; ++i)
      if (row[i] != 0) comp += copies[i] * row[i];
    out.weights.push_back(std::move(row));
    out.components.push_back(std::move(comp));
  }
  return out;
}

MPoly infinitesimal_act(const MPoly& p, const MPoly& f) {
  check_univariate(p);
  MPoly out(f.variables());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    MPoly df = f.derivative(i);
    if (!df.is_zero()) out += embed(p, f.variables(), i) * df;
  }
  return out;
}

MPoly t_power(int k) { return MPoly::monomial({"t"}, Exponent{k + 1}, Rat(1)); }

TSpace closure_basis(const std::vector<MPoly>& generators, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  TSpace ts;
  ts.cutoff = cutoff;
  std::vector<std::string> vars;
  if (!generators.empty()) {
    vars = generators.front().variables();
    ts.n = vars.size();
  }
  std::map<int, std::vector<MPoly>> seeds;
  for (const auto& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
    if (g.variables() != vars) throw DimensionMismatch("generators live in different rings");
    auto degrees = g.degrees();
    for (auto& comp : homogeneous_split(g, degrees).components)
      if (comp.total_degree() <= cutoff) seeds[comp.total_degree()].push_back(std::move(comp));
  }
  for (int w = 0; w <= cutoff; ++w) {
    auto index = monomial_index(ts.n, w);
    Echelon ech(index.size());
    std::vector<MPoly> basis;
    auto offer = [&](const MPoly& f) {
      if (!f.is_zero() && ech.insert(coordinates(f, index))) basis.push_back(f * (1 / f.leading_coefficient()));
    };
    for (const auto& s : seeds[w]) offer(s);
    for (int k = 1; k <= w; ++k) {
      auto it = ts.graded_basis.find(w - k);
      if (it == ts.graded_basis.end()) continue;
      for (const auto& f : it->second) offer(infinitesimal_act(t_power(k), f));
    }
    if (!basis.empty()) ts.graded_basis.emplace(w, std::move(basis));
  }
  return ts;
}

TSpaceSeries tspace_series(const TSpace& ts, int m) {
  TSpaceSeries out;
  out.dims = ts.dims();
  out.denominator_order = m > 0 ? m : std::max<int>(static_cast<int>(ts.n), 1);
  UPoly den = UPoly::constant(1);
  for (int i = 1; i <= out.denominator_order; ++i) den = den * (UPoly::constant(1) - UPoly::x_power(i));
  std::vector<Rat> prod(out.dims.size(), Rat(0));
  for (std::size_t a = 0; a < out.dims.size(); ++a)
    for (int j = 0; j <= den.degree() && a + j < prod.size(); ++j)
      prod[a + j] += Rat(static_cast<unsigned long>(out.dims[a])) * den.coefficient(j);
  int last = -1;
  for (std::size_t a = 0; a < prod.size(); ++a)
    if (prod[a] != 0) last = static_cast<int>(a);
  out.numerator_degree = last;
  out.verified_window = ts.cutoff - last;
  if (out.verified_window >= out.denominator_order) {
    std::vector<Rat> num(prod.begin(), prod.begin() + (last + 1));
    out.fit = RationalSeries(UPoly(num), den);
  }
  return out;
}

bool substitution_closed(const TSpace& ts, const MPoly& p) {
  check_univariate(p);
  for (const auto& [w, basis] : ts.graded_basis)
    for (const auto& f : basis) {
      MPoly image = substitute(f, p);
      for (int d : image.degrees())
        if (d <= ts.cutoff && !ts.contains_homogeneous(image.homogeneous_component(d))) return false;
    }
  return true;
}

}  // namespace polyvf
