#include "polyvf/linalg.hpp"

#include <algorithm>
#include <ranges>
#include <stdexcept>

#include "polyvf/errors.hpp"

namespace polyvf {

SparseMat SparseMat::identity(std::size_t n) {
  SparseMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

SparseMat SparseMat::from_dense(const std::vector<std::vector<Rat>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

SparseMat SparseMat::from_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
  SparseMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m.set(r, c, v);
  return m;
}

void SparseMat::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
}

Rat SparseMat::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

void SparseMat::set(std::size_t r, std::size_t c, const Rat& v) {
  check(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMat::add(std::size_t r, std::size_t c, const Rat& v) {
  check(r, c);
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols_, rows_);
  for (const auto& [k, v] : entries_) t.entries_.emplace(Key{k.second, k.first}, v);
  return t;
}

std::vector<SparseVec> SparseMat::row_vectors() const {
  std::vector<SparseVec> out(rows_);
  for (const auto& [k, v] : entries_) out[k.first].emplace_hint(out[k.first].end(), k.second, v);
  return out;
}

std::vector<SparseVec> SparseMat::column_vectors() const {
  std::vector<SparseVec> out(cols_);
  for (const auto& [k, v] : entries_) out[k.second].emplace(k.first, v);
  return out;
}

std::vector<Rat> SparseMat::apply(const std::vector<Rat>& x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  std::vector<Rat> y(rows_, Rat(0));
  for (const auto& [k, v] : entries_) y[k.first] += v * x[k.second];
  return y;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  SparseMat out(a.rows_, b.cols_);
  auto brows = b.row_vectors();
  for (const auto& [k, v] : a.entries_)
    for (const auto& [c, w] : brows[k.second]) out.add(k.first, c, v * w);
  return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Int>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [i, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [i, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVec& v) {
  IntRow row;
  row.reserve(v.size());
  Int den = 1;
  for (const auto& [i, q] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& [i, q] : v) {
    if (q == 0) continue;
    Int x = den / q.get_den();
    x *= q.get_num();
    row.emplace_back(i, std::move(x));
  }
  make_primitive(row);
  return row;
}

// a * x - b * y, merged by index.
IntRow combine(const Int& a, const IntRow& x, const Int& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Int t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      t = a * x[i].second;
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), y[j].second.get_mpz_t());
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Echelon::Row Echelon::reduce(Row v) const {
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) break;
    const Row& p = it->second;
    Int a = p.front().second, b = v.front().second;
    Int g = gcd(a, b);
    a /= g;
    b /= g;
    v = combine(a, v, b, p);
    make_primitive(v);
  }
  return v;
}

bool Echelon::insert(const SparseVec& v) {
  for (const auto& [i, q] : v)
    if (i >= dim_) throw std::out_of_range("vector index beyond echelon dimension");
  Row r = reduce(to_int_row(v));
  if (r.empty()) return false;
  std::size_t lead = r.front().first;
  pivots_.emplace(lead, std::move(r));
  return true;
}

bool Echelon::contains(const SparseVec& v) const { return reduce(to_int_row(v)).empty(); }

std::size_t rank(const SparseMat& m) {
  bool by_rows = m.rows() <= m.cols();
  auto vecs = by_rows ? m.row_vectors() : m.column_vectors();
  Echelon e(by_rows ? m.cols() : m.rows());
  // Sparser vectors first keeps fill-in low.
  std::stable_sort(vecs.begin(), vecs.end(), [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

std::vector<std::vector<Rat>> kernel_basis(const SparseMat& m) {
  // Gauss-Jordan over Q on sparse rows.
  auto rows = m.row_vectors();
  std::vector<std::pair<std::size_t, SparseVec>> pivot_rows;  // (pivot column, normalized row)
  for (auto& row : rows) {
    for (const auto& [col, prow] : pivot_rows) {
      auto it = row.find(col);
      if (it == row.end()) continue;
      Rat f = it->second;
      for (const auto& [c, v] : prow) {
        auto [jt, inserted] = row.try_emplace(c, -f * v);
        if (!inserted) {
          jt->second -= f * v;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
    if (row.empty()) continue;
    std::size_t col = row.begin()->first;
    Rat inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    // Keep earlier pivot rows fully reduced.
    for (auto& [pc, prow] : pivot_rows) {
      auto it = prow.find(col);
      if (it == prow.end()) continue;
      Rat f = it->second;
      for (const auto& [c, v] : row) {
        auto [jt, inserted] = prow.try_emplace(c, -f * v);
        if (!inserted) {
          jt->second -= f * v;
          if (jt->second == 0) prow.erase(jt);
        }
      }
    }
    pivot_rows.emplace_back(col, std::move(row));
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [c, r] : pivot_rows) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(m.cols(), Rat(0));
    x[free] = 1;
    for (const auto& [c, prow] : pivot_rows) {
      auto it = prow.find(free);
      if (it != prow.end()) x[c] = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rat determinant(const SparseMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
  auto rows = m.row_vectors();
  Rat scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Int den = common_denominator(rows[r] | std::views::values);
    scale /= den;
    for (const auto& [c, q] : rows[r]) a[r][c] = (den / q.get_den()) * q.get_num();
  }
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return Rat(0);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[k][k] * a[i][j];
        mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat det(a[n - 1][n - 1] * sign);
  return det * scale;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const MPoly& zero)
    : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("polynomial matrix product shape mismatch");
  MPoly zero(a.data_.empty() ? std::vector<std::string>{} : a.data_.front().variables());
  PolyMatrix out(a.rows_, b.cols_, zero);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) out.at(i, j) += a.at(i, k) * b.at(k, j);
  return out;
}

MPoly det_symbolic(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<std::string> vars = n ? m.at(0, 0).variables() : std::vector<std::string>{};
  if (n == 0) return MPoly::constant(vars, Rat(1));
  std::vector<std::vector<MPoly>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
  MPoly prev = MPoly::constant(vars, Rat(1));
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][k].is_zero() && (best == n || a[i][k].size() < a[best][k].size())) best = i;
    if (best == n) return MPoly(vars);
    if (best != k) {
      std::swap(a[k], a[best]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(t, prev);
        if (!q) throw std::logic_error("Bareiss step was not exact");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MPoly(vars);
    }
    prev = a[k][k];
  }
  return a[n - 1][n - 1] * Rat(sign);
}

}  // namespace polyvf
