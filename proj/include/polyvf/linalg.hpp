#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "polyvf/mpoly.hpp"
#include "polyvf/rational.hpp"

namespace polyvf {

/// Sparse vector over Q: index -> nonzero value.
using SparseVec = std::map<std::size_t, Rat>;

/// Sparse matrix over Q with no explicit zeros.
class SparseMat {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  static SparseMat identity(std::size_t n);
  static SparseMat from_dense(const std::vector<std::vector<Rat>>& rows);
  static SparseMat from_columns(std::size_t rows, const std::vector<SparseVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Key, Rat>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Rat get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& v);
  void add(std::size_t r, std::size_t c, const Rat& v);

  SparseMat transpose() const;
  std::vector<SparseVec> row_vectors() const;
  std::vector<SparseVec> column_vectors() const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  bool operator==(const SparseMat& o) const = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0, cols_ = 0;
  std::map<Key, Rat> entries_;
};

/// Incremental row echelon form over Q, kept as primitive integer rows
/// (fraction-free elimination with content removal).
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  /// Adds v to the spanning set; returns true when the rank grew.
  bool insert(const SparseVec& v);
  /// True when v lies in the current span.
  bool contains(const SparseVec& v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  using Row = std::vector<std::pair<std::size_t, Int>>;
  Row reduce(Row v) const;

  std::size_t dim_;
  std::map<std::size_t, Row> pivots_;
};

std::size_t rank(const SparseMat& m);
/// Basis of the right null space; always cols() - rank() vectors.
std::vector<std::vector<Rat>> kernel_basis(const SparseMat& m);
/// Exact determinant of a square matrix by fraction-free elimination.
Rat determinant(const SparseMat& m);

/// Dense matrix of polynomials, the symbolic counterpart of SparseMat.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const MPoly& zero);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MPoly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MPoly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<MPoly> data_;
};

/// Determinant by Bareiss elimination with exact polynomial division.
/// Pivots are chosen among the nonzero candidates with the fewest terms.
MPoly det_symbolic(const PolyMatrix& m);

}  // namespace polyvf
