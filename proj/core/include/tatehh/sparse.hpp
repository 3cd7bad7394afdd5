#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tatehh/field.hpp"

namespace tatehh {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Exact sparse matrix in compressed-column form. Entries are unique per
/// (row, col), never zero, and sorted by (col, row).
class SparseMatrix {
 public:
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Duplicates are summed; resulting zeros are dropped.
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

  static SparseMatrix identity(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  /// Half-open range of entry indices of column `c`.
  std::size_t col_begin(std::size_t c) const { return col_start_[c]; }
  std::size_t col_end(std::size_t c) const { return col_start_[c + 1]; }
  std::size_t row_index(std::size_t k) const { return row_idx_[k]; }
  const Scalar& value(std::size_t k) const { return values_[k]; }

  /// Zero when absent.
  Scalar at(std::size_t row, std::size_t col) const;
  std::vector<Triplet> triplets() const;

  SparseMatrix transpose() const;
  bool is_zero() const { return values_.empty(); }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> col_start_;
  std::vector<std::size_t> row_idx_;
  std::vector<Scalar> values_;
};

/// Incremental column-by-column assembly; `add` may repeat a position.
class ColumnAssembler {
 public:
  ColumnAssembler(FieldSpec field, std::size_t rows, std::size_t cols);
  void add(std::size_t row, std::size_t col, const Scalar& value);
  SparseMatrix finish() &&;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Triplet> entries_;
};

/// a * b; UsageError on shape or field mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct RankOptions {
  /// Over the rationals, first compute the rank modulo a 61-bit prime per
  /// block; a block whose modular rank equals min(rows, cols) needs no exact
  /// elimination since reduction can only lower the rank.
  bool modular_prepass = true;
};

/// Exact rank over the matrix's field.
std::size_t rank(const SparseMatrix& m, const RankOptions& options = {});

inline std::size_t kernel_dim(const SparseMatrix& m, const RankOptions& options = {}) {
  return m.cols() - rank(m, options);
}

/// Coordinate text format: header "rows cols nnz", then "row col value" lines.
void write_coordinate(std::ostream& os, const SparseMatrix& m);
SparseMatrix read_coordinate(std::istream& is, const FieldSpec& field);

/// A finite window C_top -> ... -> C_bottom of a chain complex in
/// homological convention: the map out of degree n lands in degree n - 1.
class ChainComplexWindow {
 public:
  /// `dims[k]` is the dimension of degree top - k; `maps[k]` goes from degree
  /// top - k to top - k - 1. Throws ValidationError on a shape mismatch, or
  /// when `check_composition` is set and some adjacent composite is nonzero.
  ChainComplexWindow(int top_degree, std::vector<std::size_t> dims, std::vector<SparseMatrix> maps,
                     bool check_composition = true);

  int top_degree() const { return top_; }
  int bottom_degree() const { return top_ - static_cast<int>(dims_.size()) + 1; }
  std::size_t dim(int degree) const;
  /// The differential out of `degree`.
  const SparseMatrix& out_map(int degree) const;
  bool is_interior(int degree) const { return degree < top_ && degree > bottom_degree(); }

  bool composition_is_zero() const;

  /// dim ker(out) - rank(in). UsageError at a window boundary.
  std::size_t homology_dim(int degree, const RankOptions& options = {}) const;
  /// Homology at every interior degree, each rank computed once.
  std::map<int, std::size_t> homology_dims(const RankOptions& options = {}) const;

 private:
  int top_;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> maps_;
};

}  // namespace tatehh
