#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "facenum/field.hpp"

namespace facenum {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Elem value;

  bool operator==(const MatrixEntry&) const = default;
};

// Sparse matrix over a finite field, stored column by column. Every stored
// entry is nonzero and reduced; indices are always in range.
class MatrixOverField {
 public:
  using Column = std::vector<std::pair<std::size_t, Elem>>;

  MatrixOverField(FieldSpec field, std::size_t rows, std::size_t cols);

  static MatrixOverField identity(const FieldSpec& field, std::size_t n);
  // Duplicate positions are summed. Throws BadIndex for out-of-range entries.
  static MatrixOverField from_entries(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                      const std::vector<MatrixEntry>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const FieldSpec& field() const noexcept { return field_; }

  Elem get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Elem value);
  void add_to(std::size_t row, std::size_t col, Elem value);
  // Appends a column; pairs may be unsorted and contain duplicates or zeros.
  std::size_t append_column(Column column);
  const Column& column(std::size_t col) const { return columns_.at(col); }

  // Column-major order.
  std::vector<MatrixEntry> entries() const;
  std::size_t nonzeros() const noexcept;

  MatrixOverField transpose() const;
  // [this | other]; throws ShapeMismatch / FieldMismatch.
  MatrixOverField hconcat(const MatrixOverField& other) const;
  MatrixOverField multiply(const MatrixOverField& other) const;
  MatrixOverField select_columns(const std::vector<std::size_t>& cols) const;

 private:
  void check(std::size_t row, std::size_t col) const;

  FieldSpec field_;
  std::size_t rows_;
  std::vector<Column> columns_;
};

std::size_t rank(const MatrixOverField& m);
std::size_t kernel_dim(const MatrixOverField& m);
// Columns form a basis of the right kernel {x : Mx = 0}.
MatrixOverField kernel_basis(const MatrixOverField& m);
// dim(span U + span V) for column generators.
std::size_t sum_dim(const MatrixOverField& u, const MatrixOverField& v);
// dim((span A + span B) / span B) = rank[A|B] - rank B.
std::size_t image_dim_mod(const MatrixOverField& a, const MatrixOverField& b);

}  // namespace facenum
