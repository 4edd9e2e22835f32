#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncnull/matrix.hpp"

namespace ncnull {

using Vector = std::vector<Scalar>;

/// Compressed-row exact matrix. The realization engine stores its transition
/// matrices this way; they are overwhelmingly zero.
class SparseMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Duplicates are summed; zeros dropped.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const MatrixExact& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }
  bool is_zero() const noexcept { return values_.empty(); }

  MatrixExact to_dense() const;
  /// Appends this matrix, shifted by (r0, c0), to `out`.
  void emit(std::vector<Triplet>& out, std::size_t r0, std::size_t c0) const;

  Vector apply(const Vector& v) const;            ///< A v
  Vector apply_left(const Vector& v) const;       ///< v^T A
  MatrixExact times(const MatrixExact& b) const;  ///< A B, B dense
  MatrixExact left_times(const MatrixExact& c) const;  ///< C A, C dense

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = row_ptr_.empty() ? 0 : row_ptr_[r]; k < (row_ptr_.empty() ? 0 : row_ptr_[r + 1]); ++k)
        f(r, static_cast<std::size_t>(cols_idx_[k]), values_[k]);
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_;  // empty when there are no entries
  std::vector<std::uint32_t> cols_idx_;
  std::vector<Scalar> values_;
};

}  // namespace ncnull
