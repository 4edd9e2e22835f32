#include "ncnull/sparse.hpp"

#include <algorithm>

namespace ncnull {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<std::size_t> counts(rows + 1, 0);
  for (std::size_t k = 0; k < triplets.size();) {
    const std::size_t r = triplets[k].row, c = triplets[k].col;
    if (r >= rows || c >= cols) throw DimensionMismatch("sparse triplet out of range");
    Scalar sum = std::move(triplets[k].value);
    std::size_t e = k + 1;
    for (; e < triplets.size() && triplets[e].row == r && triplets[e].col == c; ++e) sum += triplets[e].value;
    if (!sum.is_zero()) {
      cols_idx_.push_back(static_cast<std::uint32_t>(c));
      values_.push_back(std::move(sum));
      ++counts[r + 1];
    }
    k = e;
  }
  if (values_.empty()) return;
  row_ptr_ = std::move(counts);
  for (std::size_t r = 0; r < rows; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

SparseMatrix SparseMatrix::from_dense(const MatrixExact& a) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) t.push_back({i, j, a(i, j)});
  return SparseMatrix(a.rows(), a.cols(), std::move(t));
}

MatrixExact SparseMatrix::to_dense() const {
  MatrixExact r(rows_, cols_);
  for_each([&](std::size_t i, std::size_t j, const Scalar& v) { r(i, j) = v; });
  return r;
}

void SparseMatrix::emit(std::vector<Triplet>& out, std::size_t r0, std::size_t c0) const {
  for_each([&](std::size_t i, std::size_t j, const Scalar& v) { out.push_back({r0 + i, c0 + j, v}); });
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("sparse apply");
  Vector r(rows_);
  if (row_ptr_.empty()) return r;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const Scalar& x = v[cols_idx_[k]];
      if (!x.is_zero()) r[i] += values_[k] * x;
    }
  return r;
}

Vector SparseMatrix::apply_left(const Vector& v) const {
  if (v.size() != rows_) throw DimensionMismatch("sparse apply_left");
  Vector r(cols_);
  if (row_ptr_.empty()) return r;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) r[cols_idx_[k]] += v[i] * values_[k];
  }
  return r;
}

MatrixExact SparseMatrix::times(const MatrixExact& b) const {
  if (b.rows() != cols_) throw DimensionMismatch("sparse times dense");
  MatrixExact r(rows_, b.cols());
  if (row_ptr_.empty()) return r;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& x = b(cols_idx_[k], j);
        if (!x.is_zero()) r(i, j) += values_[k] * x;
      }
  return r;
}

MatrixExact SparseMatrix::left_times(const MatrixExact& c) const {
  if (c.cols() != rows_) throw DimensionMismatch("dense times sparse");
  MatrixExact r(c.rows(), cols_);
  if (row_ptr_.empty()) return r;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t p = 0; p < c.rows(); ++p) {
      const Scalar& x = c(p, i);
      if (x.is_zero()) continue;
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) r(p, cols_idx_[k]) += x * values_[k];
    }
  return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ && a.cols_idx_ == b.cols_idx_ &&
         a.values_ == b.values_;
}

}  // namespace ncnull
