#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncnull/errors.hpp"
#include "ncnull/scalar.hpp"

namespace ncnull {

using Complex = std::complex<double>;

/// Per-entry-type hooks used by the dense matrix template.
template <class T>
struct EntryTraits;

template <>
struct EntryTraits<Scalar> {
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static Scalar conj(const Scalar& x) { return x.conj(); }
  static Scalar inverse(const Scalar& x) { return x.inverse(); }
  static constexpr bool exact = true;
};

template <>
struct EntryTraits<Complex> {
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static Complex inverse(const Complex& x) { return 1.0 / x; }
  static constexpr bool exact = false;
};

/// Dense row-major matrix. Values are immutable in practice: every operation
/// returns a fresh matrix.
template <class T>
class Matrix {
 public:
  using value_type = T;
  using Traits = EntryTraits<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
  }
  /// Row-list literal, e.g. {{1, 1}, {-1, 0}}.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// E_{ij} of size n (zero-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& entries() const noexcept { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!Traits::is_zero(x)) return false;
    return true;
  }

  Matrix conjugate_transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = Traits::conj((*this)(i, j));
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!Traits::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!Traits::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      if (!Traits::is_zero(x)) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  /// Exact (or floating) product; zero entries on the left are skipped.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!Traits::is_zero(bkj)) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// a (x) I_s, the embedding M_m -> M_{ms}.
  Matrix kron_identity(std::size_t s) const {
    Matrix r(rows_ * s, cols_ * s);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (Traits::is_zero(x)) continue;
        for (std::size_t k = 0; k < s; ++k) r(i * s + k, j * s + k) = x;
      }
    return r;
  }

  /// Gaussian elimination. Exact entries pivot on the first nonzero entry of
  /// the column; floating entries use partial pivoting with a relative
  /// threshold. Throws SingularMatrix.
  Matrix inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of non-square " + shape());
    return solve(identity(rows_));
  }

  /// Solves (*this) X = rhs for square *this.
  Matrix solve(const Matrix& rhs) const {
    if (!is_square()) throw DimensionMismatch("solve with non-square " + shape());
    if (rhs.rows_ != rows_) throw DimensionMismatch("solve right-hand side " + rhs.shape());
    const std::size_t n = rows_, k = rhs.cols_;
    Matrix a = *this;
    Matrix x = rhs;
    double scale = 0.0;
    if constexpr (!Traits::exact) {
      for (const auto& v : a.data_) scale = std::max(scale, std::abs(v));
      if (scale == 0.0) scale = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = n;
      if constexpr (Traits::exact) {
        for (std::size_t r = col; r < n; ++r)
          if (!Traits::is_zero(a(r, col))) {
            piv = r;
            break;
          }
      } else {
        double best = 0.0;
        for (std::size_t r = col; r < n; ++r)
          if (std::abs(a(r, col)) > best) {
            best = std::abs(a(r, col));
            piv = r;
          }
        if (best <= 1e-14 * scale) piv = n;
      }
      if (piv == n) throw SingularMatrix("matrix is singular");
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
        for (std::size_t j = 0; j < k; ++j) std::swap(x(piv, j), x(col, j));
      }
      const T inv = Traits::inverse(a(col, col));
      for (std::size_t j = col; j < n; ++j)
        if (!Traits::is_zero(a(col, j))) a(col, j) *= inv;
      for (std::size_t j = 0; j < k; ++j)
        if (!Traits::is_zero(x(col, j))) x(col, j) *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || Traits::is_zero(a(r, col))) continue;
        const T f = a(r, col);
        for (std::size_t j = col; j < n; ++j)
          if (!Traits::is_zero(a(col, j))) a(r, j) -= f * a(col, j);
        for (std::size_t j = 0; j < k; ++j)
          if (!Traits::is_zero(x(col, j))) x(r, j) -= f * x(col, j);
      }
    }
    return x;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("shape " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixExact = Matrix<Scalar>;
using MatrixFloat = Matrix<Complex>;

MatrixFloat to_float(const MatrixExact& a);

/// Frobenius norm.
double frobenius_norm(const MatrixFloat& a);

/// Largest entry modulus; the residual measure used by the sampler checks.
double max_abs(const MatrixFloat& a);

/// Eigenvalues (ascending) of the Hermitian part (A + A^*)/2, by cyclic
/// Jacobi on the real symmetric embedding.
std::vector<double> hermitian_eigenvalues(const MatrixFloat& a);

/// Default floating residual tolerance.
inline constexpr double kFloatTolerance = 1e-10;

}  // namespace ncnull
