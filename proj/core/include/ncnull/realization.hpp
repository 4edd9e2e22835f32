#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ncnull/genpoly.hpp"
#include "ncnull/ratexpr.hpp"
#include "ncnull/sparse.hpp"

namespace ncnull {

/// Expansion point of a series: one m x m matrix per alphabet slot.
class BasePoint {
 public:
  BasePoint(AlphabetPtr alpha, std::vector<MatrixExact> per_slot);
  /// Binds `point` per StarRule (adjoint: conjugate transposes fill starred slots).
  static std::shared_ptr<const BasePoint> make(AlphabetPtr alpha, const std::vector<MatrixExact>& point,
                                               StarRule rule = StarRule::formal);

  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  const AlphabetPtr& scalar_alphabet() const noexcept { return scalar_alpha_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t slots() const noexcept { return matrices_.size(); }
  const MatrixExact& at(std::size_t slot) const { return matrices_.at(slot); }
  const std::vector<MatrixExact>& matrices() const noexcept { return matrices_; }

  friend bool operator==(const BasePoint& a, const BasePoint& b) {
    return *a.alpha_ == *b.alpha_ && a.matrices_ == b.matrices_;
  }

 private:
  AlphabetPtr alpha_;
  AlphabetPtr scalar_alpha_;
  std::size_t m_;
  std::vector<MatrixExact> matrices_;
};

using BasePointPtr = std::shared_ptr<const BasePoint>;

/// Element sum_t a_t Y b_t of the bimodule generated by one letter.
class BimoduleElem {
 public:
  BimoduleElem(Letter letter, std::size_t m) : letter_(letter), m_(m) {}

  Letter letter() const noexcept { return letter_; }
  std::size_t m() const noexcept { return m_; }
  const std::vector<std::pair<MatrixExact, MatrixExact>>& terms() const noexcept { return terms_; }
  void add_term(MatrixExact a, MatrixExact b);

  /// N_ij = sum_t col_i(a_t) row_j(b_t): the image of E_ij under Y -> element.
  MatrixExact entry_image(std::size_t i, std::size_t j) const;
  /// Rebuilds a minimal term list (at most m^2 terms) from the m^2 images.
  static BimoduleElem from_images(Letter letter, const std::vector<MatrixExact>& images);
  /// Same element, rank-factored.
  BimoduleElem compressed() const;
  bool is_zero() const;

 private:
  Letter letter_;
  std::size_t m_;
  std::vector<std::pair<MatrixExact, MatrixExact>> terms_;
};

/// Matrix-reduced representation: coefficient of the scalar word l1..lk is
/// C * A[l1] * ... * A[lk] * B.
struct ScalarRep {
  AlphabetPtr alphabet;  ///< scalarized letters
  std::size_t m = 1;
  MatrixExact C;                 ///< m x N
  std::vector<SparseMatrix> A;   ///< one N x N matrix per scalar letter
  MatrixExact B;                 ///< N x m

  std::size_t dimension() const { return B.rows(); }
};

/// Linear representation (c, A, b) of dimension n over M_m about a base point.
/// Stored matrix-reduced: C is c flattened, A[(slot,i,j)] collects the
/// coefficient of y^{(slot)}_{ij}, B is b flattened.
class LinRep {
 public:
  LinRep(BasePointPtr base, std::size_t n);

  const BasePointPtr& base() const noexcept { return base_; }
  const AlphabetPtr& alphabet() const noexcept { return base_->alphabet(); }
  std::size_t m() const noexcept { return base_->m(); }
  std::size_t dimension() const noexcept { return n_; }
  std::size_t state_size() const noexcept { return n_ * base_->m(); }

  const MatrixExact& C() const noexcept { return C_; }
  const MatrixExact& B() const noexcept { return B_; }
  const SparseMatrix& A(std::size_t scalar_letter_index) const { return A_.at(scalar_letter_index); }
  const std::vector<SparseMatrix>& A_all() const noexcept { return A_; }

  MatrixExact c_block(std::size_t p) const;
  MatrixExact b_block(std::size_t q) const;
  BimoduleElem bimodule(std::size_t slot, std::size_t p, std::size_t q) const;
  /// [S, 1] = c b.
  MatrixExact constant_term() const { return C_ * B_; }

  /// Assembles from raw matrix-reduced data; dimensions are checked.
  static LinRep from_parts(BasePointPtr base, MatrixExact C, std::vector<SparseMatrix> A, MatrixExact B);
  /// Pads a scalar representation to a multiple of m.
  static LinRep from_scalar(BasePointPtr base, const ScalarRep& s);

 private:
  BasePointPtr base_;
  std::size_t n_;
  MatrixExact C_;
  std::vector<SparseMatrix> A_;
  MatrixExact B_;
};

/// Incremental construction of a LinRep from blocks and bimodule terms.
class LinRepBuilder {
 public:
  LinRepBuilder(BasePointPtr base, std::size_t n);
  LinRepBuilder& c(std::size_t p, const MatrixExact& a);
  LinRepBuilder& b(std::size_t q, const MatrixExact& a);
  /// Adds a Y_slot b to the (p, q) entry of A.
  LinRepBuilder& add(std::size_t p, std::size_t q, Letter letter, const MatrixExact& a, const MatrixExact& b);
  /// Scalar shorthand: adds coeff * Y_slot to A_pq.
  LinRepBuilder& add(std::size_t p, std::size_t q, Letter letter, const Scalar& coeff);
  LinRep build() const;

 private:
  BasePointPtr base_;
  std::size_t n_;
  MatrixExact C_;
  MatrixExact B_;
  std::vector<std::vector<SparseMatrix::Triplet>> A_;
};

// Construction calculus.
LinRep rep_const(BasePointPtr base, const MatrixExact& a);
LinRep rep_var(BasePointPtr base, Letter letter, const MatrixExact& shift);
/// S1 + a * S2.
LinRep rep_add(const LinRep& s1, const MatrixExact& a, const LinRep& s2);
/// sum_k a_k * S_k, block diagonal.
LinRep rep_sum(const std::vector<LinRep>& reps, const std::vector<MatrixExact>& scales);
/// a * S.
LinRep rep_scale(const MatrixExact& a, const LinRep& s);
LinRep rep_mul(const LinRep& s1, const LinRep& s2);
/// Throws SingularConstantTerm when [S,1] is singular.
LinRep rep_inv(const LinRep& s);

struct CompileOptions {
  /// Minimize every intermediate representation (keeps dimensions small).
  bool minimize = false;
  /// Letters compiled to the given representation instead of rep_var.
  const std::map<Letter, LinRep>* letter_reps = nullptr;
};

/// Represents e(p + y). Throws DomainError when p is outside the domain.
LinRep compile(const RatExpr& e, const BasePointPtr& base, const CompileOptions& opts = {});

/// [S, w] for a word over the original letters, by generalized-polynomial
/// arithmetic on the bimodule terms.
GenPoly coefficient(const LinRep& s, const Word& w);

ScalarRep scalarize(const LinRep& s);

/// Krylov closure of span(B) under all A, with early exit.
bool is_zero(const LinRep& s);
bool is_zero(const ScalarRep& s);
/// Cross-check: every coefficient [S, w] with |w| < m n vanishes.
bool is_zero_by_enumeration(const LinRep& s);

/// True iff C A^w B agree for every scalar word of length <= max_len.
bool coefficients_agree(const LinRep& a, const LinRep& b, std::size_t max_len);

/// c (I - sum A(Y))^{-1} b with Y_k = point_k - p_k (x) I_s. The point binds
/// one matrix per slot (formal) or per base letter (adjoint).
MatrixExact eval_rep(const LinRep& s, const std::vector<MatrixExact>& point, StarRule rule = StarRule::formal);

struct MinimizeResult {
  ScalarRep rep;
  std::size_t n_min = 0;
};
/// Reachable then observable restriction of the scalarized representation.
MinimizeResult minimize_scalar(const LinRep& s);
/// minimize_scalar followed by from_scalar.
LinRep minimize(const LinRep& s);

/// Reduced-echelon row reduction in place; returns pivot columns.
std::vector<std::size_t> rref(MatrixExact& a);

}  // namespace ncnull
