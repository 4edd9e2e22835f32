#include "ncnull/realization.hpp"

#include <functional>

namespace ncnull {

// ---------------------------------------------------------------- helpers

std::vector<std::size_t> rref(MatrixExact& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

namespace {

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Echelon basis kept in insertion order; vectors are stored reduced against
/// their predecessors with a unit pivot.
class Subspace {
 public:
  explicit Subspace(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return basis_.size(); }
  const Vector& operator[](std::size_t i) const { return basis_[i]; }

  void reduce(Vector& v, Vector* coords) const {
    if (coords) coords->assign(basis_.size(), Scalar());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (f.is_zero()) continue;
      if (coords) (*coords)[i] = f;
      for (std::size_t k : support_[i]) v[k] -= f * basis_[i][k];
    }
  }

  /// Returns false when v already lies in the span.
  bool insert(Vector v) {
    reduce(v, nullptr);
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const Scalar inv = v[p].inverse();
    std::vector<std::size_t> sup;
    for (std::size_t k = p; k < n_; ++k)
      if (!v[k].is_zero()) {
        v[k] *= inv;
        sup.push_back(k);
      }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    support_.push_back(std::move(sup));
    return true;
  }

  Vector coordinates(Vector v) const {
    Vector c;
    reduce(v, &c);
    if (!is_zero_vector(v)) throw Error("vector outside the subspace");
    return c;
  }

 private:
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
};

Vector column(const MatrixExact& a, std::size_t j) {
  Vector v(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j);
  return v;
}

Vector row_of(const MatrixExact& a, std::size_t i) {
  Vector v(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) v[j] = a(i, j);
  return v;
}

bool c_kills(const MatrixExact& C, const Vector& v) {
  for (std::size_t i = 0; i < C.rows(); ++i) {
    Scalar s;
    for (std::size_t j = 0; j < C.cols(); ++j)
      if (!v[j].is_zero() && !C(i, j).is_zero()) s += C(i, j) * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

void emit_dense(std::vector<SparseMatrix::Triplet>& out, const MatrixExact& d, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) out.push_back({r0 + i, c0 + j, d(i, j)});
}

void require_same_base(const LinRep& a, const LinRep& b) {
  if (a.base() == b.base()) return;
  if (!(*a.base() == *b.base())) throw BasepointMismatch("representations about different base points");
}

}  // namespace

// ---------------------------------------------------------------- BasePoint

BasePoint::BasePoint(AlphabetPtr alpha, std::vector<MatrixExact> per_slot)
    : alpha_(std::move(alpha)), m_(0), matrices_(std::move(per_slot)) {
  if (matrices_.size() != alpha_->slots())
    throw MissingLetter("base point needs one matrix per letter slot (" + std::to_string(alpha_->slots()) + ")");
  if (matrices_.empty()) throw MissingLetter("base point is empty");
  m_ = matrices_.front().rows();
  if (m_ == 0) throw SizeMismatch("base point matrices must be nonempty");
  for (const auto& p : matrices_)
    if (p.rows() != m_ || p.cols() != m_) throw SizeMismatch("base point matrices must share one square size");
  scalar_alpha_ = scalarized_alphabet(*alpha_, m_);
}

std::shared_ptr<const BasePoint> BasePoint::make(AlphabetPtr alpha, const std::vector<MatrixExact>& point,
                                                 StarRule rule) {
  auto bound = bind_point(*alpha, point, rule);
  return std::make_shared<const BasePoint>(std::move(alpha), std::move(bound));
}

// ---------------------------------------------------------------- BimoduleElem

void BimoduleElem::add_term(MatrixExact a, MatrixExact b) {
  if (a.rows() != m_ || a.cols() != m_ || b.rows() != m_ || b.cols() != m_)
    throw DimensionMismatch("bimodule coefficients must be m x m");
  terms_.emplace_back(std::move(a), std::move(b));
}

MatrixExact BimoduleElem::entry_image(std::size_t i, std::size_t j) const {
  MatrixExact r(m_, m_);
  for (const auto& [a, b] : terms_)
    for (std::size_t row = 0; row < m_; ++row) {
      if (a(row, i).is_zero()) continue;
      for (std::size_t col = 0; col < m_; ++col)
        if (!b(j, col).is_zero()) r(row, col) += a(row, i) * b(j, col);
    }
  return r;
}

BimoduleElem BimoduleElem::from_images(Letter letter, const std::vector<MatrixExact>& images) {
  std::size_t m = 1;
  while (m * m < images.size()) ++m;
  if (m * m != images.size()) throw DimensionMismatch("need m^2 entry images");
  // M[(r,i),(j,c)] = N_ij[r][c]; a rank factorization gives the terms.
  MatrixExact M(m * m, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) M(r * m + i, j * m + c) = images[i * m + j](r, c);
  MatrixExact R = M;
  const auto piv = rref(R);
  BimoduleElem e(letter, m);
  for (std::size_t t = 0; t < piv.size(); ++t) {
    MatrixExact a(m, m), b(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < m; ++i) a(r, i) = M(r * m + i, piv[t]);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < m; ++c) b(j, c) = R(t, j * m + c);
    e.add_term(std::move(a), std::move(b));
  }
  return e;
}

BimoduleElem BimoduleElem::compressed() const {
  std::vector<MatrixExact> images;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) images.push_back(entry_image(i, j));
  return from_images(letter_, images);
}

bool BimoduleElem::is_zero() const { return compressed().terms().empty(); }

// ---------------------------------------------------------------- LinRep

LinRep::LinRep(BasePointPtr base, std::size_t n)
    : base_(std::move(base)),
      n_(n),
      C_(base_->m(), n * base_->m()),
      A_(base_->slots() * base_->m() * base_->m(), SparseMatrix(n * base_->m(), n * base_->m())),
      B_(n * base_->m(), base_->m()) {}

MatrixExact LinRep::c_block(std::size_t p) const { return C_.block(0, p * m(), m(), m()); }
MatrixExact LinRep::b_block(std::size_t q) const { return B_.block(q * m(), 0, m(), m()); }

BimoduleElem LinRep::bimodule(std::size_t slot, std::size_t p, std::size_t q) const {
  const std::size_t mm = m();
  std::vector<MatrixExact> images;
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) {
      MatrixExact img(mm, mm);
      A_[scalar_letter(slot, i, j, mm)].for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
        if (r / mm == p && c / mm == q) img(r % mm, c % mm) = v;
      });
      images.push_back(std::move(img));
    }
  return BimoduleElem::from_images(alphabet()->letter_at(slot), images);
}

LinRep LinRep::from_parts(BasePointPtr base, MatrixExact C, std::vector<SparseMatrix> A, MatrixExact B) {
  const std::size_t m = base->m();
  const std::size_t N = B.rows();
  if (N % m != 0) throw DimensionMismatch("state size must be a multiple of m");
  if (C.rows() != m || C.cols() != N || B.cols() != m) throw DimensionMismatch("C/B shapes");
  if (A.size() != base->slots() * m * m) throw DimensionMismatch("wrong number of transition matrices");
  for (const auto& a : A)
    if (a.rows() != N || a.cols() != N) throw DimensionMismatch("transition matrix shape");
  LinRep r(std::move(base), N / m);
  r.C_ = std::move(C);
  r.A_ = std::move(A);
  r.B_ = std::move(B);
  return r;
}

LinRep LinRep::from_scalar(BasePointPtr base, const ScalarRep& s) {
  const std::size_t m = base->m();
  if (s.m != m) throw DimensionMismatch("scalar representation has a different m");
  if (s.A.size() != base->slots() * m * m) throw DimensionMismatch("scalar representation letter count");
  const std::size_t N = s.dimension();
  const std::size_t n = (N + m - 1) / m;
  const std::size_t P = n * m;
  MatrixExact C(m, P), B(P, m);
  C.set_block(0, 0, s.C);
  B.set_block(0, 0, s.B);
  std::vector<SparseMatrix> A;
  A.reserve(s.A.size());
  for (const auto& a : s.A) {
    std::vector<SparseMatrix::Triplet> t;
    a.emit(t, 0, 0);
    A.emplace_back(P, P, std::move(t));
  }
  return from_parts(std::move(base), std::move(C), std::move(A), std::move(B));
}

// ---------------------------------------------------------------- builder

LinRepBuilder::LinRepBuilder(BasePointPtr base, std::size_t n)
    : base_(std::move(base)),
      n_(n),
      C_(base_->m(), n * base_->m()),
      B_(n * base_->m(), base_->m()),
      A_(base_->slots() * base_->m() * base_->m()) {}

LinRepBuilder& LinRepBuilder::c(std::size_t p, const MatrixExact& a) {
  C_.set_block(0, p * base_->m(), a);
  return *this;
}

LinRepBuilder& LinRepBuilder::b(std::size_t q, const MatrixExact& a) {
  B_.set_block(q * base_->m(), 0, a);
  return *this;
}

LinRepBuilder& LinRepBuilder::add(std::size_t p, std::size_t q, Letter letter, const MatrixExact& a,
                                  const MatrixExact& b) {
  const std::size_t m = base_->m();
  if (p >= n_ || q >= n_) throw DimensionMismatch("block index out of range");
  const std::size_t slot = base_->alphabet()->slot(letter);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto& out = A_[scalar_letter(slot, i, j, m)];
      for (std::size_t r = 0; r < m; ++r) {
        if (a(r, i).is_zero()) continue;
        for (std::size_t c = 0; c < m; ++c)
          if (!b(j, c).is_zero()) out.push_back({p * m + r, q * m + c, a(r, i) * b(j, c)});
      }
    }
  return *this;
}

LinRepBuilder& LinRepBuilder::add(std::size_t p, std::size_t q, Letter letter, const Scalar& coeff) {
  const auto I = MatrixExact::identity(base_->m());
  return add(p, q, letter, I * coeff, I);
}

LinRep LinRepBuilder::build() const {
  const std::size_t N = n_ * base_->m();
  std::vector<SparseMatrix> A;
  A.reserve(A_.size());
  for (const auto& t : A_) A.emplace_back(N, N, t);
  return LinRep::from_parts(base_, C_, std::move(A), B_);
}

// ---------------------------------------------------------------- calculus

LinRep rep_const(BasePointPtr base, const MatrixExact& a) {
  const std::size_t m = base->m();
  if (a.rows() != m || a.cols() != m) throw DimensionMismatch("constant must be m x m");
  return LinRepBuilder(std::move(base), 1).c(0, a).b(0, MatrixExact::identity(m)).build();
}

LinRep rep_var(BasePointPtr base, Letter letter, const MatrixExact& shift) {
  const std::size_t m = base->m();
  if (shift.rows() != m || shift.cols() != m) throw DimensionMismatch("shift must be m x m");
  const auto I = MatrixExact::identity(m);
  return LinRepBuilder(std::move(base), 2).c(0, I).c(1, shift).add(0, 1, letter, Scalar(1)).b(1, I).build();
}

LinRep rep_sum(const std::vector<LinRep>& reps, const std::vector<MatrixExact>& scales) {
  if (reps.empty() || reps.size() != scales.size()) throw DimensionMismatch("rep_sum needs matching operands");
  for (std::size_t k = 1; k < reps.size(); ++k) require_same_base(reps[0], reps[k]);
  const auto& base = reps[0].base();
  const std::size_t m = base->m();
  std::size_t N = 0;
  for (const auto& r : reps) N += r.state_size();
  MatrixExact C(m, N), B(N, m);
  std::vector<std::vector<SparseMatrix::Triplet>> T(reps[0].A_all().size());
  std::size_t off = 0;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& r = reps[k];
    C.set_block(0, off, scales[k] * r.C());
    B.set_block(off, 0, r.B());
    for (std::size_t l = 0; l < T.size(); ++l) r.A(l).emit(T[l], off, off);
    off += r.state_size();
  }
  std::vector<SparseMatrix> A;
  A.reserve(T.size());
  for (auto& t : T) A.emplace_back(N, N, std::move(t));
  return LinRep::from_parts(base, std::move(C), std::move(A), std::move(B));
}

LinRep rep_add(const LinRep& s1, const MatrixExact& a, const LinRep& s2) {
  return rep_sum({s1, s2}, {MatrixExact::identity(s1.m()), a});
}

LinRep rep_scale(const MatrixExact& a, const LinRep& s) {
  return LinRep::from_parts(s.base(), a * s.C(), s.A_all(), s.B());
}

LinRep rep_mul(const LinRep& s1, const LinRep& s2) {
  require_same_base(s1, s2);
  const std::size_t m = s1.m();
  const std::size_t N1 = s1.state_size(), N2 = s2.state_size(), N = N1 + N2;
  const MatrixExact B1C2 = s1.B() * s2.C();  // N1 x N2
  MatrixExact C(m, N), B(N, m);
  C.set_block(0, 0, s1.C());
  C.set_block(0, N1, s1.C() * B1C2);
  B.set_block(N1, 0, s2.B());
  std::vector<SparseMatrix> A;
  A.reserve(s1.A_all().size());
  for (std::size_t l = 0; l < s1.A_all().size(); ++l) {
    std::vector<SparseMatrix::Triplet> t;
    const auto& a1 = s1.A(l);
    if (!a1.is_zero()) {
      a1.emit(t, 0, 0);
      emit_dense(t, a1.times(s1.B()) * s2.C(), 0, N1);
    }
    s2.A(l).emit(t, N1, N1);
    A.emplace_back(N, N, std::move(t));
  }
  return LinRep::from_parts(s1.base(), std::move(C), std::move(A), std::move(B));
}

LinRep rep_inv(const LinRep& s) {
  const std::size_t m = s.m();
  const std::size_t N = s.state_size();
  MatrixExact ai;
  try {
    ai = s.constant_term().inverse();
  } catch (const SingularMatrix&) {
    throw SingularConstantTerm("constant term is not invertible");
  }
  const MatrixExact aiC = ai * s.C();
  MatrixExact C(m, N + m), B(N + m, m);
  C.set_block(0, 0, -aiC);
  C.set_block(0, N, ai);
  B.set_block(N, 0, MatrixExact::identity(m));
  std::vector<SparseMatrix> A;
  A.reserve(s.A_all().size());
  for (std::size_t l = 0; l < s.A_all().size(); ++l) {
    const auto& a = s.A(l);
    std::vector<SparseMatrix::Triplet> t;
    if (!a.is_zero()) {
      const MatrixExact AB = a.times(s.B());
      a.emit(t, 0, 0);
      emit_dense(t, -(AB * aiC), 0, 0);
      emit_dense(t, AB * ai, 0, N);
    }
    A.emplace_back(N + m, N + m, std::move(t));
  }
  return LinRep::from_parts(s.base(), std::move(C), std::move(A), std::move(B));
}

// ---------------------------------------------------------------- compile

namespace {

struct Compiler {
  const BasePointPtr& base;
  const CompileOptions& opts;
  std::vector<std::size_t> path;

  LinRep finish(LinRep r) const { return opts.minimize ? minimize(r) : r; }

  LinRep child(const RatExpr& e, std::size_t i) {
    path.push_back(i);
    LinRep r = (*this)(e.children()[i]);
    path.pop_back();
    return r;
  }

  LinRep operator()(const RatExpr& e) {
    const std::size_t m = base->m();
    const auto I = MatrixExact::identity(m);
    switch (e.kind()) {
      case RatExpr::Kind::Const:
        return rep_const(base, I * e.value());
      case RatExpr::Kind::Var: {
        if (opts.letter_reps) {
          const auto it = opts.letter_reps->find(e.letter());
          if (it != opts.letter_reps->end()) return it->second;
        }
        return rep_var(base, e.letter(), base->at(base->alphabet()->slot(e.letter())));
      }
      case RatExpr::Kind::Neg:
        return rep_scale(-I, child(e, 0));
      case RatExpr::Kind::Add: {
        std::vector<LinRep> parts;
        std::vector<MatrixExact> scales;
        for (std::size_t i = 0; i < e.children().size(); ++i) {
          const RatExpr& c = e.children()[i];
          if (c.kind() == RatExpr::Kind::Neg) {
            path.push_back(i);
            parts.push_back(child(c, 0));
            path.pop_back();
            scales.push_back(-I);
          } else {
            parts.push_back(child(e, i));
            scales.push_back(I);
          }
        }
        return finish(rep_sum(parts, scales));
      }
      case RatExpr::Kind::Mul: {
        LinRep r = child(e, 0);
        for (std::size_t i = 1; i < e.children().size(); ++i) r = finish(rep_mul(r, child(e, i)));
        return r;
      }
      case RatExpr::Kind::Inv: {
        LinRep c = child(e, 0);
        try {
          return finish(rep_inv(c));
        } catch (const SingularConstantTerm&) {
          throw DomainError("base point outside the domain: singular constant term under " + format_expression(e),
                            path, format_expression(e));
        }
      }
    }
    throw Error("unreachable expression kind");
  }
};

}  // namespace

LinRep compile(const RatExpr& e, const BasePointPtr& base, const CompileOptions& opts) {
  require_same(e.alphabet(), base->alphabet());
  Compiler c{base, opts, {}};
  return c(e);
}

// ---------------------------------------------------------------- coefficients

GenPoly coefficient(const LinRep& s, const Word& w) {
  const auto& base = s.base();
  const auto& salpha = base->scalar_alphabet();
  const std::size_t n = s.dimension();
  std::vector<GenPoly> v;
  v.reserve(n);
  for (std::size_t p = 0; p < n; ++p) v.push_back(GenPoly::constant(salpha, s.c_block(p)));
  for (const auto& letter : w.letters()) {
    const std::size_t slot = base->alphabet()->slot(letter);
    std::vector<GenPoly> next(n, GenPoly(salpha, s.m()));
    for (std::size_t p = 0; p < n; ++p) {
      if (v[p].is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) {
        const BimoduleElem e = s.bimodule(slot, p, q);
        for (const auto& [a, b] : e.terms()) next[q] += (v[p] * a).times_letter(slot) * b;
      }
    }
    v = std::move(next);
  }
  GenPoly r(salpha, s.m());
  for (std::size_t q = 0; q < n; ++q)
    if (!v[q].is_zero()) r += v[q] * s.b_block(q);
  return r;
}

ScalarRep scalarize(const LinRep& s) {
  return ScalarRep{s.base()->scalar_alphabet(), s.m(), s.C(), s.A_all(), s.B()};
}

// ---------------------------------------------------------------- zero test

bool is_zero(const ScalarRep& s) {
  const std::size_t N = s.dimension();
  if (N == 0) return true;
  Subspace sub(N);
  for (std::size_t j = 0; j < s.B.cols(); ++j) {
    Vector v = column(s.B, j);
    if (!c_kills(s.C, v)) return false;
    sub.insert(std::move(v));
  }
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (const auto& a : s.A) {
      if (a.is_zero()) continue;
      Vector w = a.apply(sub[i]);
      if (is_zero_vector(w)) continue;
      if (!c_kills(s.C, w)) return false;
      sub.insert(std::move(w));
    }
  }
  return true;
}

bool is_zero(const LinRep& s) { return is_zero(scalarize(s)); }

bool is_zero_by_enumeration(const LinRep& s) {
  const std::size_t bound = s.m() * s.dimension();
  for (std::size_t len = 0; len < bound; ++len)
    for (const auto& w : words_of_length(*s.alphabet(), len))
      if (!coefficient(s, w).is_zero()) return false;
  return true;
}

bool coefficients_agree(const LinRep& a, const LinRep& b, std::size_t max_len) {
  const LinRep d = rep_add(a, -MatrixExact::identity(a.m()), b);
  const auto& A = d.A_all();
  std::function<bool(const MatrixExact&, std::size_t)> walk = [&](const MatrixExact& U, std::size_t depth) {
    if (!(U * d.B()).is_zero()) return false;
    if (depth == max_len) return true;
    for (const auto& a_l : A) {
      if (a_l.is_zero()) continue;
      MatrixExact next = a_l.left_times(U);
      if (next.is_zero()) continue;
      if (!walk(next, depth + 1)) return false;
    }
    return true;
  };
  return walk(d.C(), 0);
}

// ---------------------------------------------------------------- evaluation

MatrixExact eval_rep(const LinRep& s, const std::vector<MatrixExact>& point, StarRule rule) {
  const auto& base = *s.base();
  const auto bound = bind_point(*base.alphabet(), point, rule);
  const std::size_t m = base.m();
  const std::size_t big = bound.front().rows();
  if (big % m != 0) throw SizeMismatch("evaluation size must be a multiple of m");
  const std::size_t sz = big / m;
  const std::size_t N = s.state_size();
  if (N == 0) return MatrixExact(big, big);
  MatrixExact Aev(N * sz, N * sz);
  for (std::size_t k = 0; k < bound.size(); ++k) {
    const MatrixExact Y = bound[k] - base.at(k).kron_identity(sz);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const auto& a = s.A(scalar_letter(k, i, j, m));
        if (a.is_zero()) continue;
        const MatrixExact Yb = Y.block(i * sz, j * sz, sz, sz);
        if (Yb.is_zero()) continue;
        a.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
          for (std::size_t x = 0; x < sz; ++x)
            for (std::size_t y = 0; y < sz; ++y)
              if (!Yb(x, y).is_zero()) Aev(r * sz + x, c * sz + y) += v * Yb(x, y);
        });
      }
  }
  const MatrixExact M = MatrixExact::identity(N * sz) - Aev;
  MatrixExact X;
  try {
    X = M.solve(s.B().kron_identity(sz));
  } catch (const SingularMatrix&) {
    throw ResolventSingular("I - A(Y) is singular at this point");
  }
  return s.C().kron_identity(sz) * X;
}

// ---------------------------------------------------------------- minimization

MinimizeResult minimize_scalar(const LinRep& s) {
  const ScalarRep in = scalarize(s);
  const std::size_t N = in.dimension();
  const std::size_t m = in.m;
  const std::size_t L = in.A.size();

  Subspace reach(N);
  for (std::size_t j = 0; j < m && N > 0; ++j) reach.insert(column(in.B, j));
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (const auto& a : in.A) {
      if (a.is_zero()) continue;
      Vector w = a.apply(reach[i]);
      if (!is_zero_vector(w)) reach.insert(std::move(w));
    }
  const std::size_t r = reach.size();

  std::vector<SparseMatrix> T;
  T.reserve(L);
  for (const auto& a : in.A) {
    std::vector<SparseMatrix::Triplet> t;
    if (!a.is_zero())
      for (std::size_t j = 0; j < r; ++j) {
        const Vector c = reach.coordinates(a.apply(reach[j]));
        for (std::size_t i = 0; i < r; ++i)
          if (!c[i].is_zero()) t.push_back({i, j, c[i]});
      }
    T.emplace_back(r, r, std::move(t));
  }
  MatrixExact B1(r, m), C1(m, r);
  for (std::size_t j = 0; j < m && N > 0; ++j) {
    const Vector c = reach.coordinates(column(in.B, j));
    for (std::size_t i = 0; i < r; ++i) B1(i, j) = c[i];
  }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Scalar acc;
      for (std::size_t x = 0; x < N; ++x)
        if (!reach[j][x].is_zero() && !in.C(k, x).is_zero()) acc += in.C(k, x) * reach[j][x];
      C1(k, j) = acc;
    }

  Subspace obs(r);
  for (std::size_t k = 0; k < m && r > 0; ++k) obs.insert(row_of(C1, k));
  for (std::size_t i = 0; i < obs.size(); ++i)
    for (const auto& t : T) {
      if (t.is_zero()) continue;
      Vector u = t.apply_left(obs[i]);
      if (!is_zero_vector(u)) obs.insert(std::move(u));
    }
  const std::size_t w = obs.size();

  ScalarRep out{in.alphabet, m, MatrixExact(m, w), {}, MatrixExact(w, m)};
  out.A.reserve(L);
  for (const auto& t : T) {
    std::vector<SparseMatrix::Triplet> trip;
    if (!t.is_zero())
      for (std::size_t i = 0; i < w; ++i) {
        const Vector c = obs.coordinates(t.apply_left(obs[i]));
        for (std::size_t k = 0; k < w; ++k)
          if (!c[k].is_zero()) trip.push_back({i, k, c[k]});
      }
    out.A.emplace_back(w, w, std::move(trip));
  }
  for (std::size_t k = 0; k < m && r > 0; ++k) {
    const Vector c = obs.coordinates(row_of(C1, k));
    for (std::size_t i = 0; i < w; ++i) out.C(k, i) = c[i];
  }
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Scalar acc;
      for (std::size_t x = 0; x < r; ++x)
        if (!obs[i][x].is_zero() && !B1(x, j).is_zero()) acc += obs[i][x] * B1(x, j);
      out.B(i, j) = acc;
    }
  return {std::move(out), w};
}

LinRep minimize(const LinRep& s) { return LinRep::from_scalar(s.base(), minimize_scalar(s).rep); }

}  // namespace ncnull
