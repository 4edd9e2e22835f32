#include "ncnull/handbuilt.hpp"

namespace ncnull {

namespace {

void expect_scalar(const BasePointPtr& base, Letter l, long value) {
  if (base->m() != 1) throw BasepointMismatch("expected a scalar base point");
  if (base->at(base->alphabet()->slot(l))(0, 0) != Scalar(value))
    throw BasepointMismatch("base point value at " + base->alphabet()->name(l) + " must be " + std::to_string(value));
}

MatrixExact one() { return MatrixExact::identity(1); }

}  // namespace

LinRep rep_scalar_inverse(const BasePointPtr& base, Letter x) {
  expect_scalar(base, x, 1);
  return LinRepBuilder(base, 1).c(0, one()).add(0, 0, x, Scalar(-1)).b(0, one()).build();
}

LinRep rep_sphere_resolvent(const BasePointPtr& base, Letter x1, const std::vector<Letter>& xs,
                            const std::vector<Letter>& ys, bool reversed) {
  if (xs.size() != ys.size()) throw DimensionMismatch("letter lists differ in length");
  expect_scalar(base, x1, 1);
  for (const auto& l : xs) expect_scalar(base, l, 0);
  for (const auto& l : ys) expect_scalar(base, l, 0);
  const std::size_t n = xs.size() + 2;
  LinRepBuilder b(base, n);
  b.add(0, 0, x1, Scalar(-1));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!reversed) {
      b.add(0, k + 2, xs[k], Scalar(-1));
      b.add(k + 2, 1, ys[k], Scalar(1));
    } else {
      b.add(k + 2, 0, xs[k], Scalar(-1));
      b.add(1, k + 2, ys[k], Scalar(1));
    }
  }
  if (!reversed) {
    b.c(0, one()).b(0, one()).b(1, one());
  } else {
    b.c(0, one()).c(1, one()).b(0, one());
  }
  return b.build();
}

LinRep rep_commutator_inverse(const BasePointPtr& base, Letter x1, Letter x2) {
  if (base->m() != 2) throw BasepointMismatch("expected a 2 x 2 base point");
  const auto& alpha = *base->alphabet();
  const MatrixExact P1 = base->at(alpha.slot(x1));
  const MatrixExact P2 = base->at(alpha.slot(x2));
  MatrixExact Q;
  try {
    Q = (P1 * P2 - P2 * P1).inverse();
  } catch (const SingularMatrix&) {
    throw SingularConstantTerm("commutator is singular at the base point");
  }
  const auto I = MatrixExact::identity(2);
  LinRepBuilder b(base, 3);
  b.c(0, Q).b(0, I);
  // A^{Y1} = [[-Y1 P2 Q + P2 Y1 Q, Y1, 0], [0, 0, 0], [-Y1 Q, 0, 0]]
  b.add(0, 0, x1, -I, P2 * Q).add(0, 0, x1, P2, Q).add(0, 1, x1, I, I).add(2, 0, x1, -I, Q);
  // A^{Y2} = [[Y2 P1 Q - P1 Y2 Q, 0, -Y2], [-Y2 Q, 0, 0], [0, 0, 0]]
  b.add(0, 0, x2, I, P1 * Q).add(0, 0, x2, -P1, Q).add(0, 2, x2, -I, I).add(1, 0, x2, -I, Q);
  return b.build();
}

LinRep rep_matrix_inverse_entry(const BasePointPtr& base, const std::vector<std::vector<Letter>>& grid,
                                std::size_t i, std::size_t j) {
  const std::size_t g = grid.size();
  if (i >= g || j >= g) throw DimensionMismatch("entry index out of range");
  LinRepBuilder b(base, g);
  for (std::size_t k = 0; k < g; ++k) {
    if (grid[k].size() != g) throw DimensionMismatch("letter grid must be square");
    for (std::size_t l = 0; l < g; ++l) {
      expect_scalar(base, grid[k][l], k == l ? 1 : 0);
      b.add(k, l, grid[k][l], Scalar(-1));
    }
  }
  return b.c(i, one()).b(j, one()).build();
}

}  // namespace ncnull
