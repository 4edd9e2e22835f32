#pragma once

#include <vector>

#include "ncnull/realization.hpp"

namespace ncnull {

// Small explicit realizations used as resolvent representations. Each one
// checks that the base point has the expected values at its letters.

/// (1, -Y, 1): X^{-1} about X = 1, m = 1.
LinRep rep_scalar_inverse(const BasePointPtr& base, Letter x);

/// Dimension g+1 realization of X1^{-1}(1 - sum_j xs[j] ys[j]) about X1 = 1 and
/// xs, ys = 0. With `reversed` the word-reversed series
/// (1 - sum_j ys[j] xs[j]) X1^{-1} is produced by transposition.
LinRep rep_sphere_resolvent(const BasePointPtr& base, Letter x1, const std::vector<Letter>& xs,
                            const std::vector<Letter>& ys, bool reversed = false);

/// Dimension 3 realization of (X1 X2 - X2 X1)^{-1} about (P1, P2), m = 2.
LinRep rep_commutator_inverse(const BasePointPtr& base, Letter x1, Letter x2);

/// Entry (i, j) of X^{-1} for the g x g letter grid, about the identity
/// pattern: (e_i^T, -Y, e_j) of dimension g.
LinRep rep_matrix_inverse_entry(const BasePointPtr& base, const std::vector<std::vector<Letter>>& grid,
                                std::size_t i, std::size_t j);

}  // namespace ncnull
