#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncnull/ratexpr.hpp"
#include "ncnull/rng.hpp"

namespace ncnull {

enum class DomainKind { unitaries, spherical, partitioned, xgn, unrestricted };

std::string to_string(DomainKind k);
/// Throws Error on an unknown name.
DomainKind domain_kind_from_string(const std::string& s);

/// Class of matrix tuples to sample. `g` counts base letters for unitaries,
/// spherical and xgn, and blocks per side for partitioned.
struct SampleDomain {
  DomainKind kind = DomainKind::unrestricted;
  std::size_t g = 1;
};

/// Complex Gaussian matrix with unit-variance entries.
MatrixFloat gaussian_matrix(std::size_t rows, std::size_t cols, CounterRng& rng);

/// Orthonormalizes the columns (modified Gram-Schmidt, two passes). The
/// diagonal of R comes out real positive, so no phase correction is left.
MatrixFloat orthonormal_columns(const MatrixFloat& a);

MatrixFloat haar_unitary(std::size_t n, CounterRng& rng);
MatrixFloat haar_unitary(std::size_t n, std::uint64_t seed);

/// A_1..A_g of size n with sum A_j^* A_j = I.
std::vector<MatrixFloat> spherical_isometry_tuple(std::size_t g, std::size_t n, CounterRng& rng);
std::vector<MatrixFloat> spherical_isometry_tuple(std::size_t g, std::size_t n, std::uint64_t seed);

/// Blocks [i][j] of a Haar unitary of size g n.
std::vector<std::vector<MatrixFloat>> partitioned_unitary(std::size_t g, std::size_t n, CounterRng& rng);
std::vector<std::vector<MatrixFloat>> partitioned_unitary(std::size_t g, std::size_t n, std::uint64_t seed);

/// (A, B) with sum A_k B_k = I_n. Throws ConditioningFailure when B_1 stays
/// ill-conditioned after 20 draws.
std::pair<std::vector<MatrixFloat>, std::vector<MatrixFloat>> xgn_point(std::size_t g, std::size_t n, CounterRng& rng);
std::pair<std::vector<MatrixFloat>, std::vector<MatrixFloat>> xgn_point(std::size_t g, std::size_t n,
                                                                       std::uint64_t seed);

/// Structural residual of a sample (max entry of the defining identity minus I).
double unitary_residual(const MatrixFloat& u);
double spherical_residual(const std::vector<MatrixFloat>& a);
double partitioned_residual(const std::vector<std::vector<MatrixFloat>>& blocks);
double xgn_residual(const std::vector<MatrixFloat>& a, const std::vector<MatrixFloat>& b);

/// A sample bound to an alphabet: one matrix per base letter with the adjoint
/// rule on starred alphabets, one per slot otherwise.
template <typename M>
struct DomainPoint {
  std::vector<M> matrices;
  StarRule rule = StarRule::formal;
};

/// Number of base letters the domain fills: g, g, g^2, 2g; unrestricted
/// takes whatever the alphabet asks for.
std::size_t domain_letters(const SampleDomain& d, const Alphabet& alpha);

/// Throws SizeMismatch when the alphabet does not fit the domain.
DomainPoint<MatrixFloat> sample_point(const SampleDomain& d, const Alphabet& alpha, std::size_t size, CounterRng& rng);

/// Exact points: signed permutations with entries in {1, -1, i, -i} for the
/// unitary-type domains, small Gaussian-integer matrices for unrestricted.
/// xgn is not supported (Error).
MatrixExact exact_unitary(std::size_t n, CounterRng& rng);
DomainPoint<MatrixExact> sample_exact_point(const SampleDomain& d, const Alphabet& alpha, std::size_t size,
                                            CounterRng& rng);

/// Stream index of trial `trial` at size `size`.
std::uint64_t trial_stream(std::size_t size, std::size_t trial);

enum class FalsifyMode { nonzero, negative_eigenvalue };

struct FalsifyOptions {
  std::size_t min_size = 1;
  std::size_t max_size = 4;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  FalsifyMode mode = FalsifyMode::nonzero;
  double tol = 1e-8;
};

struct FalsifyWitness {
  std::size_t size = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<MatrixFloat> point;
  StarRule rule = StarRule::formal;
  MatrixFloat value;
  /// Frobenius norm (nonzero mode) or least Hermitian eigenvalue.
  double score = 0.0;
};

/// First sample, smallest size then smallest trial, where the value is
/// nonzero or has a Hermitian part with an eigenvalue below -tol.
std::optional<FalsifyWitness> falsify(const NcPoly& f, const SampleDomain& d, const FalsifyOptions& opts);
std::optional<FalsifyWitness> falsify(const RatExpr& f, const SampleDomain& d, const FalsifyOptions& opts);

/// A, B of size m + n + 1 with B^m A^n != 0, AB = 0, B^{m+1} = 0 = A^{n+1}.
/// Throws Error when m = n = 0.
std::pair<MatrixExact, MatrixExact> zero_divisor_witness(std::size_t m, std::size_t n);

/// Checks the four relations exactly.
bool check_zero_divisor_relations(const MatrixExact& a, const MatrixExact& b, std::size_t m, std::size_t n);

}  // namespace ncnull
