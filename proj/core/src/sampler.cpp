#include "ncnull/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ncnull/errors.hpp"

namespace ncnull {

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::unitaries:
      return "unitaries";
    case DomainKind::spherical:
      return "spherical";
    case DomainKind::partitioned:
      return "partitioned";
    case DomainKind::xgn:
      return "xgn";
    case DomainKind::unrestricted:
      return "unrestricted";
  }
  return "?";
}

DomainKind domain_kind_from_string(const std::string& s) {
  for (DomainKind k : {DomainKind::unitaries, DomainKind::spherical, DomainKind::partitioned, DomainKind::xgn,
                       DomainKind::unrestricted})
    if (to_string(k) == s) return k;
  throw Error("unknown sample domain '" + s + "'");
}

MatrixFloat gaussian_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
  MatrixFloat a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.complex_normal();
  return a;
}

MatrixFloat orthonormal_columns(const MatrixFloat& a) {
  const std::size_t r = a.rows(), c = a.cols();
  if (c > r) throw DimensionMismatch("cannot orthonormalize " + a.shape());
  MatrixFloat q = a;
  for (std::size_t k = 0; k < c; ++k) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < r; ++i) dot += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < r; ++i) q(i, k) -= dot * q(i, j);
      }
    double norm = 0.0;
    for (std::size_t i = 0; i < r; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw SingularMatrix("rank-deficient sample");
    for (std::size_t i = 0; i < r; ++i) q(i, k) /= norm;
  }
  return q;
}

MatrixFloat haar_unitary(std::size_t n, CounterRng& rng) { return orthonormal_columns(gaussian_matrix(n, n, rng)); }

MatrixFloat haar_unitary(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  return haar_unitary(n, rng);
}

std::vector<MatrixFloat> spherical_isometry_tuple(std::size_t g, std::size_t n, CounterRng& rng) {
  const MatrixFloat v = orthonormal_columns(gaussian_matrix(g * n, n, rng));
  std::vector<MatrixFloat> out;
  for (std::size_t j = 0; j < g; ++j) out.push_back(v.block(j * n, 0, n, n));
  return out;
}

std::vector<MatrixFloat> spherical_isometry_tuple(std::size_t g, std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  return spherical_isometry_tuple(g, n, rng);
}

namespace {

template <class T>
std::vector<std::vector<Matrix<T>>> split_blocks(const Matrix<T>& u, std::size_t g, std::size_t n) {
  std::vector<std::vector<Matrix<T>>> out(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) out[i].push_back(u.block(i * n, j * n, n, n));
  return out;
}

template <class T>
std::vector<Matrix<T>> flatten(const std::vector<std::vector<Matrix<T>>>& blocks) {
  std::vector<Matrix<T>> out;
  for (const auto& row : blocks)
    for (const auto& b : row) out.push_back(b);
  return out;
}

double cond_estimate(const MatrixFloat& b) {
  try {
    return frobenius_norm(b) * frobenius_norm(b.inverse());
  } catch (const SingularMatrix&) {
    return INFINITY;
  }
}

}  // namespace

std::vector<std::vector<MatrixFloat>> partitioned_unitary(std::size_t g, std::size_t n, CounterRng& rng) {
  return split_blocks(haar_unitary(g * n, rng), g, n);
}

std::vector<std::vector<MatrixFloat>> partitioned_unitary(std::size_t g, std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  return partitioned_unitary(g, n, rng);
}

std::pair<std::vector<MatrixFloat>, std::vector<MatrixFloat>> xgn_point(std::size_t g, std::size_t n,
                                                                       CounterRng& rng) {
  if (g == 0) throw GOutOfRange("xgn needs g >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(g * n));
  std::vector<MatrixFloat> a(g), b(g);
  for (std::size_t k = 1; k < g; ++k) {
    a[k] = gaussian_matrix(n, n, rng) * Complex(scale);
    b[k] = gaussian_matrix(n, n, rng);
  }
  for (int attempt = 0; attempt < 20; ++attempt) {
    b[0] = gaussian_matrix(n, n, rng);
    if (cond_estimate(b[0]) > 1e6) continue;
    MatrixFloat rest = MatrixFloat::identity(n);
    for (std::size_t k = 1; k < g; ++k) rest -= a[k] * b[k];
    a[0] = rest * b[0].inverse();
    return {a, b};
  }
  throw ConditioningFailure("B_1 stayed ill-conditioned after 20 draws");
}

std::pair<std::vector<MatrixFloat>, std::vector<MatrixFloat>> xgn_point(std::size_t g, std::size_t n,
                                                                       std::uint64_t seed) {
  CounterRng rng(seed);
  return xgn_point(g, n, rng);
}

double unitary_residual(const MatrixFloat& u) {
  return std::max(max_abs(u.conjugate_transpose() * u - MatrixFloat::identity(u.rows())),
                  max_abs(u * u.conjugate_transpose() - MatrixFloat::identity(u.rows())));
}

double spherical_residual(const std::vector<MatrixFloat>& a) {
  if (a.empty()) return 0.0;
  MatrixFloat s(a[0].cols(), a[0].cols());
  for (const auto& x : a) s += x.conjugate_transpose() * x;
  return max_abs(s - MatrixFloat::identity(s.rows()));
}

double partitioned_residual(const std::vector<std::vector<MatrixFloat>>& blocks) {
  const std::size_t g = blocks.size();
  if (g == 0) return 0.0;
  const std::size_t n = blocks[0][0].rows();
  MatrixFloat u(g * n, g * n);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) u(i * n + r, j * n + c) = blocks[i][j](r, c);
  return unitary_residual(u);
}

double xgn_residual(const std::vector<MatrixFloat>& a, const std::vector<MatrixFloat>& b) {
  if (a.empty()) return 0.0;
  MatrixFloat s(a[0].rows(), b[0].cols());
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return max_abs(s - MatrixFloat::identity(s.rows()));
}

std::size_t domain_letters(const SampleDomain& d, const Alphabet& alpha) {
  switch (d.kind) {
    case DomainKind::unitaries:
    case DomainKind::spherical:
      return d.g;
    case DomainKind::partitioned:
      return d.g * d.g;
    case DomainKind::xgn:
      return 2 * d.g;
    case DomainKind::unrestricted:
      return alpha.has_star() ? alpha.size() : alpha.slots();
  }
  return 0;
}

namespace {

void check_fit(const SampleDomain& d, const Alphabet& alpha) {
  const std::size_t want = alpha.has_star() ? alpha.size() : alpha.slots();
  if (domain_letters(d, alpha) != want)
    throw SizeMismatch(to_string(d.kind) + " domain with g=" + std::to_string(d.g) + " fills " +
                       std::to_string(domain_letters(d, alpha)) + " letters, alphabet needs " + std::to_string(want));
  if (d.kind == DomainKind::xgn && alpha.has_star()) throw SizeMismatch("xgn domain needs an alphabet without adjoints");
}

StarRule rule_for(const Alphabet& alpha) { return alpha.has_star() ? StarRule::adjoint : StarRule::formal; }

}  // namespace

DomainPoint<MatrixFloat> sample_point(const SampleDomain& d, const Alphabet& alpha, std::size_t size, CounterRng& rng) {
  check_fit(d, alpha);
  DomainPoint<MatrixFloat> p;
  p.rule = rule_for(alpha);
  switch (d.kind) {
    case DomainKind::unitaries:
      for (std::size_t j = 0; j < d.g; ++j) p.matrices.push_back(haar_unitary(size, rng));
      break;
    case DomainKind::spherical:
      p.matrices = spherical_isometry_tuple(d.g, size, rng);
      break;
    case DomainKind::partitioned:
      p.matrices = flatten(partitioned_unitary(d.g, size, rng));
      break;
    case DomainKind::xgn: {
      auto [a, b] = xgn_point(d.g, size, rng);
      p.matrices = a;
      p.matrices.insert(p.matrices.end(), b.begin(), b.end());
      break;
    }
    case DomainKind::unrestricted:
      for (std::size_t j = 0; j < domain_letters(d, alpha); ++j) p.matrices.push_back(gaussian_matrix(size, size, rng));
      break;
  }
  return p;
}

MatrixExact exact_unitary(std::size_t n, CounterRng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  static const Scalar phases[4] = {Scalar(1), Scalar(-1), Scalar(0, 1), Scalar(0, -1)};
  MatrixExact u(n, n);
  for (std::size_t j = 0; j < n; ++j) u(perm[j], j) = phases[rng.below(4)];
  return u;
}

DomainPoint<MatrixExact> sample_exact_point(const SampleDomain& d, const Alphabet& alpha, std::size_t size,
                                            CounterRng& rng) {
  check_fit(d, alpha);
  DomainPoint<MatrixExact> p;
  p.rule = rule_for(alpha);
  switch (d.kind) {
    case DomainKind::unitaries:
      for (std::size_t j = 0; j < d.g; ++j) p.matrices.push_back(exact_unitary(size, rng));
      break;
    case DomainKind::spherical: {
      const MatrixExact u = exact_unitary(d.g * size, rng);
      for (std::size_t j = 0; j < d.g; ++j) p.matrices.push_back(u.block(j * size, 0, size, size));
      break;
    }
    case DomainKind::partitioned:
      p.matrices = flatten(split_blocks(exact_unitary(d.g * size, rng), d.g, size));
      break;
    case DomainKind::xgn:
      throw Error("no exact sampler for the xgn domain");
    case DomainKind::unrestricted:
      for (std::size_t j = 0; j < domain_letters(d, alpha); ++j) {
        MatrixExact m(size, size);
        for (std::size_t r = 0; r < size; ++r)
          for (std::size_t c = 0; c < size; ++c)
            m(r, c) = Scalar(static_cast<long>(rng.below(5)) - 2, static_cast<long>(rng.below(5)) - 2);
        p.matrices.push_back(m);
      }
      break;
  }
  return p;
}

std::uint64_t trial_stream(std::size_t size, std::size_t trial) {
  return (static_cast<std::uint64_t>(size) << 32) ^ static_cast<std::uint64_t>(trial);
}

namespace {

template <class Eval>
std::optional<FalsifyWitness> falsify_with(const Alphabet& alpha, const SampleDomain& d, const FalsifyOptions& opts,
                                           Eval&& eval) {
  for (std::size_t size = std::max<std::size_t>(opts.min_size, 1); size <= opts.max_size; ++size)
    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
      CounterRng rng(opts.seed, trial_stream(size, trial));
      DomainPoint<MatrixFloat> p;
      try {
        p = sample_point(d, alpha, size, rng);
      } catch (const ConditioningFailure&) {
        continue;
      }
      std::optional<MatrixFloat> value = eval(p);
      if (!value) continue;
      double score;
      bool hit;
      if (opts.mode == FalsifyMode::nonzero) {
        score = frobenius_norm(*value);
        hit = score > opts.tol;
      } else {
        score = hermitian_eigenvalues(*value).front();
        hit = score < -opts.tol;
      }
      if (hit) return FalsifyWitness{size, trial, opts.seed, p.matrices, p.rule, *value, score};
    }
  return std::nullopt;
}

}  // namespace

std::optional<FalsifyWitness> falsify(const NcPoly& f, const SampleDomain& d, const FalsifyOptions& opts) {
  return falsify_with(*f.alphabet(), d, opts, [&](const DomainPoint<MatrixFloat>& p) -> std::optional<MatrixFloat> {
    return eval_poly(f, p.matrices, p.rule);
  });
}

std::optional<FalsifyWitness> falsify(const RatExpr& f, const SampleDomain& d, const FalsifyOptions& opts) {
  return falsify_with(*f.alphabet(), d, opts, [&](const DomainPoint<MatrixFloat>& p) -> std::optional<MatrixFloat> {
    try {
      return eval_expression(f, p.matrices, p.rule);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  });
}

std::pair<MatrixExact, MatrixExact> zero_divisor_witness(std::size_t m, std::size_t n) {
  if (m + n == 0) throw Error("zero_divisor_witness needs m + n >= 1");
  const std::size_t N = m + n + 1;
  MatrixExact a(N, N), b(N, N);
  // one-based E_{i,i+1} for i = 1..n
  for (std::size_t i = 1; i <= n; ++i) a(i - 1, i) = Scalar(1);
  // B^0 = I forces AB = 0 with B^1 = 0, so B vanishes when m = 0
  if (m > 0) {
    for (std::size_t i = n + 2; i <= n + m; ++i) b(i - 1, i) = Scalar(1);
    b(N - 1, 0) = Scalar(1);
  }
  return {a, b};
}

bool check_zero_divisor_relations(const MatrixExact& a, const MatrixExact& b, std::size_t m, std::size_t n) {
  auto power = [](const MatrixExact& x, std::size_t k) {
    MatrixExact r = MatrixExact::identity(x.rows());
    for (std::size_t i = 0; i < k; ++i) r = r * x;
    return r;
  };
  return !(power(b, m) * power(a, n)).is_zero() && (a * b).is_zero() && power(b, m + 1).is_zero() &&
         power(a, n + 1).is_zero();
}

}  // namespace ncnull
