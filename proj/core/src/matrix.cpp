#include "ncnull/matrix.hpp"

#include <algorithm>

namespace ncnull {

MatrixFloat to_float(const MatrixExact& a) {
  MatrixFloat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).to_complex();
  return r;
}

double frobenius_norm(const MatrixFloat& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs(const MatrixFloat& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s = std::max(s, std::abs(x));
  return s;
}

std::vector<double> hermitian_eigenvalues(const MatrixFloat& a) {
  if (!a.is_square()) throw DimensionMismatch("eigenvalues of non-square " + a.shape());
  const std::size_t n = a.rows(), N = 2 * n;
  // [[Re H, -Im H], [Im H, Re H]] has every eigenvalue of H twice.
  std::vector<double> s(N * N);
  auto S = [&](std::size_t i, std::size_t j) -> double& { return s[i * N + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      S(i, j) = S(n + i, n + j) = h.real();
      S(i, n + j) = -h.imag();
      S(n + i, j) = h.imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) (i == j ? total : off) += S(i, j) * S(i, j);
    if (off <= 1e-30 * (total + off) || off < 1e-300) break;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = S(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (S(q, q) - S(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = S(k, p), akq = S(k, q);
          S(k, p) = c * akp - sn * akq;
          S(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = S(p, k), aqk = S(q, k);
          S(p, k) = c * apk - sn * aqk;
          S(q, k) = sn * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(N);
  for (std::size_t i = 0; i < N; ++i) ev[i] = S(i, i);
  std::sort(ev.begin(), ev.end());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
  return out;
}

}  // namespace ncnull
