#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncnull/ideals.hpp"

namespace ncnull {

/// One summand g f_j h of an explicit ideal combination.
struct Cofactor {
  NcPoly left;
  std::size_t generator = 0;
  NcPoly right;
};

/// f = sum_i p_i^* p_i + q with q in the ideal.
struct SohsCertificate {
  std::vector<NcPoly> squares;
  NcPoly remainder;
  std::optional<std::vector<Cofactor>> cofactors;
};

enum class RemainderCheck { zero, cofactors, oracle };
std::string to_string(RemainderCheck c);

struct CertificateReport {
  bool valid = false;
  /// f - sum p^* p - q vanishes in the free algebra.
  bool identity_holds = false;
  /// q is shown to lie in the ideal.
  bool remainder_ok = false;
  RemainderCheck path = RemainderCheck::zero;
};

/// Throws AlphabetMismatch.
CertificateReport check_certificate(const NcPoly& f, const SohsCertificate& cert, const RRIdeal& I);
bool verify_certificate(const NcPoly& f, const SohsCertificate& cert, const RRIdeal& I);

/// Sum of p^* p.
NcPoly sum_of_hermitian_squares(const std::vector<NcPoly>& squares, const AlphabetPtr& alpha);

struct GramEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const GramEntry&, const GramEntry&) = default;
};

/// sum over entries of G_{row,col} = rhs, for the word basis[col]^* basis[row].
struct GramConstraint {
  Word word;
  std::vector<GramEntry> entries;
  Scalar rhs;
  friend bool operator==(const GramConstraint&, const GramConstraint&) = default;
};

/// Linear constraints on a Hermitian G over the word basis W_d such that
/// G = sum_i vec(p_i) vec(p_i)^* satisfies them iff f - q = sum_i p_i^* p_i.
struct GramProblem {
  AlphabetPtr alphabet;
  std::size_t d = 0;
  std::vector<Word> basis;
  std::vector<GramConstraint> constraints;
};

bool operator==(const GramProblem& a, const GramProblem& b);

/// Throws DegreeTooHigh when deg(f - q) > 2d, AlphabetMismatch when the
/// alphabet has no adjoints.
GramProblem gram_constraints(const NcPoly& f, std::size_t d, const NcPoly& q);

/// sum_i vec(p_i) vec(p_i)^* over the basis; throws DegreeTooHigh if some
/// p_i leaves the span.
MatrixExact gram_from_squares(const GramProblem& p, const std::vector<NcPoly>& squares);
bool gram_satisfies(const GramProblem& p, const MatrixExact& G);
/// Exact test for a Hermitian positive semidefinite matrix.
bool is_positive_semidefinite(const MatrixExact& G);

/// Text format: header line, alphabet line, one line per constraint.
std::string format_gram(const GramProblem& p);
GramProblem parse_gram(const std::string& text);
void export_gram(const GramProblem& p, const std::string& path);
GramProblem import_gram(const std::string& path);

struct ProbeReport {
  double min_eigenvalue = 0.0;
  std::size_t size = 0;
  std::size_t trial = 0;
  bool positive = true;
};

/// Least eigenvalue of the Hermitian part of f over sampled points.
ProbeReport positivity_probe(const NcPoly& f, const SampleDomain& d, std::size_t min_size, std::size_t max_size,
                             std::size_t trials, std::uint64_t seed, double tol = 1e-8);

}  // namespace ncnull
