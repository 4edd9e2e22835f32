#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncnull/bounds.hpp"
#include "ncnull/realization.hpp"
#include "ncnull/sampler.hpp"

namespace ncnull {

enum class IdealKind { Tprime, Sprime, Uprime, CommInv, T, S, U, custom };

std::string to_string(IdealKind k);
/// Accepts the built-in names ("Tprime", "T'", "CommInv", ...); throws Error.
IdealKind ideal_kind_from_string(const std::string& s);

/// Everything needed to build an ideal; validated by the RRIdeal constructor.
struct IdealData {
  std::string name;
  IdealKind kind = IdealKind::custom;
  std::size_t g = 1;
  AlphabetPtr alphabet;
  std::vector<NcPoly> generators;
  std::vector<Letter> resolved;
  std::map<Letter, RatExpr> resolvent;
  /// m x m values for the unresolved letters; resolved slots are filled with
  /// the resolvent's value.
  std::map<Letter, MatrixExact> basepoint;
  std::size_t m = 1;
  /// Realization-dimension hint; 0 derives it from the resolvent.
  std::size_t n = 0;
  /// Optional explicit realizations of the resolvent entries. They must be
  /// built on the base point returned by `make_basepoint(*this)`.
  std::map<Letter, LinRep> resolvent_reps;
  /// Domain used for numeric sampling; unrestricted means graph sampling.
  SampleDomain domain;
};

/// Base point of the data, resolved slots included. Throws SpecError when
/// an unresolved letter has no value or the resolvent is undefined there.
BasePointPtr make_basepoint(const IdealData& d);

/// Rationally resolvable ideal with its resolvent and base point. Immutable.
class RRIdeal {
 public:
  /// Throws SpecError on malformed data and ResolventNotVanishing when a
  /// generator does not vanish on the graph of the resolvent.
  explicit RRIdeal(IdealData d);

  const std::string& name() const noexcept { return d_.name; }
  IdealKind kind() const noexcept { return d_.kind; }
  std::size_t g() const noexcept { return d_.g; }
  bool star() const noexcept { return d_.alphabet->has_star(); }
  const AlphabetPtr& alphabet() const noexcept { return d_.alphabet; }
  const std::vector<NcPoly>& generators() const noexcept { return d_.generators; }
  const std::vector<Letter>& resolved() const noexcept { return d_.resolved; }
  const std::map<Letter, RatExpr>& resolvent() const noexcept { return d_.resolvent; }
  const BasePointPtr& base() const noexcept { return base_; }
  std::size_t m() const noexcept { return d_.m; }
  std::size_t n() const noexcept { return d_.n; }
  const std::map<Letter, LinRep>& resolvent_reps() const noexcept { return d_.resolvent_reps; }
  const SampleDomain& domain() const noexcept { return d_.domain; }
  bool is_resolved(Letter l) const;

 private:
  IdealData d_;
  BasePointPtr base_;
};

/// T', S', U', CommInv (formal) and T, S, U (star). Throws GOutOfRange.
RRIdeal builtin_ideal(IdealKind kind, std::size_t g);

/// JSON ideal description; throws SpecError / ResolventNotVanishing.
RRIdeal custom_ideal(const nlohmann::json& spec);
RRIdeal custom_ideal_file(const std::string& path);

/// Entries of X^{-1} for the letter grid, by blockwise inversion; defined at
/// the identity pattern.
std::vector<std::vector<RatExpr>> symbolic_inverse(const AlphabetPtr& alpha,
                                                   const std::vector<std::vector<Letter>>& grid);
/// Same over the letters X11..Xgg.
std::vector<std::vector<RatExpr>> symbolic_matrix_inverse(std::size_t g);

/// Grid of the g x g letters X11..Xgg (names "Xij", or "Xi_j" when g > 9).
std::vector<std::string> grid_names(const std::string& stem, std::size_t g);

/// f with each resolved letter replaced by its resolvent. Throws AlphabetMismatch.
RatExpr substitute_resolvent(const NcPoly& f, const RRIdeal& I);

/// Counterexample to membership: a point where f does not vanish.
struct Witness {
  std::size_t size = 0;
  bool exact = false;
  std::vector<MatrixExact> exact_point;  ///< when exact
  MatrixExact exact_value;
  std::vector<MatrixFloat> point;  ///< when numeric
  MatrixFloat value;
  StarRule rule = StarRule::formal;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
};

struct MembershipOptions {
  bool find_witness = false;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  /// Largest witness size tried; 0 uses witness_size (capped at 64).
  std::size_t max_size = 0;
};

struct MembershipVerdict {
  bool member = false;
  std::optional<Witness> witness;
};

MembershipVerdict is_member(const NcPoly& f, const RRIdeal& I, const MembershipOptions& opts = {});

/// Searches points of the ideal's zero set (exact first, then numeric) where
/// f is nonzero, sizes 1..max_size.
std::optional<Witness> find_witness(const NcPoly& f, const RRIdeal& I, const MembershipOptions& opts);

struct ElementComplexity {
  std::size_t max_word_length = 2;
  std::size_t terms = 2;
  bool unit_coefficients = false;
};

/// sum_t c_t a_t f_{j_t} b_t with random words a_t, b_t.
NcPoly random_ideal_element(const RRIdeal& I, std::uint64_t seed, const ElementComplexity& c = {});

/// Bound on the size of a counterexample for f. Throws ZeroPolynomial.
Size witness_size(const NcPoly& f, const RRIdeal& I);

}  // namespace ncnull
