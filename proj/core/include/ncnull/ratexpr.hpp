#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncnull/ncpoly.hpp"

namespace ncnull {

/// Immutable syntax tree of an nc rational expression. Nodes are shared.
class RatExpr {
 public:
  enum class Kind { Const, Var, Add, Neg, Mul, Inv };

  static RatExpr constant(AlphabetPtr alpha, const Scalar& c);
  static RatExpr var(AlphabetPtr alpha, Letter l);
  /// Lists must be nonempty; a single child is returned unchanged.
  static RatExpr add(std::vector<RatExpr> terms);
  static RatExpr mul(std::vector<RatExpr> factors);
  static RatExpr neg(RatExpr child);
  static RatExpr inv(RatExpr child);
  static RatExpr sub(RatExpr a, RatExpr b) { return add({std::move(a), neg(std::move(b))}); }

  Kind kind() const;
  const AlphabetPtr& alphabet() const;
  const Scalar& value() const;                ///< Const only
  Letter letter() const;                      ///< Var only
  const std::vector<RatExpr>& children() const;
  const RatExpr& child() const { return children().front(); }

  friend bool operator==(const RatExpr& a, const RatExpr& b);
  friend bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

 private:
  struct Node;
  explicit RatExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the expression grammar. Letters are looked up in `alpha`.
/// Throws SyntaxError (with byte offset) or UnknownLetter.
RatExpr parse_expression(std::string_view text, const AlphabetPtr& alpha);
/// Convenience: X1..Xg with adjoints.
RatExpr parse_expression(std::string_view text, std::size_t g);

std::string format_expression(const RatExpr& e);

/// Maximal nesting depth of inverses.
std::size_t height(const RatExpr& e);

/// Simultaneous substitution. Letters missing from the map stay in place.
/// Images may live over a different alphabet only if every letter is mapped.
RatExpr substitute_letters(const RatExpr& e, const std::map<Letter, RatExpr>& map);

/// Formal adjoint: reversed products, toggled stars, conjugated constants.
RatExpr star_expression(const RatExpr& e);

/// Converts a polynomial to a sum of scaled products.
RatExpr poly_to_expr(const NcPoly& f);
/// Expands an inverse-free expression. Throws DomainError on an Inv node.
NcPoly expand_polynomial(const RatExpr& e);
/// Parses then expands; the usual way to read a polynomial.
NcPoly parse_polynomial(std::string_view text, const AlphabetPtr& alpha);

MatrixExact eval_expression(const RatExpr& e, const std::vector<MatrixExact>& point, StarRule rule);
MatrixFloat eval_expression(const RatExpr& e, const std::vector<MatrixFloat>& point, StarRule rule);

/// Tree generator used by tests and benchmarks. `next` yields uniform 64-bit values.
struct RandomExprOptions {
  std::size_t max_depth = 4;
  std::size_t max_children = 3;
  bool allow_inverse = true;
  bool allow_star_letters = true;
};
RatExpr random_expression(const AlphabetPtr& alpha, const std::function<std::uint64_t()>& next,
                          const RandomExprOptions& opts = {});

}  // namespace ncnull
