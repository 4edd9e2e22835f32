#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncnull/matrix.hpp"

namespace ncnull {

/// A letter of the free *-algebra. `index` is zero-based into the alphabet.
struct Letter {
  std::uint32_t index = 0;
  bool starred = false;

  Letter star() const { return {index, !starred}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Named base letters, optionally doubled by their formal adjoints.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> names, bool star);

  /// X1..Xg.
  static std::shared_ptr<const Alphabet> standard(std::size_t g, bool star);
  static std::shared_ptr<const Alphabet> named(std::vector<std::string> names, bool star);

  std::size_t size() const noexcept { return names_.size(); }
  bool has_star() const noexcept { return star_; }
  /// Number of distinct letters: g, or 2g with adjoints.
  std::size_t slots() const noexcept { return star_ ? 2 * names_.size() : names_.size(); }
  std::size_t slot(Letter l) const;
  Letter letter_at(std::size_t slot) const;
  const std::string& base_name(std::size_t index) const { return names_.at(index); }
  std::string name(Letter l) const;
  std::optional<std::size_t> find(const std::string& base) const;
  Letter letter(const std::string& name) const;  ///< accepts "X1" and "X1^*"; throws UnknownLetter

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.star_ == b.star_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  bool star_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Throws AlphabetMismatch unless both alphabets are equal.
void require_same(const AlphabetPtr& a, const AlphabetPtr& b);

/// Finite sequence of letters, ordered graded-lexicographically.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word of(Letter l) { return Word({l}); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word star() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend bool operator<(const Word& a, const Word& b);

  /// Letters joined by spaces; "1" for the empty word.
  std::string to_string(const Alphabet& alpha) const;

 private:
  std::vector<Letter> letters_;
};

/// All words of length exactly `len` over the alphabet's slots, graded-lex.
std::vector<Word> words_of_length(const Alphabet& alpha, std::size_t len);
/// All words of length at most `len`.
std::vector<Word> words_up_to(const Alphabet& alpha, std::size_t len);

enum class StarRule {
  formal,   ///< one matrix per letter, starred letters included
  adjoint,  ///< one matrix per base letter; X^* is its conjugate transpose
};

/// Element of the free (*-)algebra over Q(i).
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit NcPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  static NcPoly constant(AlphabetPtr alpha, const Scalar& c);
  static NcPoly monomial(AlphabetPtr alpha, Word w, const Scalar& c = Scalar(1));
  static NcPoly letter(AlphabetPtr alpha, Letter l);

  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  /// Max word length; 0 for the zero polynomial.
  std::size_t degree() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& s);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& s) { return a *= s; }
  friend NcPoly operator*(const Scalar& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly operator-() const { return *this * Scalar(-1); }

  /// Reverses words, toggles stars, conjugates coefficients.
  NcPoly star() const;

  friend bool operator==(const NcPoly& a, const NcPoly& b);
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  /// Canonical text in the expression grammar, e.g. "1 - X1^* X1".
  std::string to_string() const;

 private:
  AlphabetPtr alpha_;
  Terms terms_;
};

/// (u, v): degree and number of terms. Throws ZeroPolynomial.
std::pair<std::size_t, std::size_t> degree_and_terms(const NcPoly& f);

/// Expands a point into one matrix per alphabet slot under the given rule.
template <class T>
std::vector<Matrix<T>> bind_point(const Alphabet& alpha, const std::vector<Matrix<T>>& point, StarRule rule);

MatrixExact eval_poly(const NcPoly& f, const std::vector<MatrixExact>& point, StarRule rule);
MatrixFloat eval_poly(const NcPoly& f, const std::vector<MatrixFloat>& point, StarRule rule);

}  // namespace ncnull
