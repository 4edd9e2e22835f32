#include "ncnull/ncpoly.hpp"

#include <algorithm>

namespace ncnull {

Alphabet::Alphabet(std::vector<std::string> names, bool star) : names_(std::move(names)), star_(star) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("duplicate letter " + names_[i]);
}

std::shared_ptr<const Alphabet> Alphabet::standard(std::size_t g, bool star) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= g; ++i) names.push_back("X" + std::to_string(i));
  return std::make_shared<const Alphabet>(std::move(names), star);
}

std::shared_ptr<const Alphabet> Alphabet::named(std::vector<std::string> names, bool star) {
  return std::make_shared<const Alphabet>(std::move(names), star);
}

std::size_t Alphabet::slot(Letter l) const {
  if (l.index >= names_.size()) throw UnknownLetter("letter index out of range");
  if (l.starred && !star_) throw UnknownLetter("alphabet has no starred letters");
  return star_ ? 2 * l.index + (l.starred ? 1 : 0) : l.index;
}

Letter Alphabet::letter_at(std::size_t s) const {
  if (s >= slots()) throw UnknownLetter("slot out of range");
  if (!star_) return {static_cast<std::uint32_t>(s), false};
  return {static_cast<std::uint32_t>(s / 2), s % 2 == 1};
}

std::string Alphabet::name(Letter l) const {
  return names_.at(l.index) + (l.starred ? "^*" : "");
}

std::optional<std::size_t> Alphabet::find(const std::string& base) const {
  const auto it = std::find(names_.begin(), names_.end(), base);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Letter Alphabet::letter(const std::string& name) const {
  std::string base = name;
  bool starred = false;
  if (base.size() > 2 && base.compare(base.size() - 2, 2, "^*") == 0) {
    base.resize(base.size() - 2);
    starred = true;
  }
  const auto idx = find(base);
  if (!idx) throw UnknownLetter("unknown letter " + name);
  if (starred && !star_) throw UnknownLetter("alphabet has no starred letters: " + name);
  return {static_cast<std::uint32_t>(*idx), starred};
}

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !(*a == *b)) throw AlphabetMismatch("operands use different alphabets");
}

Word Word::star() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  for (auto& l : r) l.starred = !l.starred;
  return Word(std::move(r));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> r = a.letters_;
  r.insert(r.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(r));
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters_ < b.letters_;
}

std::string Word::to_string(const Alphabet& alpha) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += alpha.name(letters_[i]);
  }
  return s;
}

std::vector<Word> words_of_length(const Alphabet& alpha, std::size_t len) {
  std::vector<Word> out{Word()};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * alpha.slots());
    for (const auto& w : out)
      for (std::size_t s = 0; s < alpha.slots(); ++s) next.push_back(w * Word::of(alpha.letter_at(s)));
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(const Alphabet& alpha, std::size_t len) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= len; ++k) {
    auto w = words_of_length(alpha, k);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

NcPoly NcPoly::constant(AlphabetPtr alpha, const Scalar& c) {
  NcPoly p(std::move(alpha));
  p.add_term(Word(), c);
  return p;
}

NcPoly NcPoly::monomial(AlphabetPtr alpha, Word w, const Scalar& c) {
  NcPoly p(std::move(alpha));
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::letter(AlphabetPtr alpha, Letter l) {
  alpha->slot(l);
  return monomial(std::move(alpha), Word::of(l));
}

Scalar NcPoly::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::size_t NcPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  require_same(alpha_, o.alpha_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  require_same(alpha_, o.alpha_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  require_same(a.alpha_, b.alpha_);
  NcPoly r(a.alpha_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

NcPoly NcPoly::star() const {
  NcPoly r(alpha_);
  for (const auto& [w, c] : terms_) r.add_term(w.star(), c.conj());
  return r;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  require_same(a.alpha_, b.alpha_);
  return a.terms_ == b.terms_;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c.is_real() && sgn(c.re()) < 0;
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      s += scalar_literal(mag);
    } else {
      if (!mag.is_one()) s += scalar_literal(mag) + " ";
      s += w.to_string(*alpha_);
    }
  }
  return s;
}

std::pair<std::size_t, std::size_t> degree_and_terms(const NcPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
  return {f.degree(), f.term_count()};
}

template <class T>
std::vector<Matrix<T>> bind_point(const Alphabet& alpha, const std::vector<Matrix<T>>& point, StarRule rule) {
  const std::size_t need = rule == StarRule::adjoint ? alpha.size() : alpha.slots();
  if (point.size() < need) throw MissingLetter("point supplies " + std::to_string(point.size()) + " matrices, need " + std::to_string(need));
  if (point.size() > need) throw SizeMismatch("point supplies too many matrices");
  std::size_t n = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!point[i].is_square()) throw SizeMismatch("point matrices must be square");
    if (i == 0) n = point[i].rows();
    if (point[i].rows() != n) throw SizeMismatch("point matrices differ in size");
  }
  if (rule == StarRule::formal || !alpha.has_star()) return point;
  std::vector<Matrix<T>> out;
  out.reserve(alpha.slots());
  for (const auto& a : point) {
    out.push_back(a);
    out.push_back(a.conjugate_transpose());
  }
  return out;
}

template std::vector<MatrixExact> bind_point(const Alphabet&, const std::vector<MatrixExact>&, StarRule);
template std::vector<MatrixFloat> bind_point(const Alphabet&, const std::vector<MatrixFloat>&, StarRule);

namespace {

template <class T>
Matrix<T> eval_poly_impl(const NcPoly& f, const std::vector<Matrix<T>>& point, StarRule rule) {
  const auto& alpha = *f.alphabet();
  const auto bound = bind_point(alpha, point, rule);
  if (bound.empty()) throw MissingLetter("cannot infer evaluation size from an empty point");
  const std::size_t n = bound.front().rows();
  Matrix<T> result(n, n);
  for (const auto& [w, c] : f.terms()) {
    Matrix<T> term = Matrix<T>::identity(n);
    for (const auto& l : w.letters()) term = term * bound[alpha.slot(l)];
    if constexpr (EntryTraits<T>::exact) {
      result += term * c;
    } else {
      result += term * c.to_complex();
    }
  }
  return result;
}

}  // namespace

MatrixExact eval_poly(const NcPoly& f, const std::vector<MatrixExact>& point, StarRule rule) {
  return eval_poly_impl(f, point, rule);
}

MatrixFloat eval_poly(const NcPoly& f, const std::vector<MatrixFloat>& point, StarRule rule) {
  return eval_poly_impl(f, point, rule);
}

}  // namespace ncnull
