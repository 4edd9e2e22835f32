#include "ncnull/ratexpr.hpp"

#include <cctype>
#include <optional>

namespace ncnull {

struct RatExpr::Node {
  Kind kind;
  AlphabetPtr alpha;
  Scalar value;
  Letter letter;
  std::vector<RatExpr> children;
};

RatExpr RatExpr::constant(AlphabetPtr alpha, const Scalar& c) {
  return RatExpr(std::make_shared<const Node>(Node{Kind::Const, std::move(alpha), c, {}, {}}));
}

RatExpr RatExpr::var(AlphabetPtr alpha, Letter l) {
  alpha->slot(l);
  return RatExpr(std::make_shared<const Node>(Node{Kind::Var, std::move(alpha), {}, l, {}}));
}

namespace {

AlphabetPtr common_alphabet(const std::vector<RatExpr>& xs) {
  if (xs.empty()) throw Error("empty operand list");
  for (std::size_t i = 1; i < xs.size(); ++i) require_same(xs[0].alphabet(), xs[i].alphabet());
  return xs[0].alphabet();
}

}  // namespace

RatExpr RatExpr::add(std::vector<RatExpr> terms) {
  auto alpha = common_alphabet(terms);
  if (terms.size() == 1) return terms.front();
  return RatExpr(std::make_shared<const Node>(Node{Kind::Add, std::move(alpha), {}, {}, std::move(terms)}));
}

RatExpr RatExpr::mul(std::vector<RatExpr> factors) {
  auto alpha = common_alphabet(factors);
  if (factors.size() == 1) return factors.front();
  return RatExpr(std::make_shared<const Node>(Node{Kind::Mul, std::move(alpha), {}, {}, std::move(factors)}));
}

RatExpr RatExpr::neg(RatExpr child) {
  auto alpha = child.alphabet();
  return RatExpr(std::make_shared<const Node>(Node{Kind::Neg, std::move(alpha), {}, {}, {std::move(child)}}));
}

RatExpr RatExpr::inv(RatExpr child) {
  auto alpha = child.alphabet();
  return RatExpr(std::make_shared<const Node>(Node{Kind::Inv, std::move(alpha), {}, {}, {std::move(child)}}));
}

RatExpr::Kind RatExpr::kind() const { return node_->kind; }
const AlphabetPtr& RatExpr::alphabet() const { return node_->alpha; }
const Scalar& RatExpr::value() const { return node_->value; }
Letter RatExpr::letter() const { return node_->letter; }
const std::vector<RatExpr>& RatExpr::children() const { return node_->children; }

bool operator==(const RatExpr& a, const RatExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RatExpr::Kind::Const:
      return a.value() == b.value();
    case RatExpr::Kind::Var:
      return a.letter() == b.letter() && a.alphabet()->name(a.letter()) == b.alphabet()->name(b.letter());
    default:
      return a.children() == b.children();
  }
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Num, Letter, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t begin;
  std::size_t end;
  std::string text;  // Num: rational part; Letter: name
  bool imaginary = false;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t& k) {
    const std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return k > start;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t b = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t k = i;
      digits(k);
      if (k < s.size() && s[k] == '/') {
        std::size_t d = k + 1;
        if (!digits(d)) throw SyntaxError("expected denominator", d);
        k = d;
      }
      Token t{Tok::Num, b, k, std::string(s.substr(b, k - b))};
      if (k < s.size() && s[k] == 'i') {
        t.imaginary = true;
        t.end = ++k;
      }
      if (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_'))
        throw SyntaxError("unexpected character after number", k);
      out.push_back(std::move(t));
      i = k;
      continue;
    }
    if (c == 'X' || c == 'Y') {
      std::size_t k = i + 1;
      if (!digits(k)) throw SyntaxError("letter needs an index", k);
      // grid letters past 9x9 are written Xi_j
      if (k + 1 < s.size() && s[k] == '_' && std::isdigit(static_cast<unsigned char>(s[k + 1]))) {
        ++k;
        digits(k);
      }
      if (k < s.size() && (std::isalpha(static_cast<unsigned char>(s[k])) || s[k] == '_'))
        throw SyntaxError("unexpected character after letter", k);
      out.push_back({Tok::Letter, b, k, std::string(s.substr(b, k - b))});
      i = k;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, b, b + 1, {}});
    ++i;
  }
  out.push_back({Tok::End, s.size(), s.size(), {}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, AlphabetPtr alpha) : toks_(lex(text)), alpha_(std::move(alpha)) {}

  RatExpr parse() {
    if (peek().kind == Tok::End) throw SyntaxError("empty expression", 0);
    RatExpr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected trailing input", peek().begin);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw SyntaxError(std::string("expected ") + what, peek().begin);
    ++pos_;
  }

  Scalar number(const Token& t, bool negate) const {
    Rational q = parse_rational(t.text);
    if (negate) q = -q;
    return t.imaginary ? Scalar(0, q) : Scalar(q);
  }

  RatExpr expr() {
    std::vector<RatExpr> terms;
    if (peek().kind == Tok::Minus) {
      const Token& m = take();
      if (peek().kind == Tok::Num && peek().begin == m.end) {
        terms.push_back(term(true));
      } else {
        terms.push_back(RatExpr::neg(term(false)));
      }
    } else {
      terms.push_back(term(false));
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      RatExpr t = term(false);
      terms.push_back(minus ? RatExpr::neg(std::move(t)) : std::move(t));
    }
    return RatExpr::add(std::move(terms));
  }

  RatExpr term(bool negate_first) {
    std::vector<RatExpr> factors{factor(negate_first)};
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        ++pos_;
        factors.push_back(factor(false));
      } else if (k == Tok::Letter || k == Tok::Num || k == Tok::LParen) {
        factors.push_back(factor(false));
      } else {
        break;
      }
    }
    return RatExpr::mul(std::move(factors));
  }

  RatExpr factor(bool negate) {
    RatExpr a = atom(negate);
    while (peek().kind == Tok::Caret) {
      ++pos_;
      const Token& t = peek();
      if (t.kind == Tok::Minus) {
        ++pos_;
        const Token& one = peek();
        if (one.kind != Tok::Num || one.imaginary || one.text != "1") throw SyntaxError("only ^-1 is allowed", one.begin);
        ++pos_;
        a = RatExpr::inv(std::move(a));
      } else if (t.kind == Tok::Star) {
        ++pos_;
        a = star_expression(a);
      } else if (t.kind == Tok::Num && !t.imaginary && t.text.find('/') == std::string::npos) {
        ++pos_;
        unsigned long k = 0;
        try {
          k = std::stoul(t.text);
        } catch (const std::exception&) {
          throw SyntaxError("exponent too large", t.begin);
        }
        if (k > 64) throw SyntaxError("exponent too large", t.begin);
        if (k == 0) {
          a = RatExpr::constant(alpha_, Scalar(1));
        } else {
          a = RatExpr::mul(std::vector<RatExpr>(k, a));
        }
      } else {
        throw SyntaxError("expected -1, * or an exponent after ^", t.begin);
      }
    }
    return a;
  }

  /// "(" [-] re (+|-) im"i" ")" as one complex literal.
  std::optional<RatExpr> complex_literal() {
    std::size_t k = pos_ + 1;
    bool neg_re = false;
    if (peek(k - pos_).kind == Tok::Minus) {
      neg_re = true;
      ++k;
    }
    const Token& re = peek(k - pos_);
    if (re.kind != Tok::Num || re.imaginary) return std::nullopt;
    if (neg_re && toks_[k - 1].end != re.begin) return std::nullopt;
    const Token& sign = peek(k + 1 - pos_);
    if (sign.kind != Tok::Plus && sign.kind != Tok::Minus) return std::nullopt;
    const Token& im = peek(k + 2 - pos_);
    if (im.kind != Tok::Num || !im.imaginary) return std::nullopt;
    if (peek(k + 3 - pos_).kind != Tok::RParen) return std::nullopt;
    Rational r = parse_rational(re.text), i = parse_rational(im.text);
    if (neg_re) r = -r;
    if (sign.kind == Tok::Minus) i = -i;
    pos_ = k + 4;
    return RatExpr::constant(alpha_, Scalar(r, i));
  }

  RatExpr atom(bool negate) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num:
        ++pos_;
        return RatExpr::constant(alpha_, number(t, negate));
      case Tok::Letter:
        ++pos_;
        return RatExpr::var(alpha_, alpha_->letter(t.text));
      case Tok::LParen: {
        if (auto c = complex_literal()) return *c;
        ++pos_;
        RatExpr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError("expected a letter, number or '('", t.begin);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  AlphabetPtr alpha_;
};

}  // namespace

RatExpr parse_expression(std::string_view text, const AlphabetPtr& alpha) { return Parser(text, alpha).parse(); }

RatExpr parse_expression(std::string_view text, std::size_t g) {
  return parse_expression(text, Alphabet::standard(g, true));
}

// ---------------------------------------------------------------- printing

namespace {

std::string fmt(const RatExpr& e);

std::string fmt_factor(const RatExpr& e) {
  switch (e.kind()) {
    case RatExpr::Kind::Const:
    case RatExpr::Kind::Var:
    case RatExpr::Kind::Inv:
      return fmt(e);
    default:
      return "(" + fmt(e) + ")";
  }
}

std::string fmt_term(const RatExpr& e) {
  if (e.kind() == RatExpr::Kind::Add || e.kind() == RatExpr::Kind::Neg) return "(" + fmt(e) + ")";
  return fmt(e);
}

// Operand of a minus sign; a leading digit would fold into the literal.
std::string fmt_negated(const RatExpr& e) {
  std::string s = fmt_term(e);
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) return "(" + s + ")";
  return s;
}

std::string fmt(const RatExpr& e) {
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return scalar_literal(e.value());
    case RatExpr::Kind::Var:
      return e.alphabet()->name(e.letter());
    case RatExpr::Kind::Neg:
      return "-" + fmt_negated(e.child());
    case RatExpr::Kind::Add: {
      std::string s;
      const auto& cs = e.children();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const RatExpr& c = cs[i];
        if (c.kind() == RatExpr::Kind::Neg) {
          s += (i == 0 ? "-" : " - ") + fmt_negated(c.child());
        } else {
          if (i) s += " + ";
          s += c.kind() == RatExpr::Kind::Add ? "(" + fmt(c) + ")" : fmt(c);
        }
      }
      return s;
    }
    case RatExpr::Kind::Mul: {
      std::string s;
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) s += ' ';
        s += fmt_factor(e.children()[i]);
      }
      return s;
    }
    case RatExpr::Kind::Inv: {
      const RatExpr& c = e.child();
      return fmt_factor(c) + "^-1";
    }
  }
  return {};
}

}  // namespace

std::string format_expression(const RatExpr& e) { return fmt(e); }

// ---------------------------------------------------------------- structure

std::size_t height(const RatExpr& e) {
  std::size_t h = 0;
  for (const auto& c : e.children()) h = std::max(h, height(c));
  return e.kind() == RatExpr::Kind::Inv ? h + 1 : h;
}

namespace {

RatExpr substitute_impl(const RatExpr& e, const std::map<Letter, RatExpr>& map, const AlphabetPtr& target) {
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return target ? RatExpr::constant(target, e.value()) : e;
    case RatExpr::Kind::Var: {
      const auto it = map.find(e.letter());
      if (it != map.end()) return it->second;
      if (!target) return e;
      return RatExpr::var(target, target->letter(e.alphabet()->name(e.letter())));
    }
    case RatExpr::Kind::Neg:
      return RatExpr::neg(substitute_impl(e.child(), map, target));
    case RatExpr::Kind::Inv:
      return RatExpr::inv(substitute_impl(e.child(), map, target));
    case RatExpr::Kind::Add:
    case RatExpr::Kind::Mul: {
      std::vector<RatExpr> cs;
      cs.reserve(e.children().size());
      for (const auto& c : e.children()) cs.push_back(substitute_impl(c, map, target));
      return e.kind() == RatExpr::Kind::Add ? RatExpr::add(std::move(cs)) : RatExpr::mul(std::move(cs));
    }
  }
  return e;
}

}  // namespace

RatExpr substitute_letters(const RatExpr& e, const std::map<Letter, RatExpr>& map) {
  AlphabetPtr target;
  for (const auto& [l, img] : map) {
    if (!(*img.alphabet() == *e.alphabet())) {
      target = img.alphabet();
      break;
    }
  }
  return substitute_impl(e, map, target);
}

RatExpr star_expression(const RatExpr& e) {
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return RatExpr::constant(e.alphabet(), e.value().conj());
    case RatExpr::Kind::Var:
      return RatExpr::var(e.alphabet(), e.letter().star());
    case RatExpr::Kind::Neg:
      return RatExpr::neg(star_expression(e.child()));
    case RatExpr::Kind::Inv:
      return RatExpr::inv(star_expression(e.child()));
    case RatExpr::Kind::Add: {
      std::vector<RatExpr> cs;
      for (const auto& c : e.children()) cs.push_back(star_expression(c));
      return RatExpr::add(std::move(cs));
    }
    case RatExpr::Kind::Mul: {
      std::vector<RatExpr> cs;
      for (auto it = e.children().rbegin(); it != e.children().rend(); ++it) cs.push_back(star_expression(*it));
      return RatExpr::mul(std::move(cs));
    }
  }
  return e;
}

RatExpr poly_to_expr(const NcPoly& f) {
  const auto& alpha = f.alphabet();
  if (f.is_zero()) return RatExpr::constant(alpha, Scalar());
  std::vector<RatExpr> terms;
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) {
      terms.push_back(RatExpr::constant(alpha, c));
      continue;
    }
    std::vector<RatExpr> fs;
    const bool minus_one = c == Scalar(-1);
    if (!c.is_one() && !minus_one) fs.push_back(RatExpr::constant(alpha, c));
    for (const auto& l : w.letters()) fs.push_back(RatExpr::var(alpha, l));
    RatExpr t = RatExpr::mul(std::move(fs));
    terms.push_back(minus_one ? RatExpr::neg(std::move(t)) : std::move(t));
  }
  return RatExpr::add(std::move(terms));
}

namespace {

NcPoly expand_impl(const RatExpr& e, std::vector<std::size_t>& path) {
  const auto& alpha = e.alphabet();
  switch (e.kind()) {
    case RatExpr::Kind::Const:
      return NcPoly::constant(alpha, e.value());
    case RatExpr::Kind::Var:
      return NcPoly::letter(alpha, e.letter());
    case RatExpr::Kind::Neg: {
      path.push_back(0);
      NcPoly r = -expand_impl(e.child(), path);
      path.pop_back();
      return r;
    }
    case RatExpr::Kind::Inv:
      throw DomainError("inverse in a polynomial context", path, format_expression(e));
    case RatExpr::Kind::Add:
    case RatExpr::Kind::Mul: {
      const bool add = e.kind() == RatExpr::Kind::Add;
      NcPoly r = add ? NcPoly(alpha) : NcPoly::constant(alpha, Scalar(1));
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        path.push_back(i);
        NcPoly c = expand_impl(e.children()[i], path);
        path.pop_back();
        if (add) {
          r += c;
        } else {
          r = r * c;
        }
      }
      return r;
    }
  }
  return NcPoly(alpha);
}

}  // namespace

NcPoly expand_polynomial(const RatExpr& e) {
  std::vector<std::size_t> path;
  return expand_impl(e, path);
}

NcPoly parse_polynomial(std::string_view text, const AlphabetPtr& alpha) {
  return expand_polynomial(parse_expression(text, alpha));
}

// ---------------------------------------------------------------- evaluation

namespace {

template <class T>
struct Evaluator {
  const Alphabet& alpha;
  std::vector<Matrix<T>> bound;
  std::size_t n;
  std::vector<std::size_t> path;

  Matrix<T> operator()(const RatExpr& e) {
    switch (e.kind()) {
      case RatExpr::Kind::Const: {
        if constexpr (EntryTraits<T>::exact) {
          return Matrix<T>::identity(n) * e.value();
        } else {
          return Matrix<T>::identity(n) * e.value().to_complex();
        }
      }
      case RatExpr::Kind::Var:
        return bound[alpha.slot(e.letter())];
      case RatExpr::Kind::Neg:
        return -child(e, 0);
      case RatExpr::Kind::Inv: {
        Matrix<T> c = child(e, 0);
        try {
          return c.inverse();
        } catch (const SingularMatrix&) {
          throw DomainError("point outside the domain: singular inverse at " + format_expression(e), path,
                            format_expression(e));
        }
      }
      case RatExpr::Kind::Add: {
        Matrix<T> r(n, n);
        for (std::size_t i = 0; i < e.children().size(); ++i) r += child(e, i);
        return r;
      }
      case RatExpr::Kind::Mul: {
        Matrix<T> r = child(e, 0);
        for (std::size_t i = 1; i < e.children().size(); ++i) r = r * child(e, i);
        return r;
      }
    }
    return {};
  }

  Matrix<T> child(const RatExpr& e, std::size_t i) {
    path.push_back(i);
    Matrix<T> r = (*this)(e.children()[i]);
    path.pop_back();
    return r;
  }
};

template <class T>
Matrix<T> eval_impl(const RatExpr& e, const std::vector<Matrix<T>>& point, StarRule rule) {
  const Alphabet& alpha = *e.alphabet();
  auto bound = bind_point(alpha, point, rule);
  if (bound.empty()) throw MissingLetter("cannot infer evaluation size from an empty point");
  const std::size_t n = bound.front().rows();
  Evaluator<T> ev{alpha, std::move(bound), n, {}};
  return ev(e);
}

}  // namespace

MatrixExact eval_expression(const RatExpr& e, const std::vector<MatrixExact>& point, StarRule rule) {
  return eval_impl(e, point, rule);
}

MatrixFloat eval_expression(const RatExpr& e, const std::vector<MatrixFloat>& point, StarRule rule) {
  return eval_impl(e, point, rule);
}

// ---------------------------------------------------------------- random trees

namespace {

struct Generator {
  const AlphabetPtr& alpha;
  const std::function<std::uint64_t()>& next;
  const RandomExprOptions& opts;

  std::uint64_t below(std::uint64_t k) { return next() % k; }

  Scalar scalar() {
    const long num = static_cast<long>(below(7)) - 3;
    const long den = static_cast<long>(below(3)) + 1;
    Rational re(num, den);
    re.canonicalize();
    if (below(4) == 0) {
      Rational im(static_cast<long>(below(5)) - 2, 1);
      return Scalar(re, im);
    }
    return Scalar(re);
  }

  RatExpr leaf() {
    if (below(3) == 0) return RatExpr::constant(alpha, scalar());
    Letter l = alpha->letter_at(below(alpha->slots()));
    if (!opts.allow_star_letters) l.starred = false;
    return RatExpr::var(alpha, l);
  }

  RatExpr tree(std::size_t depth) {
    if (depth == 0 || below(4) == 0) return leaf();
    const std::uint64_t pick = below(opts.allow_inverse ? 4 : 3);
    switch (pick) {
      case 0:
      case 1: {
        const std::size_t k = 2 + below(std::max<std::size_t>(opts.max_children, 2) - 1);
        std::vector<RatExpr> cs;
        for (std::size_t i = 0; i < k; ++i) cs.push_back(tree(depth - 1));
        return pick == 0 ? RatExpr::add(std::move(cs)) : RatExpr::mul(std::move(cs));
      }
      case 2:
        return RatExpr::neg(tree(depth - 1));
      default:
        return RatExpr::inv(tree(depth - 1));
    }
  }
};

}  // namespace

RatExpr random_expression(const AlphabetPtr& alpha, const std::function<std::uint64_t()>& next,
                          const RandomExprOptions& opts) {
  Generator gen{alpha, next, opts};
  return gen.tree(opts.max_depth);
}

}  // namespace ncnull
