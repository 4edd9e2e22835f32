#include "ncnull/positivity.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ncnull/errors.hpp"

namespace ncnull {

std::string to_string(RemainderCheck c) {
  switch (c) {
    case RemainderCheck::zero:
      return "zero";
    case RemainderCheck::cofactors:
      return "cofactors";
    case RemainderCheck::oracle:
      return "oracle";
  }
  return "?";
}

NcPoly sum_of_hermitian_squares(const std::vector<NcPoly>& squares, const AlphabetPtr& alpha) {
  NcPoly s(alpha);
  for (const auto& p : squares) {
    require_same(p.alphabet(), alpha);
    s += p.star() * p;
  }
  return s;
}

CertificateReport check_certificate(const NcPoly& f, const SohsCertificate& cert, const RRIdeal& I) {
  require_same(f.alphabet(), I.alphabet());
  require_same(cert.remainder.alphabet(), I.alphabet());
  CertificateReport r;
  r.identity_holds = (f - sum_of_hermitian_squares(cert.squares, f.alphabet()) - cert.remainder).is_zero();
  if (cert.remainder.is_zero()) {
    r.path = RemainderCheck::zero;
    r.remainder_ok = true;
  } else if (cert.cofactors) {
    r.path = RemainderCheck::cofactors;
    NcPoly combo(f.alphabet());
    bool ok = true;
    for (const auto& c : *cert.cofactors) {
      if (c.generator >= I.generators().size()) {
        ok = false;
        break;
      }
      combo += c.left * I.generators()[c.generator] * c.right;
    }
    r.remainder_ok = ok && combo == cert.remainder;
  } else {
    r.path = RemainderCheck::oracle;
    r.remainder_ok = is_member(cert.remainder, I).member;
  }
  r.valid = r.identity_holds && r.remainder_ok;
  return r;
}

bool verify_certificate(const NcPoly& f, const SohsCertificate& cert, const RRIdeal& I) {
  return check_certificate(f, cert, I).valid;
}

// ---------------------------------------------------------------- Gram

bool operator==(const GramProblem& a, const GramProblem& b) {
  return *a.alphabet == *b.alphabet && a.d == b.d && a.basis == b.basis && a.constraints == b.constraints;
}

GramProblem gram_constraints(const NcPoly& f, std::size_t d, const NcPoly& q) {
  require_same(f.alphabet(), q.alphabet());
  const AlphabetPtr& alpha = f.alphabet();
  if (!alpha->has_star()) throw AlphabetMismatch("Gram problems need an alphabet with adjoints");
  const NcPoly target = f - q;
  if (target.degree() > 2 * d)
    throw DegreeTooHigh("degree " + std::to_string(target.degree()) + " exceeds 2d = " + std::to_string(2 * d));
  GramProblem p;
  p.alphabet = alpha;
  p.d = d;
  p.basis = words_up_to(*alpha, d);
  std::map<Word, std::vector<GramEntry>> by_word;
  for (std::size_t r = 0; r < p.basis.size(); ++r)
    for (std::size_t c = 0; c < p.basis.size(); ++c) by_word[p.basis[c].star() * p.basis[r]].push_back({r, c});
  for (auto& [w, entries] : by_word) p.constraints.push_back({w, std::move(entries), target.coefficient(w)});
  return p;
}

MatrixExact gram_from_squares(const GramProblem& p, const std::vector<NcPoly>& squares) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < p.basis.size(); ++i) index.emplace(p.basis[i], i);
  const std::size_t N = p.basis.size();
  MatrixExact G(N, N);
  for (const auto& sq : squares) {
    std::vector<Scalar> v(N);
    for (const auto& [w, c] : sq.terms()) {
      const auto it = index.find(w);
      if (it == index.end()) throw DegreeTooHigh("square has a term outside the Gram basis");
      v[it->second] = c;
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) G(i, j) += v[i] * v[j].conj();
  }
  return G;
}

bool gram_satisfies(const GramProblem& p, const MatrixExact& G) {
  if (G.rows() != p.basis.size() || G.cols() != p.basis.size()) return false;
  for (const auto& c : p.constraints) {
    Scalar s;
    for (const auto& e : c.entries) s += G(e.row, e.col);
    if (s != c.rhs) return false;
  }
  return true;
}

bool is_positive_semidefinite(const MatrixExact& G) {
  if (!G.is_square() || G != G.conjugate_transpose()) return false;
  MatrixExact a = G;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Rational piv = a(k, k).re();
    if (piv < 0) return false;
    if (piv == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) return false;
      continue;
    }
    const Scalar inv = Scalar(piv).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

namespace {

std::string word_token(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + a.name(w[i]);
  return s;
}

Word parse_word_token(const std::string& t, const Alphabet& a) {
  if (t == "1") return Word();
  std::vector<Letter> ls;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, '.')) ls.push_back(a.letter(part));
  return Word(ls);
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

std::string format_gram(const GramProblem& p) {
  const Alphabet& a = *p.alphabet;
  std::ostringstream out;
  out << "gram d " << p.d << " basis " << p.basis.size() << " constraints " << p.constraints.size() << "\n";
  out << "alphabet " << (a.has_star() ? "star" : "plain");
  for (std::size_t i = 0; i < a.size(); ++i) out << ' ' << a.base_name(i);
  out << "\n";
  for (const auto& c : p.constraints) {
    out << word_token(c.word, a) << ' ' << rational_text(c.rhs.re()) << ' ' << rational_text(c.rhs.im()) << ' '
        << c.entries.size();
    for (const auto& e : c.entries)
      out << ' ' << word_token(p.basis[e.row], a) << ' ' << word_token(p.basis[e.col], a) << " 1 0";
    out << "\n";
  }
  return out.str();
}

GramProblem parse_gram(const std::string& text) {
  std::istringstream in(text);
  std::string tag, k1, k2, k3;
  std::size_t d = 0, nbasis = 0, ncons = 0;
  if (!(in >> tag >> k1 >> d >> k2 >> nbasis >> k3 >> ncons) || tag != "gram" || k1 != "d" || k2 != "basis" ||
      k3 != "constraints")
    throw SpecError("gram file: bad header");
  std::string line;
  std::getline(in, line);
  if (!std::getline(in, line)) throw SpecError("gram file: missing alphabet line");
  std::istringstream al(line);
  std::string kind;
  al >> tag >> kind;
  if (tag != "alphabet" || (kind != "star" && kind != "plain")) throw SpecError("gram file: bad alphabet line");
  std::vector<std::string> names;
  for (std::string n; al >> n;) names.push_back(n);
  GramProblem p;
  p.alphabet = Alphabet::named(names, kind == "star");
  p.d = d;
  p.basis = words_up_to(*p.alphabet, d);
  if (p.basis.size() != nbasis) throw SpecError("gram file: basis size does not match d");
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < p.basis.size(); ++i) index.emplace(p.basis[i], i);
  auto lookup = [&](const std::string& t) {
    const auto it = index.find(parse_word_token(t, *p.alphabet));
    if (it == index.end()) throw SpecError("gram file: word " + t + " outside the basis");
    return it->second;
  };
  for (std::size_t k = 0; k < ncons; ++k) {
    if (!std::getline(in, line)) throw SpecError("gram file: missing constraint lines");
    std::istringstream ls(line);
    std::string w, re, im;
    std::size_t count = 0;
    if (!(ls >> w >> re >> im >> count)) throw SpecError("gram file: bad constraint line");
    GramConstraint c;
    c.word = parse_word_token(w, *p.alphabet);
    c.rhs = Scalar(parse_rational(re), parse_rational(im));
    for (std::size_t e = 0; e < count; ++e) {
      std::string r, col, cre, cim;
      if (!(ls >> r >> col >> cre >> cim)) throw SpecError("gram file: truncated entry list");
      if (cre != "1" || cim != "0") throw SpecError("gram file: entry coefficients must be 1");
      c.entries.push_back({lookup(r), lookup(col)});
    }
    p.constraints.push_back(std::move(c));
  }
  return p;
}

void export_gram(const GramProblem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << format_gram(p);
  if (!out) throw Error("write failed for " + path);
}

GramProblem import_gram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gram(ss.str());
}

ProbeReport positivity_probe(const NcPoly& f, const SampleDomain& d, std::size_t min_size, std::size_t max_size,
                             std::size_t trials, std::uint64_t seed, double tol) {
  ProbeReport r;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= max_size; ++size)
    for (std::size_t trial = 0; trial < trials; ++trial) {
      CounterRng rng(seed, trial_stream(size, trial));
      DomainPoint<MatrixFloat> p;
      try {
        p = sample_point(d, *f.alphabet(), size, rng);
      } catch (const ConditioningFailure&) {
        continue;
      }
      const double ev = hermitian_eigenvalues(eval_poly(f, p.matrices, p.rule)).front();
      if (ev < r.min_eigenvalue) {
        r.min_eigenvalue = ev;
        r.size = size;
        r.trial = trial;
      }
    }
  r.positive = r.min_eigenvalue >= -tol;
  return r;
}

}  // namespace ncnull
