#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include <ncnull/bounds.hpp>
#include <ncnull/ideals.hpp>
#include <ncnull/positivity.hpp>
#include <ncnull/realization.hpp>
#include <ncnull/sampler.hpp>

namespace ncnull::selftest {

namespace {

MatrixExact scalar1(long v) { return MatrixExact{{Scalar(v)}}; }

MatrixExact power(const MatrixExact& x, std::size_t k) {
  MatrixExact r = MatrixExact::identity(x.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * x;
  return r;
}

MatrixExact small_integer_matrix(CounterRng& rng, std::size_t n, long range) {
  MatrixExact a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(static_cast<long>(rng.below(2 * range + 1)) - range);
  return a;
}

struct Sample {
  RatExpr expr;
  LinRep rep;
};

std::optional<Sample> random_compiled(CounterRng& rng, const BasePointPtr& base, std::size_t depth) {
  RandomExprOptions o;
  o.max_depth = depth;
  o.allow_star_letters = false;
  const RatExpr e = random_expression(base->alphabet(), rng.as_function(), o);
  try {
    return Sample{e, compile(e, base)};
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

BasePointPtr scalar_pair_base() {
  static const BasePointPtr b = BasePoint::make(Alphabet::standard(2, false), {scalar1(1), scalar1(-1)});
  return b;
}

BasePointPtr unit_pair_base() {
  static const BasePointPtr b =
      BasePoint::make(Alphabet::standard(2, false), {MatrixExact::unit(2, 0, 1), MatrixExact::unit(2, 1, 0)});
  return b;
}

// ---------------------------------------------------------------- 1

bool realization_dimensions(std::string& detail) {
  CounterRng rng(101);
  std::size_t checked = 0, inverses = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    const BasePointPtr& base = rng.below(2) ? scalar_pair_base() : unit_pair_base();
    auto a = random_compiled(rng, base, 3), b = random_compiled(rng, base, 3);
    if (!a || !b) continue;
    const std::size_t n1 = a->rep.dimension(), n2 = b->rep.dimension();
    const MatrixExact scale = MatrixExact::identity(base->m()) * Scalar(2);
    if (rep_add(a->rep, scale, b->rep).dimension() != n1 + n2) {
      detail = "rep_add dimension off for " + format_expression(a->expr);
      return false;
    }
    const LinRep prod = rep_mul(a->rep, b->rep);
    if (prod.dimension() != n1 + n2 || prod.constant_term() != a->rep.constant_term() * b->rep.constant_term()) {
      detail = "rep_mul mismatch for " + format_expression(a->expr);
      return false;
    }
    try {
      if (rep_inv(a->rep).dimension() != n1 + 1) {
        detail = "rep_inv dimension off for " + format_expression(a->expr);
        return false;
      }
      ++inverses;
    } catch (const SingularConstantTerm&) {
    }
    ++checked;
  }
  detail = std::to_string(checked) + " operand pairs, " + std::to_string(inverses) + " inverses";
  return checked >= 60 && inverses > 0;
}

// ---------------------------------------------------------------- 2

/// The (g+1)-dimensional representation of X1^-1 (1 - sum_{j>1} Xj Yj) about
/// X1 = 1, other letters 0, transcribed entry by entry.
LinRep sphere_reference(const BasePointPtr& base, std::size_t g) {
  const Alphabet& a = *base->alphabet();
  LinRepBuilder b(base, g + 1);
  b.c(0, scalar1(1)).b(0, scalar1(1)).b(1, scalar1(1));
  b.add(0, 0, a.letter("X1"), Scalar(-1));
  for (std::size_t j = 2; j <= g; ++j) {
    b.add(0, j, a.letter("X" + std::to_string(j)), Scalar(-1));
    b.add(j, 1, a.letter("Y" + std::to_string(j)), Scalar(1));
  }
  return b.build();
}

bool scalar_point_example(std::string& detail) {
  const auto alpha = Alphabet::standard(1, false);
  const auto base = BasePoint::make(alpha, {scalar1(1)});
  const LinRep s = compile(parse_expression("X1^-1", alpha), base);
  const Letter x{0, false};
  for (std::size_t k = 0; k <= 8; ++k) {
    GenPoly expect = GenPoly::constant(base->scalar_alphabet(), scalar1(k % 2 ? -1 : 1));
    for (std::size_t i = 0; i < k; ++i) expect = expect.times_letter(0);
    if (coefficient(s, Word(std::vector<Letter>(k, x))) != expect) {
      detail = "coefficient of X1^" + std::to_string(k) + " is not (-1)^k Y^k";
      return false;
    }
  }
  const std::size_t nmin = minimize_scalar(s).n_min;
  if (nmin != 1) {
    detail = "n_min = " + std::to_string(nmin) + " for X1^-1";
    return false;
  }
  LinRepBuilder ref(base, 1);
  ref.c(0, scalar1(1)).b(0, scalar1(1)).add(0, 0, x, Scalar(-1));
  if (!coefficients_agree(ref.build(), s, 8)) {
    detail = "X1^-1 disagrees with (1, -Y, 1)";
    return false;
  }
  std::ostringstream out;
  out << "X1^-1: n_min 1";
  for (std::size_t g : {2u, 3u}) {
    const RRIdeal I = builtin_ideal(IdealKind::Sprime, g);
    const Letter y1 = I.resolved().front();
    const LinRep comp = compile(I.resolvent().at(y1), I.base());
    if (!coefficients_agree(sphere_reference(I.base(), g), comp, 6)) {
      detail = "S' resolvent series differs from the reference at g = " + std::to_string(g);
      return false;
    }
    const std::size_t n = minimize_scalar(comp).n_min;
    out << "; S' g=" << g << ": n_min " << n;
    if (n > g + 1) {
      detail = out.str() + " exceeds g+1";
      return false;
    }
  }
  detail = out.str();
  return true;
}

// ---------------------------------------------------------------- 3

/// Dimension-3 representation of (X1 X2 - X2 X1)^-1 about (P1, P2).
LinRep commutator_reference(const BasePointPtr& base) {
  const MatrixExact P1 = base->at(0), P2 = base->at(1);
  const MatrixExact Q = (P1 * P2 - P2 * P1).inverse();
  const MatrixExact I = MatrixExact::identity(2);
  const Letter y1{0, false}, y2{1, false};
  LinRepBuilder b(base, 3);
  b.c(0, Q).b(0, I);
  b.add(0, 0, y1, -I, P2 * Q);
  b.add(0, 0, y1, P2, Q);
  b.add(0, 1, y1, I, I);
  b.add(2, 0, y1, -I, Q);
  b.add(0, 0, y2, I, P1 * Q);
  b.add(0, 0, y2, -P1, Q);
  b.add(0, 2, y2, -I, I);
  b.add(1, 0, y2, -I, Q);
  return b.build();
}

bool commutator_example(std::string& detail) {
  const RRIdeal I = builtin_ideal(IdealKind::CommInv, 2);
  const Letter x3 = I.resolved().front();
  const RatExpr r = I.resolvent().at(x3);
  const LinRep comp = compile(r, I.base());
  const LinRep ref = commutator_reference(I.base());
  if (comp.constant_term() != MatrixExact{{1, 0}, {0, -1}}) {
    detail = "[S,1] is not diag(1, -1)";
    return false;
  }
  if (!coefficients_agree(ref, comp, 4)) {
    detail = "series differs from the dimension-3 reference";
    return false;
  }
  // value check at nearby exact points
  CounterRng rng(303);
  std::size_t evaluated = 0;
  for (int t = 0; t < 20 && evaluated < 5; ++t) {
    std::vector<MatrixExact> pt;
    for (std::size_t k = 0; k < 3; ++k) pt.push_back(small_integer_matrix(rng, 2, 2));
    MatrixExact tree;
    try {
      tree = eval_expression(r, pt, StarRule::formal);
    } catch (const DomainError&) {
      continue;
    }
    if (eval_rep(ref, pt) != tree) {
      detail = "reference representation evaluates wrongly";
      return false;
    }
    ++evaluated;
  }
  const std::size_t n = minimize_scalar(comp).n_min;
  detail = "dimension " + std::to_string(comp.dimension()) + ", n_min " + std::to_string(n) + ", " +
           std::to_string(evaluated) + " point checks";
  return n <= 6 && evaluated == 5;
}

// ---------------------------------------------------------------- 4

/// Every C A_w B with |w| < max_len vanishes, by depth-first enumeration.
bool enumerated_zero(const ScalarRep& s, std::size_t max_len) {
  struct Frame {
    MatrixExact v;
    std::size_t len;
  };
  std::vector<Frame> stack{{s.B, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (!(s.C * f.v).is_zero()) return false;
    if (f.len + 1 >= max_len) continue;
    for (const auto& a : s.A) stack.push_back({a.times(f.v), f.len + 1});
  }
  return true;
}

bool zero_test_correctness(std::string& detail) {
  CounterRng rng(404);
  std::size_t total = 0, zeros = 0;
  while (total < 100) {
    const BasePointPtr& base = rng.below(3) == 0 ? unit_pair_base() : scalar_pair_base();
    auto r = random_compiled(rng, base, 2);
    if (!r) continue;
    LinRep s = r->rep;
    if (rng.below(2) == 0) s = rep_add(s, -MatrixExact::identity(base->m()), s);
    if (s.state_size() > 4) s = minimize(s);
    if (s.state_size() > 4) continue;
    const bool krylov = is_zero(s);
    if (krylov != enumerated_zero(scalarize(s), s.state_size())) {
      detail = "verdicts differ on " + format_expression(r->expr);
      return false;
    }
    zeros += krylov;
    ++total;
  }
  detail = std::to_string(total) + " reps, " + std::to_string(zeros) + " zero";
  return zeros > 0 && zeros < total;
}

// ---------------------------------------------------------------- 5

Size ceil_half(Size x) { return (x + 1) / 2; }

bool bound_formulas(std::string& detail) {
  std::size_t checks = 0;
  auto expect = [&](Size got, Size want, const char* what) {
    ++checks;
    if (got != want) {
      detail = std::string(what) + ": " + std::to_string(got) + " != " + std::to_string(want);
      return false;
    }
    return true;
  };
  for (Size u = 1; u <= 10; ++u)
    for (Size v = 1; v <= 10; ++v) {
      if (!expect(nss_bound(1, 1, u, v), u * v, "nss(1,1)")) return false;
      if (!expect(nss_bound(2, 3, u, v), 6 * u * v, "nss(2,3)")) return false;
      for (Size g = 1; g <= 4; ++g) {
        if (!expect(nss_bound(1, g + 1, u, v), ceil_half((g + 1) * u * v), "nss(1,g+1)")) return false;
        if (g >= 2 && !expect(nss_bound(1, g, u, v), ceil_half(g * u * v), "nss(1,g)")) return false;
      }
      for (Size g = 2; g <= 4; ++g) {
        if (!expect(star_bound(StarKind::unitaries, g, u, v), u * v, "unitaries")) return false;
        if (!expect(star_bound(StarKind::spherical, g, u, v), ceil_half((g + 1) * u * v), "spherical")) return false;
        if (!expect(star_bound(StarKind::partitioned, g, u, v), ceil_half(g * u * v), "partitioned")) return false;
        if (!expect(star_bound(StarKind::spherical, g, u, v, true), 2 * ceil_half((g + 1) * u * v), "real"))
          return false;
      }
    }
  for (Size g = 1; g <= 3; ++g)
    for (Size d = 1; d <= 4; ++d) {
      Size a = 1, b = 1;
      for (Size k = 0; k < d; ++k) {
        a *= 2 * g + 1;
        b *= 2 * g * g + 1;
      }
      if (!expect(pos_size(StarKind::unitaries, g, d), a, "pos unitaries")) return false;
      if (!expect(pos_size(StarKind::spherical, g, d), a, "pos spherical")) return false;
      if (!expect(pos_size(StarKind::partitioned, g, d), b, "pos partitioned")) return false;
    }
  for (Size m = 1; m <= 4; ++m)
    for (Size n = 1; n <= 4; ++n)
      if (!expect(ri_bound(m, n), m * ceil_half(m * n), "ri")) return false;
  detail = std::to_string(checks) + " substitutions";
  return true;
}

// ---------------------------------------------------------------- 6

struct IdealCase {
  IdealKind kind;
  std::size_t g;
};

const std::vector<IdealCase>& membership_cases() {
  static const std::vector<IdealCase> cases{{IdealKind::Tprime, 2}, {IdealKind::Sprime, 2}, {IdealKind::Sprime, 3},
                                            {IdealKind::Uprime, 2}, {IdealKind::CommInv, 2}, {IdealKind::T, 2},
                                            {IdealKind::S, 2},      {IdealKind::U, 2}};
  return cases;
}

/// The witness lies in the zero set and f is nonzero there, by direct products.
bool witness_checks_out(const NcPoly& f, const RRIdeal& I, const Witness& w) {
  if (!w.exact) return false;
  for (const auto& gen : I.generators())
    if (!eval_poly(gen, w.exact_point, w.rule).is_zero()) return false;
  const MatrixExact v = eval_poly(f, w.exact_point, w.rule);
  return !v.is_zero() && v == w.exact_value;
}

bool membership_oracle(std::string& detail) {
  std::size_t members = 0;
  for (const auto& c : membership_cases()) {
    const RRIdeal I = builtin_ideal(c.kind, c.g);
    const std::string tag = to_string(c.kind) + " g=" + std::to_string(c.g);
    for (const auto& gen : I.generators()) {
      if (!is_member(gen, I).member) {
        detail = tag + ": generator " + gen.to_string() + " rejected";
        return false;
      }
      ++members;
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const NcPoly f = random_ideal_element(I, seed);
      if (!is_member(f, I).member) {
        detail = tag + ": random element rejected: " + f.to_string();
        return false;
      }
      ++members;
    }
  }
  const std::vector<std::pair<IdealKind, std::string>> fixtures{{IdealKind::T, "X1 X2 - X2 X1"},
                                                                {IdealKind::S, "X1 X1^* + X2 X2^* - 1"}};
  std::ostringstream out;
  out << members << " members accepted";
  for (const auto& [kind, text] : fixtures) {
    const RRIdeal I = builtin_ideal(kind, 2);
    const NcPoly f = parse_polynomial(text, I.alphabet());
    MembershipOptions o;
    o.find_witness = true;
    o.seed = 5;
    const MembershipVerdict v = is_member(f, I, o);
    if (v.member || !v.witness || !witness_checks_out(f, I, *v.witness)) {
      detail = to_string(kind) + ": no verified exact witness for " + text;
      return false;
    }
    out << "; " << to_string(kind) << " fixture witness at size " << v.witness->size;
  }
  detail = out.str();
  return true;
}

// ---------------------------------------------------------------- 7

bool nullstellensatz_consistency(std::string& detail) {
  constexpr Size cap = 12;
  std::ostringstream out;
  for (IdealKind kind : {IdealKind::T, IdealKind::S, IdealKind::U}) {
    const RRIdeal I = builtin_ideal(kind, 2);
    std::vector<NcPoly> members;
    for (std::uint64_t seed = 0; members.size() < 20 && seed < 2000; ++seed)
      for (std::size_t len : {1u, 0u}) {
        const NcPoly f = random_ideal_element(I, seed, {len, 1, false});
        if (!f.is_zero() && witness_size(f, I) <= cap) {
          members.push_back(f);
          break;
        }
      }
    if (members.size() < 20) {
      detail = to_string(kind) + ": fewer than 20 members with witness size <= 12";
      return false;
    }
    double worst = 0.0;
    std::size_t evaluations = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const NcPoly& f = members[k];
      const Size top = witness_size(f, I);
      for (std::size_t size = 1; size <= top; ++size)
        for (std::size_t t = 0; t < 50; ++t) {
          CounterRng rng(700 + k, trial_stream(size, t));
          const auto p = sample_point(I.domain(), *I.alphabet(), size, rng);
          worst = std::max(worst, max_abs(eval_poly(f, p.matrices, p.rule)));
          ++evaluations;
        }
    }
    out << to_string(kind) << ": " << evaluations << " evals, max " << worst << "; ";
    if (worst > 1e-10) {
      detail = out.str() + "member does not vanish";
      return false;
    }
  }
  const std::vector<std::pair<IdealKind, std::string>> fixtures{{IdealKind::T, "X1 X2 - X2 X1"},
                                                                {IdealKind::S, "X1 X1^* + X2 X2^* - 1"}};
  for (const auto& [kind, text] : fixtures) {
    const RRIdeal I = builtin_ideal(kind, 2);
    const NcPoly f = parse_polynomial(text, I.alphabet());
    FalsifyOptions o;
    o.max_size = witness_size(f, I);
    o.trials = 200;
    o.seed = 17;
    const auto w = falsify(f, I.domain(), o);
    if (!w) {
      detail = out.str() + to_string(kind) + " fixture not falsified";
      return false;
    }
    out << to_string(kind) << " fixture falsified at size " << w->size << " trial " << w->trial << "; ";
  }
  detail = out.str();
  return true;
}

// ---------------------------------------------------------------- 8

/// a_0 Y a_1 Y ... Y a_k with 2 x 2 exact coefficients.
using GpiTerm = std::vector<MatrixExact>;

MatrixExact gpi_coefficient(CounterRng& rng) {
  if (rng.below(2) == 0) return MatrixExact::unit(2, rng.below(2), rng.below(2));
  return small_integer_matrix(rng, 2, 2);
}

MatrixExact eval_gpi(const std::vector<GpiTerm>& f, const MatrixExact& z, std::size_t s) {
  MatrixExact sum(z.rows(), z.cols());
  for (const auto& term : f) {
    MatrixExact v = term.front().kron_identity(s);
    for (std::size_t i = 1; i < term.size(); ++i) v = v * z * term[i].kron_identity(s);
    sum += v;
  }
  return sum;
}

bool gpi_property(std::string& detail) {
  const auto scalar_alpha = scalarized_alphabet(*Alphabet::standard(1, false), 2);
  CounterRng rng(808);
  std::size_t found = 0, max_trials = 0, drawn = 0;
  while (found < 20) {
    if (++drawn > 200) {
      detail = "could not draw 20 nonzero generalized polynomials";
      return false;
    }
    const std::size_t h = 1 + rng.below(3);
    std::vector<GpiTerm> f;
    const std::size_t terms = 1 + rng.below(3);
    GenPoly image(scalar_alpha, 2);
    for (std::size_t t = 0; t < terms; ++t) {
      const std::size_t k = t == 0 ? h : rng.below(h + 1);
      GpiTerm term{gpi_coefficient(rng)};
      GenPoly p = GenPoly::constant(scalar_alpha, term.front());
      for (std::size_t i = 0; i < k; ++i) {
        term.push_back(gpi_coefficient(rng));
        p = p.times_letter(0) * term.back();
      }
      image += p;
      f.push_back(std::move(term));
    }
    if (image.is_zero()) continue;
    const std::size_t deg = image.degree();
    const std::size_t s = (deg + 2) / 2;
    bool hit = false;
    for (std::size_t trial = 0; trial < 500 && !hit; ++trial) {
      CounterRng point_rng(809, trial_stream(found, trial));
      const MatrixExact z = small_integer_matrix(point_rng, 2 * s, 2);
      const MatrixExact v = eval_gpi(f, z, s);
      if (image.evaluate({z}) != v) {
        detail = "matrix reduction disagrees with direct evaluation";
        return false;
      }
      if (!v.is_zero()) {
        hit = true;
        max_trials = std::max<std::size_t>(max_trials, trial + 1);
      }
    }
    if (!hit) {
      detail = "no nonvanishing evaluation within 500 trials for polynomial " + std::to_string(found);
      return false;
    }
    ++found;
  }
  detail = std::to_string(found) + " polynomials, worst search " + std::to_string(max_trials) + " trials";
  return true;
}

// ---------------------------------------------------------------- 9

bool sohs_verification(std::string& detail) {
  const RRIdeal T = builtin_ideal(IdealKind::T, 1);
  auto P = [&](const std::string& s) { return parse_polynomial(s, T.alphabet()); };
  auto cert = [](std::vector<NcPoly> sq, NcPoly q) { return SohsCertificate{std::move(sq), std::move(q), std::nullopt}; };
  struct Case {
    NcPoly f;
    SohsCertificate c;
    bool expected;
  };
  const std::vector<Case> cases{
      {P("X1^* X1"), cert({P("X1")}, P("0")), true},
      {P("2 - X1^* X1 - X1 X1^*"), cert({}, P("2 - X1^* X1 - X1 X1^*")), true},
      {P("(1 - X1)^* (1 - X1)"), cert({P("1 - X1")}, P("0")), true},
      {P("(1 - X1)^* (1 - X1)"), cert({P("1 + X1")}, P("0")), false},
  };
  const SampleDomain dom = T.domain();
  double worst = 0.0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& c = cases[k];
    if (verify_certificate(c.f, c.c, T) != c.expected) {
      detail = "certificate " + std::to_string(k) + " verdict wrong";
      return false;
    }
    if (!c.expected) continue;
    const ProbeReport r = positivity_probe(c.f, dom, 1, 8, 20, 11);
    worst = std::min(worst, r.min_eigenvalue);
    if (r.min_eigenvalue < -1e-8) {
      detail = "certified polynomial " + c.f.to_string() + " has eigenvalue " + std::to_string(r.min_eigenvalue);
      return false;
    }
  }
  const NcPoly f = P("(1 - X1)^* (1 - X1)");
  const GramProblem prob = gram_constraints(f, 1, NcPoly(T.alphabet()));
  const auto path = (std::filesystem::temp_directory_path() / "ncnull_selftest_gram.txt").string();
  export_gram(prob, path);
  const GramProblem back = import_gram(path);
  std::remove(path.c_str());
  std::size_t i1 = prob.basis.size(), ix = prob.basis.size();
  for (std::size_t i = 0; i < prob.basis.size(); ++i) {
    if (prob.basis[i].empty()) i1 = i;
    if (prob.basis[i] == Word::of(Letter{0, false})) ix = i;
  }
  MatrixExact G(prob.basis.size(), prob.basis.size());
  G(i1, i1) = Scalar(1);
  G(i1, ix) = Scalar(-1);
  G(ix, i1) = Scalar(-1);
  G(ix, ix) = Scalar(1);
  // sum_{r,c} G_rc basis[c]^* basis[r] must rebuild f
  NcPoly rebuilt(T.alphabet());
  for (std::size_t r = 0; r < G.rows(); ++r)
    for (std::size_t c = 0; c < G.cols(); ++c)
      if (!G(r, c).is_zero()) rebuilt.add_term(back.basis[c].star() * back.basis[r], G(r, c));
  if (!(back == prob) || !gram_satisfies(back, G) || !is_positive_semidefinite(G) || rebuilt != f) {
    detail = "Gram fixture [[1,-1],[-1,1]] rejected";
    return false;
  }
  detail = std::to_string(cases.size()) + " certificates, Gram fixture ok, min eigenvalue " + std::to_string(worst);
  return true;
}

// ---------------------------------------------------------------- 10

bool zero_divisor_fixture(std::string& detail) {
  std::size_t checked = 0;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      if (m + n == 0) continue;
      const auto [a, b] = zero_divisor_witness(m, n);
      const bool ok = a.rows() == m + n + 1 && !(power(b, m) * power(a, n)).is_zero() && (a * b).is_zero() &&
                      power(b, m + 1).is_zero() && power(a, n + 1).is_zero();
      if (!ok) {
        detail = "relations fail at m=" + std::to_string(m) + " n=" + std::to_string(n);
        return false;
      }
      ++checked;
    }
  detail = std::to_string(checked) + " (m, n) pairs";
  return true;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "realization arithmetic dimensions", 1.0, realization_dimensions},
      {2, "scalar-point series and S' resolvent", 10.0, scalar_point_example},
      {3, "commutator inverse about (E12, E21)", 10.0, commutator_example},
      {4, "Krylov zero test vs word enumeration", 60.0, zero_test_correctness},
      {5, "size bound formulas", 1.0, bound_formulas},
      {6, "membership oracle", 300.0, membership_oracle},
      {7, "numeric consistency on star ideals", 300.0, nullstellensatz_consistency},
      {8, "generalized polynomial identity search", 60.0, gpi_property},
      {9, "SOHS certificates and Gram fixture", 30.0, sohs_verification},
      {10, "zero-divisor fixture", 1.0, zero_divisor_fixture},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.budget = c.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = c.check(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.passed && r.seconds > r.budget) {
    r.passed = false;
    r.detail += " (over time budget)";
  }
  return r;
}

std::vector<CriterionResult> run_all(const std::vector<int>& only,
                                     const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    out.push_back(run_criterion(c));
    if (report) report(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.budget);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " (" + timing +
         "): " + r.detail;
}

}  // namespace ncnull::selftest
