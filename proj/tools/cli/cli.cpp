#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>
#include <ncnull/bounds.hpp>
#include <ncnull/ideals.hpp>
#include <ncnull/matrix_io.hpp>
#include <ncnull/positivity.hpp>
#include <ncnull/realization.hpp>
#include <ncnull/sampler.hpp>

#include "acceptance.hpp"

namespace ncnull::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string ideal;
  std::string ideal_file;
  std::size_t g = 2;
  bool plain = false;
  std::string poly;
  std::string expr;
  std::string basepoint = "scalar:1";
  std::string point;
  std::string domain;
  std::string mode = "nonzero";
  std::string cert;
  std::string remainder;
  std::string out;
  std::size_t size = 0;
  std::string sizes;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  bool json = false;
  std::size_t order = 3;
  std::size_t degree = 0;
  bool no_witness = false;
  bool probe = false;
  std::vector<int> only;
};

/// Raised for bad flag combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<RRIdeal> load_ideal(const Options& o) {
  if (!o.ideal.empty() && !o.ideal_file.empty()) throw UsageError("--ideal and --ideal-file are exclusive");
  if (!o.ideal.empty()) return builtin_ideal(ideal_kind_from_string(o.ideal), o.g);
  if (!o.ideal_file.empty()) return custom_ideal_file(o.ideal_file);
  return std::nullopt;
}

AlphabetPtr alphabet_for(const Options& o, const std::optional<RRIdeal>& I) {
  if (I) return I->alphabet();
  if (o.g == 0) throw UsageError("--g must be positive");
  return Alphabet::standard(o.g, !o.plain);
}

NcPoly require_poly(const Options& o, const AlphabetPtr& alpha) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  return parse_polynomial(o.poly, alpha);
}

/// --expr, or --poly read as an expression.
RatExpr require_expr(const Options& o, const AlphabetPtr& alpha) {
  if (!o.expr.empty() && !o.poly.empty()) throw UsageError("give either --expr or --poly");
  if (!o.expr.empty()) return parse_expression(o.expr, alpha);
  if (!o.poly.empty()) return poly_to_expr(parse_polynomial(o.poly, alpha));
  throw UsageError("--expr or --poly is required");
}

/// "scalar:v" or "scalar:v1,v2,..." (one value per base letter), inline JSON,
/// or a JSON file: a list of matrices or {"matrices": {letter: matrix}}.
std::vector<MatrixExact> parse_point(const std::string& text, const Alphabet& alpha) {
  std::vector<MatrixExact> point;
  if (text.rfind("scalar:", 0) == 0) {
    std::vector<Rational> vals;
    std::stringstream ss(text.substr(7));
    for (std::string v; std::getline(ss, v, ',');) vals.push_back(parse_rational(v));
    if (vals.empty()) throw UsageError("empty scalar point");
    const std::size_t count = alpha.has_star() ? alpha.size() : alpha.slots();
    if (vals.size() != 1 && vals.size() != count)
      throw UsageError("scalar point needs 1 or " + std::to_string(count) + " values");
    for (std::size_t i = 0; i < count; ++i) point.push_back(MatrixExact{{Scalar(vals[vals.size() == 1 ? 0 : i])}});
    return point;
  }
  const json j = json::parse(!text.empty() && (text[0] == '{' || text[0] == '[') ? text : read_file(text));
  if (j.is_array()) {
    for (const auto& m : j) point.push_back(exact_from_json(m));
    return point;
  }
  const json& mats = j.contains("matrices") ? j.at("matrices") : j;
  const std::size_t count = alpha.has_star() ? alpha.size() : alpha.slots();
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = alpha.has_star() ? alpha.base_name(i) : alpha.name(alpha.letter_at(i));
    if (!mats.contains(name)) throw UsageError("point has no matrix for " + name);
    point.push_back(exact_from_json(mats.at(name)));
  }
  return point;
}

StarRule rule_for(const Alphabet& alpha) { return alpha.has_star() ? StarRule::adjoint : StarRule::formal; }

std::pair<std::size_t, std::size_t> size_range(const Options& o, std::size_t default_hi) {
  if (o.sizes.empty()) return {1, o.size ? o.size : default_hi};
  std::string s = o.sizes;
  for (auto sep : {std::string(".."), std::string("-"), std::string(":")}) {
    const auto at = s.find(sep);
    if (at != std::string::npos)
      return {std::stoul(s.substr(0, at)), std::stoul(s.substr(at + sep.size()))};
  }
  return {1, std::stoul(s)};
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

json float_list(const std::vector<MatrixFloat>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

json exact_list(const std::vector<MatrixExact>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

std::string rule_name(StarRule r) { return r == StarRule::adjoint ? "adjoint" : "formal"; }

/// Alphabet whose letters the domain fills.
AlphabetPtr domain_alphabet(const SampleDomain& d) {
  switch (d.kind) {
    case DomainKind::unitaries:
    case DomainKind::spherical:
      return Alphabet::standard(d.g, true);
    case DomainKind::partitioned:
      return Alphabet::named(grid_names("X", d.g), true);
    case DomainKind::xgn:
      return Alphabet::standard(2 * d.g, false);
    case DomainKind::unrestricted:
      return Alphabet::standard(d.g, false);
  }
  return Alphabet::standard(d.g, false);
}

SampleDomain domain_for(const Options& o, const std::optional<RRIdeal>& I) {
  if (!o.domain.empty()) return {domain_kind_from_string(o.domain), o.g};
  if (I) return I->domain();
  return {DomainKind::unitaries, o.g};
}

// ---------------------------------------------------------------- commands

int cmd_eval(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  const AlphabetPtr alpha = alphabet_for(o, I);
  const RatExpr e = require_expr(o, alpha);
  if (o.point.empty()) throw UsageError("--point is required");
  const MatrixExact v = eval_expression(e, parse_point(o.point, *alpha), rule_for(*alpha));
  std::ostringstream text;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) text << (j ? "  " : "") << v(i, j);
    text << "\n";
  }
  emit(out, o, json{{"value", to_json(v)}}, text.str());
  return kSuccess;
}

BasePointPtr base_for(const Options& o, const AlphabetPtr& alpha) {
  return BasePoint::make(alpha, parse_point(o.basepoint, *alpha), rule_for(*alpha));
}

int cmd_expand(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  const AlphabetPtr alpha = alphabet_for(o, I);
  const RatExpr e = require_expr(o, alpha);
  const LinRep s = compile(e, base_for(o, alpha));
  json lines = json::array();
  std::ostringstream text;
  for (const auto& w : words_up_to(*alpha, o.order)) {
    const GenPoly c = coefficient(s, w);
    if (c.is_zero()) continue;
    lines.push_back({{"word", w.to_string(*alpha)}, {"coefficient", c.to_string()}});
    text << w.to_string(*alpha) << "\t" << c.to_string() << "\n";
  }
  emit(out, o, json{{"m", s.m()}, {"dimension", s.dimension()}, {"order", o.order}, {"coefficients", lines}},
       text.str());
  return kSuccess;
}

int cmd_zero_test(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  const AlphabetPtr alpha = alphabet_for(o, I);
  const RatExpr e = require_expr(o, alpha);
  const LinRep s = compile(e, base_for(o, alpha));
  const bool zero = is_zero(s);
  const std::size_t nmin = minimize_scalar(s).n_min;
  std::ostringstream text;
  text << "zero: " << (zero ? "true" : "false") << "\n"
       << "m: " << s.m() << "\ndimension: " << s.dimension() << "\nminimal scalar dimension: " << nmin << "\n";
  emit(out, o, json{{"zero", zero}, {"m", s.m()}, {"dimension", s.dimension()}, {"n_min", nmin}}, text.str());
  return zero ? kSuccess : kNegative;
}

json witness_json(const Witness& w) {
  json j{{"size", w.size}, {"exact", w.exact}, {"rule", rule_name(w.rule)}};
  if (w.exact) {
    j["point"] = exact_list(w.exact_point);
    j["value"] = to_json(w.exact_value);
  } else {
    j["point"] = float_list(w.point);
    j["value"] = to_json(w.value);
    j["seed"] = w.seed;
    j["trial"] = w.trial;
  }
  return j;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  if (!I) throw UsageError("--ideal or --ideal-file is required");
  const NcPoly f = require_poly(o, I->alphabet());
  MembershipOptions mo;
  mo.find_witness = !o.no_witness;
  mo.seed = o.seed;
  if (o.trials) mo.trials = o.trials;
  mo.max_size = o.size;
  const MembershipVerdict v = is_member(f, *I, mo);
  json j{{"ideal", I->name()}, {"member", v.member}, {"seed", o.seed}};
  std::ostringstream text;
  text << "ideal: " << I->name() << "\nmember: " << (v.member ? "true" : "false") << "\nseed: " << o.seed << "\n";
  if (v.witness) {
    j["witness"] = witness_json(*v.witness);
    text << "witness: size " << v.witness->size << (v.witness->exact ? " (exact)" : " (numeric)") << "\n"
         << j["witness"].dump() << "\n";
  } else if (!v.member && mo.find_witness) {
    text << "witness: none found\n";
  }
  emit(out, o, j, text.str());
  return v.member ? kSuccess : kNegative;
}

std::optional<StarKind> star_kind_of(const RRIdeal& I) {
  switch (I.kind()) {
    case IdealKind::T:
      return StarKind::unitaries;
    case IdealKind::S:
      return StarKind::spherical;
    case IdealKind::U:
      return I.g() == 1 ? StarKind::unitaries : StarKind::partitioned;
    default:
      return std::nullopt;
  }
}

int cmd_bound(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  json j;
  std::ostringstream text;
  if (!I) {
    // identity-testing size of an expression from its minimal realization
    const AlphabetPtr alpha = alphabet_for(o, I);
    const LinRep s = compile(require_expr(o, alpha), base_for(o, alpha));
    const std::size_t n = (minimize_scalar(s).n_min + s.m() - 1) / s.m();
    const Size N = ri_bound(s.m(), std::max<std::size_t>(n, 1));
    j = {{"m", s.m()}, {"n", n}, {"ri_bound", N}};
    text << "m: " << s.m() << "\nn: " << n << "\nri_bound: " << N << "\n";
    emit(out, o, j, text.str());
    return kSuccess;
  }
  const NcPoly f = require_poly(o, I->alphabet());
  const auto [u, v] = degree_and_terms(f);
  const Size nss = nss_bound(I->m(), I->n(), u, v);
  const Size nssd = nss_degree_bound(I->m(), I->n(), u, I->g());
  const Size ws = witness_size(f, *I);
  j = {{"ideal", I->name()}, {"u", u}, {"v", v}, {"m", I->m()}, {"n", I->n()}, {"nss_bound", nss},
       {"nss_degree_bound", nssd}, {"witness_size", ws}};
  text << "ideal: " << I->name() << "\nu: " << u << "\nv: " << v << "\nm: " << I->m() << "\nn: " << I->n()
       << "\nnss_bound: " << nss << "\nnss_degree_bound: " << nssd << "\n";
  if (const auto k = star_kind_of(*I)) {
    const Size sb = star_bound(*k, I->g(), u, v);
    const Size real = star_bound(*k, I->g(), u, v, true);
    j["star_bound"] = sb;
    j["star_bound_real"] = real;
    text << "star_bound (" << to_string(*k) << "): " << sb << "\nstar_bound real case: " << real << "\n";
    if (u % 2 == 0) {
      const Size d = u / 2;
      try {
        const Size ps = pos_size(*k, I->g(), d);
        j["pos_size"] = ps;
        text << "pos_size (d = " << d << "): " << ps << "\n";
        if (ps > 64) text << "warning: pos_size " << ps << " is beyond sampling scale\n";
      } catch (const Overflow&) {
        j["pos_size"] = "overflow";
        text << "pos_size (d = " << d << "): overflow\n";
      }
    }
  }
  text << "witness_size: " << ws << "\n";
  emit(out, o, j, text.str());
  return kSuccess;
}

double domain_residual(const SampleDomain& d, const DomainPoint<MatrixFloat>& p) {
  switch (d.kind) {
    case DomainKind::unitaries: {
      double r = 0.0;
      for (const auto& m : p.matrices) r = std::max(r, unitary_residual(m));
      return r;
    }
    case DomainKind::spherical:
      return spherical_residual(p.matrices);
    case DomainKind::partitioned: {
      std::vector<std::vector<MatrixFloat>> blocks(d.g);
      for (std::size_t i = 0; i < d.g; ++i)
        for (std::size_t j = 0; j < d.g; ++j) blocks[i].push_back(p.matrices[i * d.g + j]);
      return partitioned_residual(blocks);
    }
    case DomainKind::xgn: {
      const std::vector<MatrixFloat> a(p.matrices.begin(), p.matrices.begin() + d.g);
      const std::vector<MatrixFloat> b(p.matrices.begin() + d.g, p.matrices.end());
      return xgn_residual(a, b);
    }
    case DomainKind::unrestricted:
      return 0.0;
  }
  return 0.0;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  const SampleDomain d = domain_for(o, I);
  const AlphabetPtr alpha = I ? I->alphabet() : domain_alphabet(d);
  const std::size_t size = o.size ? o.size : 2;
  const std::size_t count = o.trials ? o.trials : 1;
  json samples = json::array();
  std::ostringstream text;
  text << "domain: " << to_string(d.kind) << " g=" << d.g << "\nsize: " << size << "\nseed: " << o.seed << "\n";
  for (std::size_t t = 0; t < count; ++t) {
    CounterRng rng(o.seed, trial_stream(size, t));
    const auto p = sample_point(d, *alpha, size, rng);
    const double res = domain_residual(d, p);
    json mats = json::object();
    const std::size_t letters = p.rule == StarRule::adjoint ? alpha->size() : alpha->slots();
    for (std::size_t i = 0; i < letters && i < p.matrices.size(); ++i) {
      const std::string name = p.rule == StarRule::adjoint ? alpha->base_name(i) : alpha->name(alpha->letter_at(i));
      mats[name] = to_json(p.matrices[i]);
    }
    samples.push_back({{"trial", t}, {"seed", o.seed}, {"size", size}, {"residual", res}, {"matrices", mats}});
    text << "trial " << t << " residual " << std::scientific << std::setprecision(3) << res << std::defaultfloat
         << "\n"
         << mats.dump() << "\n";
  }
  emit(out, o, json{{"domain", to_string(d.kind)}, {"g", d.g}, {"samples", samples}}, text.str());
  return kSuccess;
}

int cmd_falsify(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  const SampleDomain d = domain_for(o, I);
  const AlphabetPtr alpha = I ? I->alphabet() : (o.domain.empty() ? alphabet_for(o, I) : domain_alphabet(d));
  FalsifyOptions fo;
  const auto [lo, hi] = size_range(o, 4);
  fo.min_size = lo;
  fo.max_size = hi;
  fo.trials = o.trials ? o.trials : 200;
  fo.seed = o.seed;
  fo.tol = o.tol;
  if (o.mode == "negative")
    fo.mode = FalsifyMode::negative_eigenvalue;
  else if (o.mode != "nonzero")
    throw UsageError("--mode must be nonzero or negative");
  std::optional<FalsifyWitness> w;
  if (!o.expr.empty())
    w = falsify(parse_expression(o.expr, alpha), d, fo);
  else
    w = falsify(require_poly(o, alpha), d, fo);
  json j{{"domain", to_string(d.kind)}, {"sizes", {lo, hi}}, {"trials", fo.trials}, {"seed", o.seed},
         {"witness", nullptr}};
  std::ostringstream text;
  text << "domain: " << to_string(d.kind) << "\nsizes: " << lo << ".." << hi << "\ntrials: " << fo.trials
       << "\nseed: " << o.seed << "\n";
  if (w) {
    j["witness"] = {{"size", w->size}, {"trial", w->trial},         {"seed", w->seed},
                    {"score", w->score}, {"rule", rule_name(w->rule)}, {"point", float_list(w->point)},
                    {"value", to_json(w->value)}};
    text << "witness: size " << w->size << " trial " << w->trial << " score " << w->score << "\n"
         << j["witness"].dump() << "\n";
  } else {
    text << "witness: none\n";
  }
  emit(out, o, j, text.str());
  return w ? kNegative : kSuccess;
}

/// {"squares": [...], "remainder": "...", "cofactors": [{"left","generator","right"}]}
SohsCertificate read_certificate(const std::string& source, const AlphabetPtr& alpha) {
  const json j = json::parse(!source.empty() && source[0] == '{' ? source : read_file(source));
  SohsCertificate c{{}, NcPoly(alpha), std::nullopt};
  for (const auto& s : j.value("squares", json::array())) c.squares.push_back(parse_polynomial(s.get<std::string>(), alpha));
  if (j.contains("remainder")) c.remainder = parse_polynomial(j.at("remainder").get<std::string>(), alpha);
  if (j.contains("cofactors")) {
    std::vector<Cofactor> cf;
    for (const auto& e : j.at("cofactors"))
      cf.push_back({parse_polynomial(e.value("left", std::string("1")), alpha), e.at("generator").get<std::size_t>(),
                    parse_polynomial(e.value("right", std::string("1")), alpha)});
    c.cofactors = std::move(cf);
  }
  return c;
}

int cmd_verify_sohs(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  if (!I) throw UsageError("--ideal or --ideal-file is required");
  if (o.cert.empty()) throw UsageError("--cert is required");
  const NcPoly f = require_poly(o, I->alphabet());
  const SohsCertificate c = read_certificate(o.cert, I->alphabet());
  const CertificateReport r = check_certificate(f, c, *I);
  json j{{"valid", r.valid}, {"identity_holds", r.identity_holds}, {"remainder_ok", r.remainder_ok},
         {"remainder_check", to_string(r.path)}};
  std::ostringstream text;
  text << "valid: " << (r.valid ? "true" : "false") << "\nidentity holds: " << (r.identity_holds ? "true" : "false")
       << "\nremainder in ideal: " << (r.remainder_ok ? "true" : "false") << " (" << to_string(r.path) << ")\n";
  if (o.probe) {
    const auto [lo, hi] = size_range(o, 4);
    const ProbeReport p = positivity_probe(f, I->domain(), lo, hi, o.trials ? o.trials : 20, o.seed, o.tol);
    j["probe"] = {{"min_eigenvalue", p.min_eigenvalue}, {"size", p.size}, {"trial", p.trial}, {"positive", p.positive}};
    text << "probe: min eigenvalue " << p.min_eigenvalue << " at size " << p.size << " trial " << p.trial << "\n";
  }
  emit(out, o, j, text.str());
  return r.valid ? kSuccess : kNegative;
}

int cmd_gram_export(const Options& o, std::ostream& out) {
  const auto I = load_ideal(o);
  const AlphabetPtr alpha = alphabet_for(o, I);
  const NcPoly f = require_poly(o, alpha);
  const NcPoly q = o.remainder.empty() ? NcPoly(alpha) : parse_polynomial(o.remainder, alpha);
  const std::size_t d = o.degree ? o.degree : ((f - q).degree() + 1) / 2;
  const GramProblem p = gram_constraints(f, d, q);
  if (!o.out.empty()) {
    export_gram(p, o.out);
    emit(out, o, json{{"path", o.out}, {"d", d}, {"basis", p.basis.size()}, {"constraints", p.constraints.size()}},
         "wrote " + o.out + "\n");
  } else {
    out << format_gram(p);
  }
  return kSuccess;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::size_t failed = 0;
  json lines = json::array();
  const auto results = selftest::run_all(o.only, [&](const selftest::CriterionResult& r) {
    failed += !r.passed;
    if (o.json)
      lines.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds},
                       {"detail", r.detail}});
    else
      out << selftest::format_line(r) << std::endl;
  });
  const std::size_t passed = results.size() - failed;
  if (o.json)
    out << json{{"passed", passed}, {"failed", failed}, {"criteria", lines}}.dump(2) << "\n";
  else
    out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kSuccess : kNegative;
}

void add_alphabet_flags(CLI::App* c, Options& o) {
  c->add_option("--ideal", o.ideal, "Built-in ideal: Tprime, Sprime, Uprime, CommInv, T, S, U");
  c->add_option("--ideal-file", o.ideal_file, "JSON ideal description");
  c->add_option("--g", o.g, "Number of letters (default 2)");
  c->add_flag("--plain", o.plain, "Alphabet without adjoints");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Vanishing, membership and positivity checks for noncommutative polynomials", "ncnull"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ncnull 0.1.0");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression at an exact point");
  auto* expand = app.add_subcommand("expand", "Series coefficients about a base point");
  auto* zero = app.add_subcommand("zero-test", "Decide whether an expression is a rational identity");
  auto* member = app.add_subcommand("member", "Ideal membership with counterexample search");
  auto* bound = app.add_subcommand("bound", "Size bounds for a polynomial and ideal");
  auto* sample = app.add_subcommand("sample", "Draw matrix tuples from a domain");
  auto* fals = app.add_subcommand("falsify", "Search sampled points for a nonvanishing value");
  auto* sohs = app.add_subcommand("verify-sohs", "Check a sum-of-Hermitian-squares certificate");
  auto* gram = app.add_subcommand("gram-export", "Write the Gram feasibility problem");
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

  for (auto* c : {eval, expand, zero, member, bound, sample, fals, sohs, gram, self})
    c->add_flag("--json", o.json, "Machine-readable output");
  for (auto* c : {eval, expand, zero, member, bound, sample, fals, sohs, gram}) add_alphabet_flags(c, o);
  for (auto* c : {eval, expand, zero, member, bound, fals, sohs, gram})
    c->add_option("--poly", o.poly, "Polynomial in the expression grammar");
  for (auto* c : {eval, expand, zero, bound, fals}) c->add_option("--expr", o.expr, "Rational expression");
  for (auto* c : {expand, zero, bound})
    c->add_option("--basepoint", o.basepoint, "scalar:v[,v...], inline JSON or JSON file (default scalar:1)");
  eval->add_option("--point", o.point, "scalar:v[,v...], inline JSON or JSON file")->required();
  expand->add_option("--order", o.order, "Largest word length (default 3)");
  for (auto* c : {member, sample, fals, sohs}) {
    c->add_option("--seed", o.seed, "Random seed (default 0)");
    c->add_option("--trials", o.trials, "Trials per size");
  }
  member->add_option("--size", o.size, "Largest witness size (default: the witness bound)");
  member->add_flag("--no-witness", o.no_witness, "Skip the counterexample search");
  sample->add_option("--size", o.size, "Matrix size (default 2)");
  for (auto* c : {sample, fals}) c->add_option("--domain", o.domain, "unitaries, spherical, partitioned, xgn, unrestricted");
  for (auto* c : {fals, sohs}) {
    c->add_option("--size", o.size, "Largest size");
    c->add_option("--sizes", o.sizes, "Size range lo-hi, or a single upper end");
    c->add_option("--tol", o.tol, "Tolerance (default 1e-8)");
  }
  fals->add_option("--mode", o.mode, "nonzero or negative");
  sohs->add_option("--cert", o.cert, "Certificate JSON file or inline JSON");
  sohs->add_flag("--probe", o.probe, "Also run the numeric positivity probe");
  gram->add_option("--remainder", o.remainder, "Ideal part q (default 0)");
  gram->add_option("--degree", o.degree, "Half degree d (default ceil(deg(f - q) / 2))");
  gram->add_option("--out", o.out, "Output file (default stdout)");
  self->add_option("--only", o.only, "Criterion ids to run");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    if (app.get_subcommands().size() == 1) out << "\n" << app.get_subcommands().front()->help();
    return kSuccess;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*expand) return cmd_expand(o, out);
    if (*zero) return cmd_zero_test(o, out);
    if (*member) return cmd_member(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*sample) return cmd_sample(o, out);
    if (*fals) return cmd_falsify(o, out);
    if (*sohs) return cmd_verify_sohs(o, out);
    if (*gram) return cmd_gram_export(o, out);
    if (*self) return cmd_selftest(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << " (subtree " << e.subtree() << ")\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ncnull::cli
