#include "ncnull/ideals.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "ncnull/errors.hpp"
#include "ncnull/handbuilt.hpp"
#include "ncnull/matrix_io.hpp"

namespace ncnull {

std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::Tprime:
      return "Tprime";
    case IdealKind::Sprime:
      return "Sprime";
    case IdealKind::Uprime:
      return "Uprime";
    case IdealKind::CommInv:
      return "CommInv";
    case IdealKind::T:
      return "T";
    case IdealKind::S:
      return "S";
    case IdealKind::U:
      return "U";
    case IdealKind::custom:
      return "custom";
  }
  return "?";
}

IdealKind ideal_kind_from_string(const std::string& s) {
  static const std::map<std::string, IdealKind> names{
      {"Tprime", IdealKind::Tprime}, {"T'", IdealKind::Tprime}, {"Sprime", IdealKind::Sprime},
      {"S'", IdealKind::Sprime},     {"Uprime", IdealKind::Uprime}, {"U'", IdealKind::Uprime},
      {"CommInv", IdealKind::CommInv}, {"T", IdealKind::T},       {"S", IdealKind::S},
      {"U", IdealKind::U}};
  const auto it = names.find(s);
  if (it == names.end()) throw Error("unknown ideal '" + s + "'");
  return it->second;
}

namespace {

void collect_letters(const RatExpr& e, std::set<Letter>& out) {
  if (e.kind() == RatExpr::Kind::Var) out.insert(e.letter());
  if (e.kind() == RatExpr::Kind::Var || e.kind() == RatExpr::Kind::Const) return;
  for (const auto& c : e.children()) collect_letters(c, out);
}

/// Point with one matrix per slot: the base values, zeros at resolved slots.
std::vector<MatrixExact> unresolved_point(const IdealData& d) {
  const Alphabet& a = *d.alphabet;
  std::vector<MatrixExact> pt(a.slots(), MatrixExact(d.m, d.m));
  for (const auto& [l, v] : d.basepoint) pt[a.slot(l)] = v;
  return pt;
}

}  // namespace

BasePointPtr make_basepoint(const IdealData& d) {
  const Alphabet& a = *d.alphabet;
  for (std::size_t s = 0; s < a.slots(); ++s) {
    const Letter l = a.letter_at(s);
    const bool resolved = d.resolvent.count(l) > 0;
    const bool valued = d.basepoint.count(l) > 0;
    if (resolved && valued) throw SpecError("letter " + a.name(l) + " is both resolved and given a base value");
    if (!resolved && !valued) throw SpecError("no base value for letter " + a.name(l));
  }
  for (const auto& [l, v] : d.basepoint)
    if (v.rows() != d.m || v.cols() != d.m)
      throw SpecError("base value of " + a.name(l) + " is " + v.shape() + ", expected m = " + std::to_string(d.m));
  std::vector<MatrixExact> pt = unresolved_point(d);
  std::vector<MatrixExact> full = pt;
  for (const auto& [l, r] : d.resolvent) {
    try {
      full[a.slot(l)] = eval_expression(r, pt, StarRule::formal);
    } catch (const DomainError& e) {
      throw SpecError("resolvent of " + a.name(l) + " is undefined at the base point: " + e.what());
    }
  }
  return std::make_shared<const BasePoint>(d.alphabet, std::move(full));
}

RRIdeal::RRIdeal(IdealData d) : d_(std::move(d)) {
  if (!d_.alphabet) throw SpecError("ideal without alphabet");
  if (d_.generators.empty()) throw SpecError("ideal without generators");
  const Alphabet& a = *d_.alphabet;
  for (const auto& f : d_.generators) require_same(f.alphabet(), d_.alphabet);
  std::set<Letter> resolved(d_.resolved.begin(), d_.resolved.end());
  if (resolved.size() != d_.resolved.size()) throw SpecError("a letter is resolved twice");
  if (resolved.size() != d_.resolvent.size()) throw SpecError("resolved letters and resolvent keys differ");
  for (const auto& [l, r] : d_.resolvent) {
    if (!resolved.count(l)) throw SpecError("resolvent for unresolved letter " + a.name(l));
    require_same(r.alphabet(), d_.alphabet);
    std::set<Letter> used;
    collect_letters(r, used);
    for (const auto& u : used)
      if (resolved.count(u)) throw SpecError("resolvent of " + a.name(l) + " uses resolved letter " + a.name(u));
  }
  base_ = make_basepoint(d_);

  if (d_.resolvent_reps.empty()) {
    CompileOptions opts;
    opts.minimize = true;
    for (const auto& [l, r] : d_.resolvent) d_.resolvent_reps.emplace(l, minimize(compile(r, base_, opts)));
  }
  if (d_.n == 0)
    for (const auto& [l, rep] : d_.resolvent_reps) d_.n += rep.dimension();
  d_.n = std::max<std::size_t>(d_.n, 1);

  CompileOptions with_reps;
  with_reps.letter_reps = &d_.resolvent_reps;
  for (std::size_t i = 0; i < d_.generators.size(); ++i)
    if (!is_zero(compile(poly_to_expr(d_.generators[i]), base_, with_reps)))
      throw ResolventNotVanishing("generator " + std::to_string(i + 1) + " (" + d_.generators[i].to_string() +
                                  ") does not vanish on the graph of the resolvent");
}

bool RRIdeal::is_resolved(Letter l) const { return d_.resolvent.count(l) > 0; }

// ---------------------------------------------------------------- symbolic inverse

namespace {

using ExprGrid = std::vector<std::vector<RatExpr>>;

ExprGrid sub_grid(const ExprGrid& x, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
  ExprGrid out(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out[i].push_back(x[r0 + i][c0 + j]);
  return out;
}

ExprGrid grid_mul(const ExprGrid& a, const ExprGrid& b) {
  ExprGrid out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      std::vector<RatExpr> terms;
      for (std::size_t k = 0; k < b.size(); ++k) terms.push_back(RatExpr::mul({a[i][k], b[k][j]}));
      out[i].push_back(RatExpr::add(std::move(terms)));
    }
  return out;
}

ExprGrid grid_sub(const ExprGrid& a, const ExprGrid& b) {
  ExprGrid out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i].push_back(RatExpr::sub(a[i][j], b[i][j]));
  return out;
}

ExprGrid grid_add(const ExprGrid& a, const ExprGrid& b) {
  ExprGrid out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i].push_back(RatExpr::add({a[i][j], b[i][j]}));
  return out;
}

ExprGrid grid_neg(const ExprGrid& a) {
  ExprGrid out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& e : a[i]) out[i].push_back(RatExpr::neg(e));
  return out;
}

// [[A, B], [C, D]]^{-1} with S = A - B D^{-1} C:
// [[S^-1, -S^-1 B D^-1], [-D^-1 C S^-1, D^-1 + D^-1 C S^-1 B D^-1]]
ExprGrid grid_inverse(const ExprGrid& x) {
  const std::size_t g = x.size();
  if (g == 1) return {{RatExpr::inv(x[0][0])}};
  const std::size_t k = g / 2;
  const ExprGrid A = sub_grid(x, 0, 0, k, k), B = sub_grid(x, 0, k, k, g - k);
  const ExprGrid C = sub_grid(x, k, 0, g - k, k), D = sub_grid(x, k, k, g - k, g - k);
  const ExprGrid Di = grid_inverse(D);
  const ExprGrid Si = grid_inverse(grid_sub(A, grid_mul(grid_mul(B, Di), C)));
  const ExprGrid top_right = grid_neg(grid_mul(grid_mul(Si, B), Di));
  const ExprGrid DiC = grid_mul(Di, C);
  const ExprGrid bottom_left = grid_neg(grid_mul(DiC, Si));
  const ExprGrid bottom_right = grid_add(Di, grid_mul(grid_mul(grid_mul(DiC, Si), B), Di));
  ExprGrid out(g);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = Si[i];
    out[i].insert(out[i].end(), top_right[i].begin(), top_right[i].end());
  }
  for (std::size_t i = 0; i < g - k; ++i) {
    out[k + i] = bottom_left[i];
    out[k + i].insert(out[k + i].end(), bottom_right[i].begin(), bottom_right[i].end());
  }
  return out;
}

}  // namespace

std::vector<std::vector<RatExpr>> symbolic_inverse(const AlphabetPtr& alpha,
                                                   const std::vector<std::vector<Letter>>& grid) {
  ExprGrid x(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != grid.size()) throw DimensionMismatch("letter grid must be square");
    for (const auto& l : grid[i]) x[i].push_back(RatExpr::var(alpha, l));
  }
  if (x.empty()) throw DimensionMismatch("empty letter grid");
  return grid_inverse(x);
}

std::vector<std::string> grid_names(const std::string& stem, std::size_t g) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= g; ++i)
    for (std::size_t j = 1; j <= g; ++j)
      out.push_back(stem + std::to_string(i) + (g > 9 ? "_" : "") + std::to_string(j));
  return out;
}

std::vector<std::vector<RatExpr>> symbolic_matrix_inverse(std::size_t g) {
  if (g == 0) throw GOutOfRange("matrix inverse needs g >= 1");
  const auto alpha = Alphabet::named(grid_names("X", g), false);
  std::vector<std::vector<Letter>> grid(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) grid[i].push_back(Letter{static_cast<std::uint32_t>(i * g + j), false});
  return symbolic_inverse(alpha, grid);
}

// ---------------------------------------------------------------- built-ins

namespace {

MatrixExact scalar_matrix(long v) { return MatrixExact{{Scalar(v)}}; }

NcPoly poly(const std::string& s, const AlphabetPtr& a) { return parse_polynomial(s, a); }

std::string idx(std::size_t j) { return std::to_string(j); }

IdealData tprime_data(std::size_t g) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= g; ++j) names.push_back("X" + idx(j));
  for (std::size_t j = 1; j <= g; ++j) names.push_back("Y" + idx(j));
  IdealData d;
  d.name = "T'";
  d.kind = IdealKind::Tprime;
  d.g = g;
  d.alphabet = Alphabet::named(names, false);
  for (std::size_t j = 1; j <= g; ++j) {
    d.generators.push_back(poly("1 - X" + idx(j) + " Y" + idx(j), d.alphabet));
    d.generators.push_back(poly("1 - Y" + idx(j) + " X" + idx(j), d.alphabet));
    const Letter x = d.alphabet->letter("X" + idx(j)), y = d.alphabet->letter("Y" + idx(j));
    d.resolved.push_back(y);
    d.resolvent.emplace(y, RatExpr::inv(RatExpr::var(d.alphabet, x)));
    d.basepoint.emplace(x, scalar_matrix(1));
  }
  d.n = 1;
  d.domain = {DomainKind::unrestricted, g};
  const auto base = make_basepoint(d);
  for (std::size_t j = 1; j <= g; ++j)
    d.resolvent_reps.emplace(d.alphabet->letter("Y" + idx(j)),
                             rep_scalar_inverse(base, d.alphabet->letter("X" + idx(j))));
  return d;
}

IdealData t_data(std::size_t g) {
  IdealData d;
  d.name = "T";
  d.kind = IdealKind::T;
  d.g = g;
  d.alphabet = Alphabet::standard(g, true);
  for (std::size_t j = 1; j <= g; ++j) {
    const std::string x = "X" + idx(j);
    d.generators.push_back(poly("1 - " + x + "^* " + x, d.alphabet));
    d.generators.push_back(poly("1 - " + x + " " + x + "^*", d.alphabet));
    const Letter l{static_cast<std::uint32_t>(j - 1), false};
    d.resolved.push_back(l.star());
    d.resolvent.emplace(l.star(), RatExpr::inv(RatExpr::var(d.alphabet, l)));
    d.basepoint.emplace(l, scalar_matrix(1));
  }
  d.n = 1;
  d.domain = {DomainKind::unitaries, g};
  const auto base = make_basepoint(d);
  for (std::size_t j = 0; j < g; ++j) {
    const Letter l{static_cast<std::uint32_t>(j), false};
    d.resolvent_reps.emplace(l.star(), rep_scalar_inverse(base, l));
  }
  return d;
}

IdealData sprime_data(std::size_t g) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= g; ++j) names.push_back("X" + idx(j));
  for (std::size_t j = 1; j <= g; ++j) names.push_back("Y" + idx(j));
  IdealData d;
  d.name = "S'";
  d.kind = IdealKind::Sprime;
  d.g = g;
  d.alphabet = Alphabet::named(names, false);
  std::string gen = "1", tail = "1";
  for (std::size_t j = 1; j <= g; ++j) {
    gen += " - X" + idx(j) + " Y" + idx(j);
    if (j >= 2) tail += " - X" + idx(j) + " Y" + idx(j);
  }
  d.generators.push_back(poly(gen, d.alphabet));
  const Letter y1 = d.alphabet->letter("Y1"), x1 = d.alphabet->letter("X1");
  d.resolved.push_back(y1);
  d.resolvent.emplace(y1, parse_expression("X1^-1 (" + tail + ")", d.alphabet));
  d.basepoint.emplace(x1, scalar_matrix(1));
  std::vector<Letter> xs, ys;
  for (std::size_t j = 2; j <= g; ++j) {
    xs.push_back(d.alphabet->letter("X" + idx(j)));
    ys.push_back(d.alphabet->letter("Y" + idx(j)));
    d.basepoint.emplace(xs.back(), scalar_matrix(0));
    d.basepoint.emplace(ys.back(), scalar_matrix(0));
  }
  d.n = g + 1;
  d.domain = {DomainKind::xgn, g};
  d.resolvent_reps.emplace(y1, rep_sphere_resolvent(make_basepoint(d), x1, xs, ys));
  return d;
}

IdealData s_data(std::size_t g) {
  IdealData d;
  d.name = "S";
  d.kind = IdealKind::S;
  d.g = g;
  d.alphabet = Alphabet::standard(g, true);
  std::string gen = "1", tail = "1";
  for (std::size_t j = 1; j <= g; ++j) {
    gen += " - X" + idx(j) + "^* X" + idx(j);
    if (j >= 2) tail += " - X" + idx(j) + "^* X" + idx(j);
  }
  d.generators.push_back(poly(gen, d.alphabet));
  const Letter x1{0, false};
  d.resolved.push_back(x1.star());
  d.resolvent.emplace(x1.star(), parse_expression("(" + tail + ") X1^-1", d.alphabet));
  d.basepoint.emplace(x1, scalar_matrix(1));
  std::vector<Letter> xs, ys;
  for (std::size_t j = 1; j < g; ++j) {
    const Letter l{static_cast<std::uint32_t>(j), false};
    xs.push_back(l);
    ys.push_back(l.star());
    d.basepoint.emplace(l, scalar_matrix(0));
    d.basepoint.emplace(l.star(), scalar_matrix(0));
  }
  d.n = g + 1;
  d.domain = {DomainKind::spherical, g};
  d.resolvent_reps.emplace(x1.star(), rep_sphere_resolvent(make_basepoint(d), x1, xs, ys, true));
  return d;
}

// Entry (i, k) of X Y - I or Y X - I as text; `ystar` writes Y_ij as X_ji^*.
std::string product_entry(const std::vector<std::string>& xn, const std::vector<std::string>& yn, std::size_t g,
                          std::size_t i, std::size_t k, bool x_first) {
  std::string s = i == k ? "-1" : "0";
  for (std::size_t j = 0; j < g; ++j)
    s += x_first ? " + " + xn[i * g + j] + " " + yn[j * g + k] : " + " + yn[i * g + j] + " " + xn[j * g + k];
  return s;
}

IdealData uprime_data(std::size_t g) {
  const auto xn = grid_names("X", g), yn = grid_names("Y", g);
  std::vector<std::string> names = xn;
  names.insert(names.end(), yn.begin(), yn.end());
  IdealData d;
  d.name = "U'";
  d.kind = IdealKind::Uprime;
  d.g = g;
  d.alphabet = Alphabet::named(names, false);
  for (bool x_first : {true, false})
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < g; ++k)
        d.generators.push_back(poly(product_entry(xn, yn, g, i, k, x_first), d.alphabet));
  std::vector<std::vector<Letter>> grid(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      grid[i].push_back(d.alphabet->letter(xn[i * g + j]));
      d.basepoint.emplace(grid[i][j], scalar_matrix(i == j ? 1 : 0));
    }
  const auto inv = symbolic_inverse(d.alphabet, grid);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const Letter y = d.alphabet->letter(yn[i * g + j]);
      d.resolved.push_back(y);
      d.resolvent.emplace(y, inv[i][j]);
    }
  d.n = g;
  d.domain = {DomainKind::unrestricted, g};
  const auto base = make_basepoint(d);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      d.resolvent_reps.emplace(d.alphabet->letter(yn[i * g + j]), rep_matrix_inverse_entry(base, grid, i, j));
  return d;
}

IdealData u_data(std::size_t g) {
  const auto xn = grid_names("X", g);
  std::vector<std::string> xs_star;
  // (X^*)_{ij} = (X_{ji})^*
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) xs_star.push_back(xn[j * g + i] + "^*");
  IdealData d;
  d.name = "U";
  d.kind = IdealKind::U;
  d.g = g;
  d.alphabet = Alphabet::named(xn, true);
  for (bool x_first : {true, false})
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < g; ++k)
        d.generators.push_back(poly(product_entry(xn, xs_star, g, i, k, x_first), d.alphabet));
  std::vector<std::vector<Letter>> grid(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      grid[i].push_back(Letter{static_cast<std::uint32_t>(i * g + j), false});
      d.basepoint.emplace(grid[i][j], scalar_matrix(i == j ? 1 : 0));
    }
  const auto inv = symbolic_inverse(d.alphabet, grid);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const Letter xs = grid[i][j].star();
      d.resolved.push_back(xs);
      d.resolvent.emplace(xs, inv[j][i]);
    }
  d.n = g;
  d.domain = {DomainKind::partitioned, g};
  const auto base = make_basepoint(d);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      d.resolvent_reps.emplace(grid[i][j].star(), rep_matrix_inverse_entry(base, grid, j, i));
  return d;
}

IdealData comminv_data() {
  IdealData d;
  d.name = "CommInv";
  d.kind = IdealKind::CommInv;
  d.g = 2;
  d.alphabet = Alphabet::standard(3, false);
  d.generators.push_back(poly("1 - X3 X1 X2 + X3 X2 X1", d.alphabet));
  d.generators.push_back(poly("1 - X1 X2 X3 + X2 X1 X3", d.alphabet));
  const Letter x1{0, false}, x2{1, false}, x3{2, false};
  d.resolved.push_back(x3);
  d.resolvent.emplace(x3, parse_expression("(X1 X2 - X2 X1)^-1", d.alphabet));
  d.m = 2;
  d.basepoint.emplace(x1, MatrixExact::unit(2, 0, 1));
  d.basepoint.emplace(x2, MatrixExact::unit(2, 1, 0));
  d.n = 3;
  d.domain = {DomainKind::unrestricted, 2};
  d.resolvent_reps.emplace(x3, rep_commutator_inverse(make_basepoint(d), x1, x2));
  return d;
}

}  // namespace

RRIdeal builtin_ideal(IdealKind kind, std::size_t g) {
  if (g == 0) throw GOutOfRange("g must be at least 1");
  switch (kind) {
    case IdealKind::Tprime:
      return RRIdeal(tprime_data(g));
    case IdealKind::Sprime:
      return RRIdeal(sprime_data(g));
    case IdealKind::Uprime:
      return RRIdeal(uprime_data(g));
    case IdealKind::CommInv:
      if (g != 2) throw GOutOfRange("CommInv is defined for g = 2");
      return RRIdeal(comminv_data());
    case IdealKind::T:
      return RRIdeal(t_data(g));
    case IdealKind::S:
      if (g < 2) throw GOutOfRange("S needs g > 1");
      return RRIdeal(s_data(g));
    case IdealKind::U:
      return RRIdeal(u_data(g));
    case IdealKind::custom:
      break;
  }
  throw Error("not a built-in ideal");
}

// ---------------------------------------------------------------- custom

RRIdeal custom_ideal(const nlohmann::json& spec) {
  try {
    IdealData d;
    d.name = spec.value("name", std::string("custom"));
    d.kind = IdealKind::custom;
    const bool star = spec.value("star", false);
    if (spec.contains("letters")) {
      d.alphabet = Alphabet::named(spec.at("letters").get<std::vector<std::string>>(), star);
      d.g = d.alphabet->size();
    } else {
      d.g = spec.at("g").get<std::size_t>();
      if (d.g == 0) throw SpecError("g must be at least 1");
      d.alphabet = Alphabet::standard(d.g, star);
    }
    for (const auto& s : spec.at("generators")) d.generators.push_back(parse_polynomial(s.get<std::string>(), d.alphabet));
    for (const auto& s : spec.at("resolved")) d.resolved.push_back(d.alphabet->letter(s.get<std::string>()));
    for (const auto& [name, text] : spec.at("resolvent").items())
      d.resolvent.emplace(d.alphabet->letter(name), parse_expression(text.get<std::string>(), d.alphabet));
    const auto& bp = spec.at("basepoint");
    d.m = bp.value("m", std::size_t{1});
    if (d.m == 0) throw SpecError("basepoint m must be positive");
    for (const auto& [name, mat] : bp.at("matrices").items()) {
      const Letter l = d.alphabet->letter(name);
      if (std::find(d.resolved.begin(), d.resolved.end(), l) != d.resolved.end())
        throw SpecError("letter " + name + " is both resolved and free");
      d.basepoint.emplace(l, exact_from_json(mat));
    }
    if (spec.contains("free"))
      for (const auto& s : spec.at("free")) {
        const Letter l = d.alphabet->letter(s.get<std::string>());
        if (std::find(d.resolved.begin(), d.resolved.end(), l) != d.resolved.end())
          throw SpecError("letter " + s.get<std::string>() + " is both resolved and free");
      }
    d.n = spec.value("n", std::size_t{0});
    d.domain = {DomainKind::unrestricted, d.g};
    return RRIdeal(std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("ideal spec: ") + e.what());
  } catch (const SyntaxError& e) {
    throw SpecError(std::string("ideal spec: ") + e.what());
  } catch (const UnknownLetter& e) {
    throw SpecError(std::string("ideal spec: ") + e.what());
  } catch (const AlphabetMismatch& e) {
    throw SpecError(std::string("ideal spec: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw SpecError(std::string("ideal spec: ") + e.what());
  }
}

RRIdeal custom_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open ideal spec " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("ideal spec " + path + ": " + e.what());
  }
  return custom_ideal(j);
}

// ---------------------------------------------------------------- membership

RatExpr substitute_resolvent(const NcPoly& f, const RRIdeal& I) {
  require_same(f.alphabet(), I.alphabet());
  return substitute_letters(poly_to_expr(f), I.resolvent());
}

MembershipVerdict is_member(const NcPoly& f, const RRIdeal& I, const MembershipOptions& opts) {
  require_same(f.alphabet(), I.alphabet());
  MembershipVerdict v;
  if (f.is_zero()) {
    v.member = true;
    return v;
  }
  CompileOptions copts;
  copts.letter_reps = &I.resolvent_reps();
  v.member = is_zero(compile(poly_to_expr(f), I.base(), copts));
  if (!v.member && opts.find_witness) v.witness = find_witness(f, I, opts);
  return v;
}

namespace {

MatrixExact random_integer_matrix(std::size_t n, CounterRng& rng, bool complex) {
  MatrixExact a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = Scalar(static_cast<long>(rng.below(7)) - 3, complex ? static_cast<long>(rng.below(3)) - 1 : 0);
  return a;
}

/// Point on the graph of the resolvent: random free letters, resolved
/// letters evaluated. One matrix per slot.
template <class M, class Draw>
std::optional<std::vector<M>> graph_point(const RRIdeal& I, std::size_t size, Draw&& draw) {
  const Alphabet& a = *I.alphabet();
  std::vector<M> pt(a.slots());
  for (std::size_t s = 0; s < a.slots(); ++s) pt[s] = I.is_resolved(a.letter_at(s)) ? M(size, size) : draw();
  std::vector<M> full = pt;
  try {
    for (const auto& [l, r] : I.resolvent()) full[a.slot(l)] = eval_expression(r, pt, StarRule::formal);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return full;
}

bool unitary_type(const RRIdeal& I) {
  const auto k = I.domain().kind;
  return k == DomainKind::unitaries || k == DomainKind::spherical || k == DomainKind::partitioned;
}

constexpr std::uint64_t kExactStream = 0x5eed0000ULL;

}  // namespace

std::optional<Witness> find_witness(const NcPoly& f, const RRIdeal& I, const MembershipOptions& opts) {
  std::size_t max_size = opts.max_size;
  if (max_size == 0) {
    try {
      max_size = static_cast<std::size_t>(std::min<Size>(witness_size(f, I), 64));
    } catch (const Overflow&) {
      max_size = 64;
    }
  }
  const Alphabet& a = *I.alphabet();
  const std::size_t exact_sizes = std::min<std::size_t>(max_size, 6);
  const std::size_t exact_trials = std::min<std::size_t>(opts.trials, 25);
  for (std::size_t size = 1; size <= exact_sizes; ++size)
    for (std::size_t trial = 0; trial < exact_trials; ++trial) {
      CounterRng rng(opts.seed, trial_stream(size, trial) ^ kExactStream);
      std::vector<MatrixExact> pt;
      StarRule rule = StarRule::formal;
      if (unitary_type(I)) {
        auto p = sample_exact_point(I.domain(), a, size, rng);
        pt = std::move(p.matrices);
        rule = p.rule;
      } else {
        auto p = graph_point<MatrixExact>(I, size, [&] { return random_integer_matrix(size, rng, a.has_star()); });
        if (!p) continue;
        pt = std::move(*p);
      }
      MatrixExact value = eval_poly(f, pt, rule);
      if (!value.is_zero()) {
        Witness w;
        w.size = size;
        w.exact = true;
        w.exact_point = std::move(pt);
        w.exact_value = std::move(value);
        w.rule = rule;
        w.seed = opts.seed;
        w.trial = trial;
        return w;
      }
    }
  for (std::size_t size = 1; size <= max_size; ++size)
    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
      CounterRng rng(opts.seed, trial_stream(size, trial));
      std::vector<MatrixFloat> pt;
      StarRule rule = StarRule::formal;
      if (I.domain().kind != DomainKind::unrestricted) {
        try {
          auto p = sample_point(I.domain(), a, size, rng);
          pt = std::move(p.matrices);
          rule = p.rule;
        } catch (const ConditioningFailure&) {
          continue;
        }
      } else {
        auto p = graph_point<MatrixFloat>(I, size, [&] { return gaussian_matrix(size, size, rng); });
        if (!p) continue;
        pt = std::move(*p);
      }
      MatrixFloat value = eval_poly(f, pt, rule);
      if (frobenius_norm(value) > 1e-6) {
        Witness w;
        w.size = size;
        w.point = std::move(pt);
        w.value = std::move(value);
        w.rule = rule;
        w.seed = opts.seed;
        w.trial = trial;
        return w;
      }
    }
  return std::nullopt;
}

NcPoly random_ideal_element(const RRIdeal& I, std::uint64_t seed, const ElementComplexity& c) {
  CounterRng rng(seed);
  const auto& alpha = I.alphabet();
  auto word = [&] {
    const std::size_t len = c.max_word_length == 0 ? 0 : rng.below(c.max_word_length + 1);
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) ls.push_back(alpha->letter_at(rng.below(alpha->slots())));
    return NcPoly::monomial(alpha, Word(ls));
  };
  NcPoly out(alpha);
  for (std::size_t t = 0; t < std::max<std::size_t>(c.terms, 1); ++t) {
    const NcPoly& f = I.generators()[rng.below(I.generators().size())];
    Scalar coeff(1);
    if (!c.unit_coefficients) {
      long num = static_cast<long>(rng.below(6)) - 3;
      if (num >= 0) ++num;
      coeff = Scalar(Rational(num, static_cast<long>(1 + rng.below(3))));
      if (alpha->has_star() && rng.below(2) == 1) coeff += Scalar(0, static_cast<long>(rng.below(5)) - 2);
    }
    out += coeff * (word() * f * word());
  }
  return out;
}

Size witness_size(const NcPoly& f, const RRIdeal& I) {
  const auto [u, v] = degree_and_terms(f);
  switch (I.kind()) {
    case IdealKind::T:
      return star_bound(StarKind::unitaries, I.g(), u, v);
    case IdealKind::S:
      return star_bound(StarKind::spherical, I.g(), u, v);
    case IdealKind::U:
      return I.g() == 1 ? star_bound(StarKind::unitaries, 1, u, v) : star_bound(StarKind::partitioned, I.g(), u, v);
    default:
      return nss_bound(I.m(), I.n(), u, v);
  }
}

}  // namespace ncnull
