#include "ncnull/matrix_io.hpp"

namespace ncnull {

namespace {

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw Error("matrix entry parts must be rational strings or integers");
}

Scalar scalar_from_json(const nlohmann::json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw Error("matrix entry must be [re, im]");
    return Scalar(rational_from_json(v[0]), rational_from_json(v[1]));
  }
  return Scalar(rational_from_json(v));
}

std::pair<std::size_t, std::size_t> shape_of(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw Error("matrix JSON needs rows, cols and entries");
  const auto r = j.at("rows").get<long long>(), c = j.at("cols").get<long long>();
  if (r <= 0 || c <= 0) throw Error("matrix dimensions must be positive");
  if (!j.at("entries").is_array() || j.at("entries").size() != static_cast<std::size_t>(r * c))
    throw DimensionMismatch("entries length does not match rows*cols");
  return {static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
}

}  // namespace

nlohmann::json to_json(const MatrixExact& a) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : a.entries()) e.push_back({x.re().get_str(), x.im().get_str()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", e}};
}

nlohmann::json to_json(const MatrixFloat& a) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : a.entries()) e.push_back({x.real(), x.imag()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", e}};
}

MatrixExact exact_from_json(const nlohmann::json& j) {
  const auto [r, c] = shape_of(j);
  std::vector<Scalar> v;
  v.reserve(r * c);
  for (const auto& x : j.at("entries")) v.push_back(scalar_from_json(x));
  return MatrixExact(r, c, std::move(v));
}

MatrixFloat float_from_json(const nlohmann::json& j) {
  const auto [r, c] = shape_of(j);
  std::vector<Complex> v;
  v.reserve(r * c);
  for (const auto& x : j.at("entries")) {
    if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
      v.emplace_back(x[0].get<double>(), x[1].get<double>());
    } else if (x.is_number()) {
      v.emplace_back(x.get<double>(), 0.0);
    } else {
      v.push_back(scalar_from_json(x).to_complex());
    }
  }
  return MatrixFloat(r, c, std::move(v));
}

}  // namespace ncnull
