#pragma once

#include <json.hpp>

#include "ncnull/matrix.hpp"

namespace ncnull {

/// {"rows":r,"cols":c,"entries":[["re","im"],...]}, rationals as "p/q" strings.
nlohmann::json to_json(const MatrixExact& a);
/// Float form: entries are [re, im] number pairs.
nlohmann::json to_json(const MatrixFloat& a);

/// Accepts string or integer parts. A bare string/number entry is read as real.
MatrixExact exact_from_json(const nlohmann::json& j);
MatrixFloat float_from_json(const nlohmann::json& j);

}  // namespace ncnull
