#pragma once

#include <json.hpp>

#include "overpart/qseries.hpp"

namespace overpart {

/// {"min_exp": int, "order": int, "coeffs": [{"q": int, "terms": [{"z": int, "c": "decimal"}]}]}
/// Only nonzero coefficients are listed.
nlohmann::json series_to_json(const QSeries& s);

/// Inverse of series_to_json; throws ParseError on malformed input.
QSeries series_from_json(const nlohmann::json& j);

}  // namespace overpart
