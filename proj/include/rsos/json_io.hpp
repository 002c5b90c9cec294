#pragma once

#include "rsos/qseries.hpp"

#include <json.hpp>

namespace rsos {

// Exact series: [[quarters, "coeff"], ...] sorted by exponent.
// Truncated series: {"terms": [...], "truncation": quarters}.
nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

}  // namespace rsos
