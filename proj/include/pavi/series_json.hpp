#pragma once

#include <json.hpp>

#include "pavi/laurent_series.hpp"

namespace pavi {

/// {"<p power>": "<coefficient>"}; integers are written as decimal strings.
nlohmann::json to_json(const Polynomial& poly);

/// [{"power": n, "coefficient": ...}, ...] over the known, nonzero terms.
nlohmann::json to_json(const PolySeries& series);
nlohmann::json to_json(const RationalSeries& series);

}  // namespace pavi
