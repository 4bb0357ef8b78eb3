#pragma once

// JSON forms of series and dimension tables. Coefficients are exact strings,
// either a decimal integer or "p/q".

#include <nlohmann/json.hpp>

#include "gradalg/homology.hpp"
#include "gradalg/lie.hpp"
#include "gradalg/series.hpp"

namespace gradalg {

/// {"truncation": N, "coeffs": ["c0", ..., "cN"]}
nlohmann::json to_json(const TruncSeries& s);
/// {"truncation_y": J, "rows": [{"j": 0, "coeffs_x": ["1"]}, ...]}; row j
/// lists the x-coefficients of y^j up to the last nonzero one.
nlohmann::json to_json(const TruncSeries2& s);
/// {"even": series, "odd": series}
nlohmann::json to_json(const SignedSeries& s);
/// Decimal strings for degrees 1, 2, ...
nlohmann::json to_json(const DimSequence& d);
nlohmann::json to_json(const LieDims& d);

/// Parsers for the forms above; malformed documents throw SyntaxError.
TruncSeries series_from_json(const nlohmann::json& j);
TruncSeries2 series2_from_json(const nlohmann::json& j);
SignedSeries signed_series_from_json(const nlohmann::json& j);

}  // namespace gradalg
