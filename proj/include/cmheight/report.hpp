#pragma once

// Text and JSON reports.

#include <json.hpp>

#include <string>

#include "cmheight/bounds.hpp"
#include "cmheight/heights.hpp"

namespace cmheight {

/// Decimal digits printed for a context: about the precision in bits times
/// log10(2).
int output_digits(const PrecisionContext& ctx);

/// "-2^40 * 3^-91 * 643^5": trial division up to 10^6, then perfect powers of
/// what is left; a composite remainder is printed as "[c]".
std::string factor_string(const Rational& x);

nlohmann::ordered_json to_json(const HeightBreakdown& h, const PrecisionContext& ctx);
nlohmann::ordered_json to_json(const Comparison& c, const PrecisionContext& ctx);
nlohmann::ordered_json to_json(const BoundsReport& r);
nlohmann::ordered_json to_json(const IgusaInvariants& inv, const FiniteHeightPart& fin, const PrecisionContext& ctx);

/// Flattens a JSON report into indented `key: value` lines.
std::string to_text(const nlohmann::ordered_json& report);

}  // namespace cmheight
