#pragma once

#include <string>

#include "cbw/analysis.hpp"

namespace cbw {

/// Shortest %.17g rendering; round-trips doubles exactly.
std::string format_double(double value);

/// CSV with header "phi,value", 17 significant digits, LF line endings.
std::string emit_curve_csv(const Curve& curve);

/// JSON object {"phis": [...], "values": [...]}.
std::string emit_curve_json(const Curve& curve);

/// JSON object {"phis": [...], "psis": [...], "values_row_major": [...]}.
std::string emit_map_json(const Map2D& map);

/// CSV with header "phi,psi,value", rows in row-major (psi-outer) order.
std::string emit_map_csv(const Map2D& map);

} // namespace cbw
