#pragma once

#include <string>

namespace ineq {

/// Shortest %.17g rendering; round-trips doubles bit-exactly.
std::string fmt_g17(double value);

/// Fixed four decimals (banker's rounding via the usual binary-to-decimal
/// conversion); table presentation format.
std::string fmt_fixed4(double value);

}  // namespace ineq
