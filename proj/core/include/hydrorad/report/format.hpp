#pragma once

#include <string>

namespace hydrorad::report {

/// Human table style: "594." at and above 100, three significant figures
/// down to 0.1, two down to 0.01, and x.y(-i) below that.
std::string format_table_value(double v);

/// x.y(-i) for any |v| < 1, format_table_value otherwise.
std::string format_compact_value(double v);

/// Machine output: 10 significant digits, %g style.
std::string format_sig10(double v);

/// v rounded to 10 significant digits (for JSON numbers).
double round_sig10(double v);

}  // namespace hydrorad::report
