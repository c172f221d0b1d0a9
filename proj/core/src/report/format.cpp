#include "hydrorad/report/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hydrorad::report {

namespace {

// Decimal exponent of v after rounding to `sig` significant figures.
int rounded_exponent(double v, int sig) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", sig - 1, v);
  return std::atoi(std::strchr(buf, 'e') + 1);
}

}  // namespace

std::string format_table_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  std::string out = v < 0 ? "-" : "";
  v = std::fabs(v);

  char buf[64];
  const int e3 = rounded_exponent(v, 3);
  if (e3 >= 6) {
    std::snprintf(buf, sizeof buf, "%.3g", v);
  } else if (e3 >= 2) {
    std::snprintf(buf, sizeof buf, "%.0f.", v);
  } else if (e3 >= -1) {
    std::snprintf(buf, sizeof buf, "%.*f", 2 - e3, v);
  } else {
    const int e2 = rounded_exponent(v, 2);
    if (e2 >= -2) {
      std::snprintf(buf, sizeof buf, "%.*f", 1 - e2, v);
    } else {
      char mant[32];
      std::snprintf(mant, sizeof mant, "%.1e", v);
      *std::strchr(mant, 'e') = '\0';
      std::snprintf(buf, sizeof buf, "%s(%d)", mant, e2);
    }
  }
  return out + buf;
}

std::string format_compact_value(double v) {
  if (!std::isfinite(v) || v == 0.0 || std::fabs(v) >= 1.0) return format_table_value(v);
  const int e2 = rounded_exponent(std::fabs(v), 2);
  char mant[32], buf[64];
  std::snprintf(mant, sizeof mant, "%.1e", v);
  *std::strchr(mant, 'e') = '\0';
  std::snprintf(buf, sizeof buf, "%s(%d)", mant, e2);
  return buf;
}

std::string format_sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double round_sig10(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return std::strtod(buf, nullptr);
}

}  // namespace hydrorad::report
