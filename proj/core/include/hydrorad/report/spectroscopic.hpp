#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hydrorad::report {

/// Malformed user input (labels, option values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orbital letter sequence s p d f g h i k l m n o q r t u v w x y z
/// (j is skipped, as are letters already used for lower l).
inline constexpr int kMaxLabelledL = 20;

char orbital_letter(int l);
int orbital_from_letter(char letter);

struct SpectroscopicLabel {
  int n = 0;
  int l = 0;
  friend bool operator==(const SpectroscopicLabel&, const SpectroscopicLabel&) = default;
};

/// "3d" -> {3, 2}. Throws ParseError on anything else; l >= n is left to the
/// caller (it parses, but is not a hydrogenic level).
SpectroscopicLabel parse_label(std::string_view text);
std::string format_label(int n, int l);

}  // namespace hydrorad::report
