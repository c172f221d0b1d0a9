#include "hydrorad/report/spectroscopic.hpp"

#include <charconv>

namespace hydrorad::report {

namespace {

constexpr std::string_view kLetters = "spdfghiklmnoqrtuvwxyz";
static_assert(kLetters.size() == kMaxLabelledL + 1);

}  // namespace

char orbital_letter(int l) {
  if (l < 0 || l > kMaxLabelledL) throw ParseError("no spectroscopic letter for l = " + std::to_string(l));
  return kLetters[static_cast<std::size_t>(l)];
}

int orbital_from_letter(char letter) {
  const auto pos = kLetters.find(letter);
  if (pos == std::string_view::npos) {
    throw ParseError(std::string("unknown orbital letter '") + letter + "'");
  }
  return static_cast<int>(pos);
}

SpectroscopicLabel parse_label(std::string_view text) {
  if (text.size() < 2) throw ParseError("malformed level label '" + std::string(text) + "'");
  const std::string_view digits = text.substr(0, text.size() - 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.front() == '+' || n < 1) {
    throw ParseError("malformed principal number in '" + std::string(text) + "'");
  }
  return {n, orbital_from_letter(text.back())};
}

std::string format_label(int n, int l) { return std::to_string(n) + orbital_letter(l); }

}  // namespace hydrorad::report
