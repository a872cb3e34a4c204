#include "jordkit/halfint.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace jordkit {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text, text));
  if (text.substr(slash + 1) != "2")
    throw std::invalid_argument("half-integer denominator must be 2: '" + std::string(text) + "'");
  std::int64_t num = parse_int(text.substr(0, slash), text);
  if (num % 2 == 0)
    throw std::invalid_argument("non-reduced half-integer: '" + std::string(text) + "'");
  return from_doubled(num);
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

}  // namespace jordkit
