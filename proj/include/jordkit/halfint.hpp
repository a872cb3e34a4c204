#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jordkit {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : doubled_(2 * integer) {}  // NOLINT: implicit by intent

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }

  /// Accepts "3", "-2", "3/2", "-1/2". Throws std::invalid_argument otherwise.
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_doubled(k * a.doubled_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

  std::string to_string() const;

 private:
  std::int64_t doubled_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace jordkit
