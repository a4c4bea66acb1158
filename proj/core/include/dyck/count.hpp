#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "dyck/error.hpp"

namespace dyck {

/// Unsigned 64-bit count whose arithmetic throws Errc::kOverflow instead of
/// wrapping. C_36 is the largest Catalan number that fits.
class Count {
 public:
  constexpr Count() noexcept = default;
  constexpr Count(std::uint64_t value) noexcept : value_(value) {}  // NOLINT(implicit)

  constexpr std::uint64_t value() const noexcept { return value_; }

  friend Count operator+(Count a, Count b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw Error(Errc::kOverflow, "count addition overflows 64 bits");
    return r;
  }
  friend Count operator-(Count a, Count b) {
    if (b.value_ > a.value_) throw Error(Errc::kOverflow, "count subtraction underflows");
    return a.value_ - b.value_;
  }
  friend Count operator*(Count a, Count b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw Error(Errc::kOverflow, "count multiplication overflows 64 bits");
    return r;
  }
  Count& operator+=(Count o) { return *this = *this + o; }
  Count& operator-=(Count o) { return *this = *this - o; }

  friend constexpr auto operator<=>(Count, Count) = default;

  friend std::ostream& operator<<(std::ostream& os, Count c) { return os << c.value_; }

 private:
  std::uint64_t value_ = 0;
};

}  // namespace dyck
