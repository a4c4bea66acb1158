#pragma once

// Dyck words and their position-of-ones representation.
//
// A Dyck word of semilength n is a string of 2n symbols over {'0','1'} in
// which every prefix has at least as many 0s as 1s and the whole word has
// equally many of each. Symbols are indexed 1..2n in documentation and
// stored 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/error.hpp"

namespace dyck {

/// Running height of `bits`: +1 for every '0', -1 for every '1'.
/// Precondition: `bits` holds only '0' and '1'.
std::ptrdiff_t valuation(std::string_view bits) noexcept;

/// True iff `bits` is a Dyck word. The empty string is balanced but has
/// semilength 0, which DyckWord rejects; is_dyck("") returns true.
bool is_dyck(std::string_view bits) noexcept;

class DyckWord {
 public:
  /// Throws Error with kInvalidSymbol, kEmptyWord or kNotDyck.
  explicit DyckWord(std::string bits);

  static DyckWord parse(std::string_view bits) { return DyckWord(std::string(bits)); }

  std::size_t semilength() const noexcept { return bits_.size() / 2; }
  std::size_t size() const noexcept { return bits_.size(); }
  const std::string& str() const noexcept { return bits_; }
  char operator[](std::size_t i) const noexcept { return bits_[i]; }

  // Lexicographic with '0' < '1'.
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;
  friend bool operator==(const DyckWord&, const DyckWord&) = default;

 private:
  std::string bits_;
};

/// Sorted 1-based positions b_1 < ... < b_n of the 1s in a Dyck word of
/// semilength n. Always satisfies 2i <= b_i <= n+i, hence b_n = 2n.
class PositionVector {
 public:
  /// Throws Error with kEmptyWord, kNotIncreasing or kBoundViolation.
  explicit PositionVector(std::vector<std::uint32_t> positions);

  std::size_t semilength() const noexcept { return b_.size(); }
  std::span<const std::uint32_t> positions() const noexcept { return b_; }

  /// b_i for 1 <= i <= n.
  std::uint32_t b(std::size_t i) const noexcept { return b_[i - 1]; }

  friend auto operator<=>(const PositionVector&, const PositionVector&) = default;
  friend bool operator==(const PositionVector&, const PositionVector&) = default;

 private:
  std::vector<std::uint32_t> b_;
};

/// Checks `raw` against semilength n. Throws kLengthMismatch if
/// |raw| != n, otherwise kNotIncreasing / kBoundViolation with
/// Error::where() set to the first offending 1-based index.
PositionVector validate_positions(std::span<const std::int64_t> raw, std::size_t n);

PositionVector positions_of_ones(const DyckWord& word);
DyckWord word_from_positions(const PositionVector& positions);

/// "2 4 7 8"
std::string to_string(const PositionVector& positions);

/// Parses whitespace-separated decimals and validates them against n.
/// Non-numeric tokens raise kParseError with the byte offset.
PositionVector parse_positions(std::string_view text, std::size_t n);

}  // namespace dyck
