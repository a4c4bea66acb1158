#include "dyck/word.hpp"

#include <charconv>
#include <sstream>

#include "dyck/error.hpp"

namespace dyck {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidSymbol: return "InvalidSymbol";
    case Errc::kNotDyck: return "NotDyck";
    case Errc::kEmptyWord: return "EmptyWord";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kNotIncreasing: return "NotIncreasing";
    case Errc::kBoundViolation: return "BoundViolation";
    case Errc::kOverflow: return "Overflow";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kTableTooSmall: return "TableTooSmall";
    case Errc::kRankOutOfRange: return "RankOutOfRange";
    case Errc::kEmptyTree: return "EmptyTree";
    case Errc::kCorruptWord: return "CorruptWord";
    case Errc::kParseError: return "ParseError";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

std::ptrdiff_t valuation(std::string_view bits) noexcept {
  std::ptrdiff_t h = 0;
  for (char c : bits) h += (c == '0') ? 1 : -1;
  return h;
}

bool is_dyck(std::string_view bits) noexcept {
  if (bits.size() % 2 != 0) return false;
  std::ptrdiff_t h = 0;
  for (char c : bits) {
    if (c == '0') {
      ++h;
    } else if (c == '1') {
      if (--h < 0) return false;
    } else {
      return false;
    }
  }
  return h == 0;
}

DyckWord::DyckWord(std::string bits) : bits_(std::move(bits)) {
  if (auto bad = bits_.find_first_not_of("01"); bad != std::string::npos) {
    throw Error(Errc::kInvalidSymbol, "word contains a symbol other than 0/1 at offset " + std::to_string(bad), bad);
  }
  if (bits_.empty()) throw Error(Errc::kEmptyWord, "Dyck word must have semilength >= 1");
  if (!is_dyck(bits_)) throw Error(Errc::kNotDyck, "'" + bits_ + "' is not a Dyck word");
}

namespace {

template <typename Int>
std::vector<std::uint32_t> check_positions(std::span<const Int> raw, std::size_t n) {
  if (raw.size() != n) {
    throw Error(Errc::kLengthMismatch,
                "expected " + std::to_string(n) + " positions, got " + std::to_string(raw.size()));
  }
  if (n == 0) throw Error(Errc::kEmptyWord, "position vector must have semilength >= 1");
  std::vector<std::uint32_t> out;
  out.reserve(n);
  const auto sn = static_cast<std::int64_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::int64_t>(k + 1);
    const auto b = static_cast<std::int64_t>(raw[k]);
    if (k > 0 && b <= static_cast<std::int64_t>(raw[k - 1])) {
      throw Error(Errc::kNotIncreasing, "positions not strictly increasing at i=" + std::to_string(i), k + 1);
    }
    if (b < 2 * i || b > sn + i) {
      throw Error(Errc::kBoundViolation,
                  "b_" + std::to_string(i) + "=" + std::to_string(b) + " outside [" + std::to_string(2 * i) + ", " +
                      std::to_string(sn + i) + "]",
                  k + 1);
    }
    out.push_back(static_cast<std::uint32_t>(b));
  }
  return out;
}

}  // namespace

PositionVector::PositionVector(std::vector<std::uint32_t> positions)
    : b_(check_positions(std::span<const std::uint32_t>(positions), positions.size())) {}

PositionVector validate_positions(std::span<const std::int64_t> raw, std::size_t n) {
  return PositionVector(check_positions(raw, n));
}

PositionVector positions_of_ones(const DyckWord& word) {
  std::vector<std::uint32_t> b;
  b.reserve(word.semilength());
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] == '1') b.push_back(static_cast<std::uint32_t>(k + 1));
  }
  return PositionVector(std::move(b));
}

DyckWord word_from_positions(const PositionVector& positions) {
  std::string bits(2 * positions.semilength(), '0');
  for (auto b : positions.positions()) bits[b - 1] = '1';
  return DyckWord(std::move(bits));
}

std::string to_string(const PositionVector& positions) {
  std::string out;
  for (auto b : positions.positions()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(b);
  }
  return out;
}

PositionVector parse_positions(std::string_view text, std::size_t n) {
  std::vector<std::int64_t> raw;
  std::size_t k = 0;
  while (k < text.size()) {
    if (text[k] == ' ' || text[k] == '\t' || text[k] == ',') {
      ++k;
      continue;
    }
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + k, text.data() + text.size(), value);
    const auto stop = static_cast<std::size_t>(end - text.data());
    if (ec != std::errc() || (stop < text.size() && text[stop] != ' ' && text[stop] != '\t' && text[stop] != ',')) {
      throw Error(Errc::kParseError, "invalid position at offset " + std::to_string(k), k);
    }
    raw.push_back(value);
    k = stop;
  }
  return validate_positions(raw, n);
}

}  // namespace dyck
