#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyck {

enum class Errc {
  kInvalidSymbol,   // a character other than '0' / '1'
  kNotDyck,         // binary word violating the prefix property
  kEmptyWord,       // semilength 0 where n >= 1 is required
  kLengthMismatch,  // position vector of the wrong length
  kNotIncreasing,   // position vector not strictly increasing
  kBoundViolation,  // b_i outside [2i, n+i]
  kOverflow,        // count does not fit in 64 bits
  kOutOfRange,      // table row or argument outside the supported domain
  kTableTooSmall,   // ballot table built for a smaller semilength
  kRankOutOfRange,  // rank outside [1, C_n]
  kEmptyTree,       // encoding an empty binary tree
  kCorruptWord,     // tree decoder saw an impossible symbol pair
  kParseError,      // malformed text input
  kInternal,        // broken internal invariant
};

const char* to_string(Errc code) noexcept;

/// Every failure in the library is reported as a dyck::Error.
///
/// `where()` carries a location when one is meaningful: the 1-based index
/// i of the offending b_i for position vectors, or the byte offset of the
/// first violation for text parsers. It is 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t where = 0)
      : std::runtime_error(what), code_(code), where_(where) {}

  Errc code() const noexcept { return code_; }
  std::size_t where() const noexcept { return where_; }

 private:
  Errc code_;
  std::size_t where_;
};

}  // namespace dyck
