#pragma once

// Lattice-path (ballot) numbers and Catalan numbers.
//
// f(i, j) counts monotone lattice paths from (0,0) to (i,j) that never cross
// the diagonal x = y:
//
//   f(i, 0) = 1                        0 <= i
//   f(i, j) = f(i-1, j) + f(i, j-1)    1 <= j < i
//   f(i, i) = f(i, i-1)                1 <= i
//   f(i, j) = 0                        i < j
//
// f(n, n) = f(n, n-1) = C_n, and the row sums give the next Catalan number.

#include <cstddef>
#include <vector>

#include "dyck/count.hpp"

namespace dyck {

class BallotTable {
 public:
  /// Throws kOverflow once an entry exceeds 64 bits (n_max >= 37).
  explicit BallotTable(std::size_t n_max);

  std::size_t n_max() const noexcept { return n_max_; }

  /// f(i, j); 0 above the diagonal. Throws kOutOfRange if i > n_max.
  Count at(std::size_t i, std::size_t j) const;

 private:
  static std::size_t offset(std::size_t i) noexcept { return i * (i + 1) / 2; }

  std::size_t n_max_;
  std::vector<Count> entries_;  // row i at [i(i+1)/2, i(i+1)/2 + i]
};

BallotTable build_ballot_table(std::size_t n_max);

inline Count ballot(const BallotTable& table, std::size_t i, std::size_t j) { return table.at(i, j); }

/// C_n read off the ballot table, f(n, n).
Count catalan(std::size_t n);

/// binom(2n, n) / (n + 1), evaluated with 128-bit intermediates.
Count catalan_closed_form(std::size_t n);

/// C_{n+1} = 1 + sum_{k>=0} (-1)^k binom(n-k, k+1) C_{n-k}, where n + 1 is
/// the argument. Requires n_plus_1 >= 1.
Count catalan_alternating(std::size_t n_plus_1);

/// f(n, n-k) = sum_i (-1)^i binom(k-i, i) C_{n-i}. Requires k <= n.
Count ballot_via_catalan(std::size_t n, std::size_t k);

/// binom(a, b), zero when b > a.
Count binomial(std::size_t a, std::size_t b);

}  // namespace dyck
