#pragma once

// Ranking and unranking of Dyck words in reverse lexicographic order.
//
// Rank 1 is (01)^n, rank C_n is 0^n 1^n; this is the order produced by
// RevlexPositionGenerator. Lexicographic ranks are the complement
// C_n + 1 - rank.

#include <cstddef>
#include <vector>

#include "dyck/ballot.hpp"
#include "dyck/word.hpp"

namespace dyck {

/// One ballot number f(row, col) added to (rank) or subtracted from
/// (unrank) the running total, together with the index i it belongs to.
struct BallotTerm {
  std::size_t i;
  std::size_t row;
  std::size_t col;
  Count value;

  friend bool operator==(const BallotTerm&, const BallotTerm&) = default;
};

/// Lower bounds c_1 = 2, c_j = max(b_{j-1}+1, 2j) used by rank().
std::vector<std::uint32_t> floor_vector(const PositionVector& positions);

/// 1-based revlex rank. Throws kTableTooSmall if table.n_max() < n.
/// When `trace` is given, every nonzero f(n-i, n+i-j) term is appended.
Count rank(const PositionVector& positions, const BallotTable& table, std::vector<BallotTerm>* trace = nullptr);

/// Inverse of rank(). Throws kRankOutOfRange unless 1 <= r <= C_n, and
/// kTableTooSmall. `trace` receives every f(n-i, j) subtracted from r-1.
PositionVector unrank(Count r, std::size_t n, const BallotTable& table, std::vector<BallotTerm>* trace = nullptr);

Count rank_word(const DyckWord& word, const BallotTable& table);

/// 1-based index in ascending lexicographic order.
Count lex_rank(const DyckWord& word, const BallotTable& table);
PositionVector lex_unrank(Count r, std::size_t n, const BallotTable& table);

}  // namespace dyck
