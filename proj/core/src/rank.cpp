#include "dyck/rank.hpp"

#include <algorithm>
#include <string>

#include "dyck/error.hpp"

namespace dyck {

namespace {

void require_table(const BallotTable& table, std::size_t n) {
  if (table.n_max() < n) {
    throw Error(Errc::kTableTooSmall,
                "ballot table covers n <= " + std::to_string(table.n_max()) + ", need " + std::to_string(n));
  }
}

void require_rank(Count r, std::size_t n, const BallotTable& table) {
  const Count total = table.at(n, n);
  if (r < Count(1) || r > total) {
    throw Error(Errc::kRankOutOfRange,
                "rank " + std::to_string(r.value()) + " outside [1, " + std::to_string(total.value()) + "]");
  }
}

}  // namespace

std::vector<std::uint32_t> floor_vector(const PositionVector& positions) {
  const std::size_t n = positions.semilength();
  std::vector<std::uint32_t> c(n);
  c[0] = 2;
  for (std::size_t j = 2; j <= n; ++j) {
    c[j - 1] = std::max<std::uint32_t>(positions.b(j - 1) + 1, static_cast<std::uint32_t>(2 * j));
  }
  return c;
}

// Every b_i above its floor c_i skips the words whose i-th one sits at some
// j in [c_i, b_i); there are f(n-i, n+i-j) of them. b_n = 2n always, so the
// last index never contributes.
Count rank(const PositionVector& positions, const BallotTable& table, std::vector<BallotTerm>* trace) {
  const std::size_t n = positions.semilength();
  require_table(table, n);
  const auto c = floor_vector(positions);
  Count nr = 1;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    for (std::size_t j = c[i - 1]; j < positions.b(i); ++j) {
      const std::size_t row = n - i;
      const std::size_t col = n + i - j;
      const Count f = table.at(row, col);
      nr += f;
      if (trace && f > Count(0)) trace->push_back({i, row, col, f});
    }
  }
  return nr;
}

PositionVector unrank(Count r, std::size_t n, const BallotTable& table, std::vector<BallotTerm>* trace) {
  if (n == 0) throw Error(Errc::kEmptyWord, "unrank needs semilength n >= 1");
  require_table(table, n);
  require_rank(r, n, table);

  Count nr = r - Count(1);
  std::vector<std::uint32_t> b(n);
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t bi = std::max(prev + 1, 2 * i);
    std::size_t j = n + i - bi;
    while (bi < n + i) {
      const Count f = table.at(n - i, j);
      if (nr < f) break;
      nr -= f;
      if (trace) trace->push_back({i, n - i, j, f});
      ++bi;
      --j;
    }
    b[i - 1] = static_cast<std::uint32_t>(bi);
    prev = bi;
  }
  if (nr != Count(0)) throw Error(Errc::kInternal, "unrank left a nonzero remainder");
  return PositionVector(std::move(b));
}

Count rank_word(const DyckWord& word, const BallotTable& table) { return rank(positions_of_ones(word), table); }

Count lex_rank(const DyckWord& word, const BallotTable& table) {
  const std::size_t n = word.semilength();
  require_table(table, n);
  return table.at(n, n) + Count(1) - rank_word(word, table);
}

PositionVector lex_unrank(Count r, std::size_t n, const BallotTable& table) {
  if (n == 0) throw Error(Errc::kEmptyWord, "unrank needs semilength n >= 1");
  require_table(table, n);
  require_rank(r, n, table);
  return unrank(table.at(n, n) + Count(1) - r, n, table);
}

}  // namespace dyck
