#include "dyck/ballot.hpp"

#include <string>

namespace dyck {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

Count narrow(u128 v, const char* what) {
  if (v > UINT64_MAX) throw Error(Errc::kOverflow, std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

// binom(a, b) exactly in 128 bits. r * (a - k) stays below 2^128 for every
// a that can matter here (the result itself has to fit in 64 bits).
u128 binomial_wide(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  u128 r = 1;
  for (std::size_t k = 0; k < b; ++k) {
    u128 next;
    if (__builtin_mul_overflow(r, static_cast<u128>(a - k), &next)) {
      throw Error(Errc::kOverflow, "binomial intermediate exceeds 128 bits");
    }
    r = next / (k + 1);
  }
  return r;
}

i128 checked_term(Count coeff, Count catalan_value, bool negative) {
  i128 term;
  if (__builtin_mul_overflow(static_cast<i128>(coeff.value()), static_cast<i128>(catalan_value.value()), &term)) {
    throw Error(Errc::kOverflow, "alternating sum term exceeds 128 bits");
  }
  return negative ? -term : term;
}

Count to_count(i128 acc) {
  if (acc < 0) throw Error(Errc::kInternal, "alternating sum is negative");
  return narrow(static_cast<u128>(acc), "alternating sum");
}

}  // namespace

BallotTable::BallotTable(std::size_t n_max) : n_max_(n_max), entries_(offset(n_max + 1)) {
  for (std::size_t i = 0; i <= n_max; ++i) {
    Count* row = &entries_[offset(i)];
    row[0] = 1;
    for (std::size_t j = 1; j < i; ++j) {
      const Count* above = &entries_[offset(i - 1)];
      try {
        row[j] = above[j] + row[j - 1];
      } catch (const Error&) {
        throw Error(Errc::kOverflow, "ballot number f(" + std::to_string(i) + "," + std::to_string(j) +
                                         ") exceeds 64 bits (n_max=" + std::to_string(n_max) + ")");
      }
    }
    if (i >= 1) row[i] = row[i - 1];
  }
}

Count BallotTable::at(std::size_t i, std::size_t j) const {
  if (i > n_max_) {
    throw Error(Errc::kOutOfRange, "ballot row " + std::to_string(i) + " beyond table n_max " + std::to_string(n_max_));
  }
  if (j > i) return 0;
  return entries_[offset(i) + j];
}

BallotTable build_ballot_table(std::size_t n_max) { return BallotTable(n_max); }

Count catalan(std::size_t n) { return BallotTable(n).at(n, n); }

Count catalan_closed_form(std::size_t n) { return narrow(binomial_wide(2 * n, n) / (n + 1), "Catalan number"); }

Count binomial(std::size_t a, std::size_t b) { return narrow(binomial_wide(a, b), "binomial coefficient"); }

Count catalan_alternating(std::size_t n_plus_1) {
  if (n_plus_1 == 0) throw Error(Errc::kOutOfRange, "alternating recurrence needs an argument >= 1");
  const std::size_t n = n_plus_1 - 1;
  const BallotTable table(n);  // diagonal holds C_0 .. C_n
  i128 acc = 1;
  // binom(n-k, k+1) vanishes once k+1 > n-k.
  for (std::size_t k = 0; k <= n && k + 1 <= n - k; ++k) {
    acc += checked_term(binomial(n - k, k + 1), table.at(n - k, n - k), k % 2 == 1);
  }
  return to_count(acc);
}

Count ballot_via_catalan(std::size_t n, std::size_t k) {
  if (k > n) throw Error(Errc::kOutOfRange, "ballot_via_catalan needs k <= n");
  const BallotTable table(n);
  i128 acc = 0;
  // binom(k-i, i) vanishes once i > k-i.
  for (std::size_t i = 0; 2 * i <= k; ++i) {
    acc += checked_term(binomial(k - i, i), table.at(n - i, n - i), i % 2 == 1);
  }
  return to_count(acc);
}

}  // namespace dyck
