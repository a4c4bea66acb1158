#include "dyck/generate.hpp"

#include <algorithm>
#include <utility>

#include "dyck/error.hpp"

namespace dyck {

namespace {

void require_semilength(std::size_t n) {
  if (n == 0) throw Error(Errc::kEmptyWord, "generators need semilength n >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// Lexicographic order

LexGenerator::LexGenerator(std::size_t n) : n_(n) {
  require_semilength(n);
  word_.reserve(2 * n);
  word_.push_back('0');
  zeros_ = 1;
}

// Completes the prefix with the smallest admissible symbols: a 0 whenever
// zeros remain, otherwise the closing 1s.
void LexGenerator::fill_minimal() {
  while (word_.size() < 2 * n_) {
    if (zeros_ < n_) {
      word_.push_back('0');
      ++zeros_;
    } else {
      word_.push_back('1');
      ++ones_;
    }
  }
}

std::optional<DyckWord> LexGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_minimal();
    return DyckWord(word_);
  }
  // Backtrack to the deepest 0 that could have been a 1 instead. The leading
  // 0 is fixed, so the walk ends when only it remains.
  while (word_.size() > 1) {
    const char last = word_.back();
    word_.pop_back();
    if (last == '1') {
      --ones_;
      continue;
    }
    --zeros_;
    if (ones_ < n_ && zeros_ > ones_) {
      word_.push_back('1');
      ++ones_;
      fill_minimal();
      return DyckWord(word_);
    }
  }
  done_ = true;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reverse lexicographic order over positions of 1s

RevlexPositionGenerator::RevlexPositionGenerator(std::size_t n) : n_(n), b_(n) {
  require_semilength(n);
  for (std::size_t i = 1; i <= n; ++i) b_[i - 1] = static_cast<std::uint32_t>(2 * i);
}

std::optional<PositionVector> RevlexPositionGenerator::next() {
  if (done_) return std::nullopt;
  PositionVector current(b_);

  bool advanced = false;
  for (std::size_t i = n_ - 1; i >= 1; --i) {
    if (b_[i - 1] < n_ + i) {
      ++b_[i - 1];
      for (std::size_t j = i + 1; j <= n_ - 1; ++j) {
        b_[j - 1] = std::max<std::uint32_t>(b_[j - 2] + 1, static_cast<std::uint32_t>(2 * j));
      }
      advanced = true;
      break;
    }
  }
  done_ = !advanced;
  return current;
}

// ---------------------------------------------------------------------------
// Swap order

SwapGenerator::SwapGenerator(std::size_t n) : n_(n) { require_semilength(n); }

std::optional<DyckWord> SwapGenerator::next() {
  if (!seeded_) {
    seeded_ = true;
    std::string seed;
    seed.reserve(2 * n_);
    for (std::size_t k = 0; k < n_; ++k) seed += "01";
    stack_.push_back({seed, 1});
    parent_.clear();
    swap_position_ = 0;
    return DyckWord(std::move(seed));
  }
  const std::size_t len = 2 * n_;
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    // First "10" at 1-based position j >= scan, i.e. x_j x_{j+1} = 10.
    std::size_t j = 0;
    for (std::size_t p = top.scan; p < len; ++p) {
      if (top.word[p - 1] == '1' && top.word[p] == '0') {
        j = p;
        break;
      }
    }
    if (j == 0) {
      stack_.pop_back();
      continue;
    }
    top.scan = j + 2;
    std::string child = top.word;
    std::swap(child[j - 1], child[j]);
    parent_ = top.word;
    swap_position_ = j;
    stack_.push_back({child, j - 1});
    return DyckWord(std::move(child));
  }
  return std::nullopt;
}

}  // namespace dyck
