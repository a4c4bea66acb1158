#pragma once

// Exhaustive Dyck word generators.
//
// Each generator is a pull-based stream: next() returns the following item
// or std::nullopt once all C_n items have been produced. Instances hold
// their own mutable cursor and are independent of each other.

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "dyck/word.hpp"

namespace dyck {

enum class Order { kLex, kRevlex, kSwap };

/// Ascending lexicographic order, "00..0011..11" first and "(01)^n" last.
///
/// Depth-first walk over the prefix tree: a 0 may be appended while fewer
/// than n zeros are placed, a 1 while ones < zeros. The partial word itself
/// is the recursion stack, so memory is O(n).
class LexGenerator {
 public:
  using value_type = DyckWord;

  explicit LexGenerator(std::size_t n);

  std::optional<DyckWord> next();

 private:
  void fill_minimal();

  std::size_t n_;
  std::string word_;
  std::size_t zeros_ = 0;
  std::size_t ones_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Position vectors in reverse lexicographic order of the words, starting
/// from b_i = 2i. The successor increments the rightmost b_i (i < n) that
/// is below n+i and resets every later entry to max(b_{j-1}+1, 2j).
class RevlexPositionGenerator {
 public:
  using value_type = PositionVector;

  explicit RevlexPositionGenerator(std::size_t n);

  std::optional<PositionVector> next();

 private:
  std::size_t n_;
  std::vector<std::uint32_t> b_;
  bool done_ = false;
};

/// Swap order: starts at (01)^n, then repeatedly turns the first "10" at or
/// after a scan index into "01", emits the result, and recurses into it
/// from one position to the left before resuming the scan two positions
/// past the swap.
///
/// The recursion runs on an explicit stack of (word, scan index) frames.
/// Each frame's word has one more inversion than its parent, so the depth
/// is at most n(n-1)/2 + 1.
class SwapGenerator {
 public:
  using value_type = DyckWord;

  explicit SwapGenerator(std::size_t n);

  std::optional<DyckWord> next();

  /// Word the last emitted word was derived from by one "10" -> "01" swap,
  /// and the 1-based position of that swap. Empty / 0 for the seed word.
  const std::string& parent() const noexcept { return parent_; }
  std::size_t swap_position() const noexcept { return swap_position_; }

 private:
  struct Frame {
    std::string word;
    std::size_t scan;  // 1-based
  };

  std::size_t n_;
  std::vector<Frame> stack_;
  std::string parent_;
  std::size_t swap_position_ = 0;
  bool seeded_ = false;
};

/// Input range over any generator with `next()`.
template <typename Generator>
class GeneratorRange {
 public:
  using value_type = typename Generator::value_type;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = typename Generator::value_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(Generator* gen) : gen_(gen), current_(gen->next()) {}

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = gen_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    Generator* gen_ = nullptr;
    std::optional<value_type> current_;
  };

  explicit GeneratorRange(Generator& gen) : gen_(&gen) {}

  iterator begin() { return iterator(gen_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Generator* gen_;
};

template <typename Generator>
GeneratorRange<Generator> as_range(Generator& gen) {
  return GeneratorRange<Generator>(gen);
}

/// Pulls at most `limit` items; everything when limit is nullopt.
template <typename Generator>
std::vector<typename Generator::value_type> collect(Generator gen, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<typename Generator::value_type> out;
  while (!limit || out.size() < *limit) {
    auto item = gen.next();
    if (!item) break;
    out.push_back(std::move(*item));
  }
  return out;
}

}  // namespace dyck
