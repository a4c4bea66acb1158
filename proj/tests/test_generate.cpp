#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "dyck/ballot.hpp"
#include "dyck/generate.hpp"
#include "golden.hpp"
#include "oracle.hpp"

using namespace dyck;

namespace {

std::vector<std::string> strings(const std::vector<DyckWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

std::string compact(const PositionVector& p) {
  std::string s;
  for (auto b : p.positions()) s += std::to_string(b);
  return s;
}

}  // namespace

TEST_CASE("lex generator") {
  CHECK(strings(collect(LexGenerator(4))) == golden::kLexN4);
  CHECK(strings(collect(LexGenerator(1))) == std::vector<std::string>{"01"});

  const auto five = strings(collect(LexGenerator(5)));
  CHECK(five.size() == catalan(5).value());
  CHECK(std::is_sorted(five.begin(), five.end()));
  CHECK(std::adjacent_find(five.begin(), five.end()) == five.end());
}

TEST_CASE("lex generator equals brute-force filtering, n <= 9") {
  for (std::size_t n = 1; n <= 9; ++n) CHECK(strings(collect(LexGenerator(n))) == oracle::dyck_words_by_filter(n));
}

TEST_CASE("revlex position generator") {
  std::vector<std::string> got;
  std::vector<std::string> words;
  for (const auto& p : collect(RevlexPositionGenerator(4))) {
    got.push_back(compact(p));
    words.push_back(word_from_positions(p).str());
  }
  CHECK(got == golden::kRevlexPositionsN4);
  CHECK(words == golden::kRevlexWordsN4);

  const auto one = collect(RevlexPositionGenerator(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == PositionVector({2}));
}

TEST_CASE("swap generator") {
  CHECK(strings(collect(SwapGenerator(4))) == golden::kSwapN4);
  CHECK(strings(collect(SwapGenerator(1))) == std::vector<std::string>{"01"});

  const auto six = strings(collect(SwapGenerator(6)));
  CHECK(six.size() == 132);
  const std::set<std::string> as_set(six.begin(), six.end());
  CHECK(as_set.size() == 132);
  const auto lex = strings(collect(LexGenerator(6)));
  CHECK(as_set == std::set<std::string>(lex.begin(), lex.end()));
}

TEST_CASE("generators reject semilength zero") {
  CHECK_THROWS_AS(LexGenerator(0), Error);
  CHECK_THROWS_AS(RevlexPositionGenerator(0), Error);
  CHECK_THROWS_AS(SwapGenerator(0), Error);
}

TEST_CASE("exhausted generators stay exhausted") {
  LexGenerator lex(2);
  RevlexPositionGenerator rev(2);
  SwapGenerator swap(2);
  for (int k = 0; k < 2; ++k) {
    CHECK(lex.next());
    CHECK(rev.next());
    CHECK(swap.next());
  }
  for (int k = 0; k < 3; ++k) {
    CHECK_FALSE(lex.next());
    CHECK_FALSE(rev.next());
    CHECK_FALSE(swap.next());
  }
}

TEST_CASE("limit takes a prefix") {
  CHECK(strings(collect(LexGenerator(4), 3)) ==
        std::vector<std::string>(golden::kLexN4.begin(), golden::kLexN4.begin() + 3));
  CHECK(collect(SwapGenerator(20), 5).size() == 5);
  CHECK(collect(RevlexPositionGenerator(30), 0).empty());
}

TEST_CASE("range adaptor") {
  LexGenerator gen(4);
  std::vector<std::string> seen;
  for (const auto& w : as_range(gen)) seen.push_back(w.str());
  CHECK(seen == golden::kLexN4);
}

TEST_CASE("all orders: valid, distinct, C_n items; revlex = reverse(lex); swap set = lex set, n <= 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto lex = strings(collect(LexGenerator(n)));
    const auto swap = strings(collect(SwapGenerator(n)));
    std::vector<std::string> rev;
    for (const auto& p : collect(RevlexPositionGenerator(n))) rev.push_back(word_from_positions(p).str());

    const auto cn = catalan(n).value();
    for (const auto* list : std::array<const std::vector<std::string>*, 3>{&lex, &swap, &rev}) {
      REQUIRE(list->size() == cn);
      REQUIRE(std::set<std::string>(list->begin(), list->end()).size() == cn);
      for (const auto& w : *list) REQUIRE(is_dyck(w));
    }
    CHECK(std::equal(lex.rbegin(), lex.rend(), rev.begin()));
    CHECK(std::set<std::string>(swap.begin(), swap.end()) == std::set<std::string>(lex.begin(), lex.end()));
  }
}

TEST_CASE("swap order: each word is one 10 -> 01 swap away from an earlier word") {
  for (std::size_t n = 1; n <= 9; ++n) {
    SwapGenerator gen(n);
    std::set<std::string> emitted;
    auto first = gen.next();
    REQUIRE(first);
    CHECK(gen.parent().empty());
    emitted.insert(first->str());
    while (auto w = gen.next()) {
      const std::string& parent = gen.parent();
      const std::size_t j = gen.swap_position();
      REQUIRE(emitted.count(parent) == 1);
      REQUIRE(j >= 1);
      REQUIRE(parent.substr(j - 1, 2) == "10");
      REQUIRE(w->str().substr(j - 1, 2) == "01");
      std::size_t differing = 0;
      for (std::size_t k = 0; k < parent.size(); ++k) differing += parent[k] != w->str()[k];
      REQUIRE(differing == 2);
      emitted.insert(w->str());
    }
  }
}
