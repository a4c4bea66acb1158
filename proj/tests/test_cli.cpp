#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dyck/dyck.hpp"
#include "golden.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = dyck::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("gen golden lists") {
  auto r = run({"gen", "--n", "4", "--order", "lex", "--format", "bits"});
  CHECK(r.status == 0);
  CHECK(lines(r.out) == golden::kLexN4);
  CHECK(r.err.empty());

  CHECK(lines(run({"gen", "--n", "4"}).out) == golden::kLexN4);
  CHECK(lines(run({"gen", "--n", "4", "--order", "swap"}).out) == golden::kSwapN4);
  CHECK(lines(run({"gen", "--n", "4", "--order", "revlex"}).out) == golden::kRevlexWordsN4);

  const auto pos = lines(run({"gen", "--n", "4", "--order", "revlex", "--format", "positions"}).out);
  REQUIRE(pos.size() == 14);
  CHECK(pos.front() == "2 4 6 8");
  CHECK(pos.back() == "5 6 7 8");
}

TEST_CASE("gen --limit") {
  auto r = run({"gen", "--n", "30", "--order", "swap", "--limit", "3"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).size() == 3);
  CHECK(lines(run({"gen", "--n", "4", "--limit", "0"}).out).empty());
}

TEST_CASE("every gen line parses back") {
  for (const char* order : {"lex", "revlex", "swap"}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto bits = lines(run({"gen", "--n", std::to_string(n), "--order", order}).out);
      const auto pos =
          lines(run({"gen", "--n", std::to_string(n), "--order", order, "--format", "positions"}).out);
      REQUIRE(bits.size() == pos.size());
      REQUIRE(bits.size() == dyck::catalan(n).value());
      for (std::size_t k = 0; k < bits.size(); ++k) {
        REQUIRE(dyck::is_dyck(bits[k]));
        REQUIRE(dyck::word_from_positions(dyck::parse_positions(pos[k], n)).str() == bits[k]);
      }
    }
  }
}

TEST_CASE("rank and unrank examples") {
  auto r = run({"rank", "--n", "5", "--positions", "4 5 8 9 10"});
  CHECK(r.status == 0);
  CHECK(r.out == "33\n");

  auto u = run({"unrank", "--n", "6", "--rank", "93", "--format", "positions"});
  CHECK(u.status == 0);
  CHECK(u.out == "4 5 7 9 11 12\n");

  CHECK(run({"unrank", "--n", "6", "--rank", "93"}).out == "000110101011\n");
  CHECK(run({"rank", "--n", "4", "--bits", "00011011", "--order", "lex"}).out == "3\n");
  CHECK(run({"unrank", "--n", "4", "--rank", "3", "--order", "lex"}).out == "00011011\n");
}

TEST_CASE("trace output") {
  auto u = run({"unrank", "--n", "6", "--rank", "93", "--format", "positions", "--trace"});
  CHECK(u.out == "4 5 7 9 11 12\n");
  CHECK(u.err ==
        "trace: 92 - f(5,5) - f(5,4) - f(3,3) - f(2,2) - f(1,1) = 92 - 42 - 42 - 5 - 2 - 1 = 0\n");
  auto r = run({"rank", "--n", "5", "--positions", "4 5 8 9 10", "--trace"});
  CHECK(r.err == "trace: 1 + f(4,4) + f(4,3) + f(2,2) + f(2,1) = 1 + 14 + 14 + 2 + 2 = 33\n");
}

TEST_CASE("rank and unrank are inverse through the CLI") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto cn = dyck::catalan(n).value();
    for (int trial = 0; trial < 10; ++trial) {
      const auto r = std::uniform_int_distribution<std::uint64_t>(1, cn)(rng);
      for (const char* order : {"revlex", "lex"}) {
        const std::string ns = std::to_string(n);
        auto word = run({"unrank", "--n", ns, "--rank", std::to_string(r), "--order", order});
        REQUIRE(word.status == 0);
        const std::string bits = word.out.substr(0, word.out.size() - 1);
        auto back = run({"rank", "--n", ns, "--bits", bits, "--order", order});
        REQUIRE(back.status == 0);
        REQUIRE(back.out == std::to_string(r) + "\n");

        auto pos = run({"unrank", "--n", ns, "--rank", std::to_string(r), "--order", order, "--format", "positions"});
        const std::string p = pos.out.substr(0, pos.out.size() - 1);
        REQUIRE(run({"rank", "--n", ns, "--positions", p, "--order", order}).out == std::to_string(r) + "\n");
      }
    }
  }
}

TEST_CASE("catalan methods") {
  CHECK(run({"catalan", "--n", "10"}).out == "16796\n");
  CHECK(run({"catalan", "--n", "10", "--method", "closed"}).out == "16796\n");
  CHECK(run({"catalan", "--n", "10", "--method", "alternating"}).out == "16796\n");
  CHECK(run({"catalan", "--n", "0"}).out == "1\n");
  CHECK(run({"catalan", "--n", "35"}).out == "3116285494907301262\n");
  CHECK(run({"catalan", "--n", "0", "--method", "alternating"}).status == 2);
}

TEST_CASE("table layout") {
  auto r = run({"table", "--n", "3"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "3 |       5\n"
        "2 |     2 5\n"
        "1 |   1 2 3\n"
        "0 | 1 1 1 1\n"
        "--+--------\n"
        "  | 0 1 2 3\n");
  for (const auto& line : lines(run({"table", "--n", "9"}).out)) {
    CHECK((line.empty() || line.back() != ' '));
  }
}

TEST_CASE("tree codec commands") {
  CHECK(run({"encode-tree", "--tree", "((..)(..))"}).out == "000111\n");
  CHECK(run({"encode-tree", "--tree", "(..)"}).out == "01\n");
  CHECK(run({"decode-tree", "--bits", "0101"}).out == "(.(..))\n");
  CHECK(run({"decode-tree", "--bits", "000111"}).out == "((..)(..))\n");
  CHECK(run({"encode-tree", "--tree", "."}).status == 2);
  auto bad = run({"encode-tree", "--tree", "((.."});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("--tree") != std::string::npos);
  CHECK(run({"decode-tree", "--bits", "0110"}).status == 2);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"gen", "--n", "36"}).status == 2);
  CHECK(run({"gen", "--n", "0"}).status == 2);
  CHECK(run({"gen", "--n", "-1"}).status == 2);
  CHECK(run({"gen", "--n", "4", "--order", "gray"}).status == 2);
  CHECK(run({"gen", "--n", "4", "--format", "json"}).status == 2);
  CHECK(run({"rank", "--n", "4"}).status == 2);
  CHECK(run({"rank", "--n", "4", "--bits", "01010101", "--positions", "2 4 6 8"}).status == 2);
  CHECK(run({"rank", "--n", "4", "--bits", "0101"}).status == 2);
  CHECK(run({"rank", "--n", "4", "--positions", "1 2 3 4"}).status == 2);
  auto oob = run({"unrank", "--n", "4", "--rank", "15"});
  CHECK(oob.status == 2);
  CHECK(oob.err.find("--rank") != std::string::npos);
  CHECK(run({"unrank", "--n", "4", "--rank", "0"}).status == 2);
  CHECK(run({"catalan", "--n", "36"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("gen") != std::string::npos);
}
