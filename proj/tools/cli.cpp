#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "dyck/dyck.hpp"

namespace dyck::cli {

namespace {

struct Options {
  unsigned n = 0;
  std::string gen_order = "lex";
  std::string rank_order = "revlex";
  std::string format = "bits";
  std::optional<std::size_t> limit;
  std::string bits;
  std::string positions;
  std::uint64_t rank = 0;
  std::string method = "table";
  std::string tree;
  bool trace = false;
};

/// Error raised while validating flag values; carries the flag name.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_item(std::ostream& out, const DyckWord& word, bool as_positions) {
  if (as_positions) {
    out << to_string(positions_of_ones(word)) << '\n';
  } else {
    out << word.str() << '\n';
  }
}

void print_item(std::ostream& out, const PositionVector& positions, bool as_positions) {
  if (as_positions) {
    out << to_string(positions) << '\n';
  } else {
    out << word_from_positions(positions).str() << '\n';
  }
}

template <typename Generator>
void stream(Generator gen, std::optional<std::size_t> limit, bool as_positions, std::ostream& out) {
  for (std::size_t emitted = 0; !limit || emitted < *limit; ++emitted) {
    auto item = gen.next();
    if (!item) break;
    print_item(out, *item, as_positions);
  }
}

void cmd_gen(const Options& o, std::ostream& out) {
  const bool as_positions = o.format == "positions";
  if (o.gen_order == "lex") {
    stream(LexGenerator(o.n), o.limit, as_positions, out);
  } else if (o.gen_order == "revlex") {
    stream(RevlexPositionGenerator(o.n), o.limit, as_positions, out);
  } else {
    stream(SwapGenerator(o.n), o.limit, as_positions, out);
  }
}

std::string join_terms(const std::vector<BallotTerm>& terms, const char* sep, bool values) {
  std::ostringstream s;
  for (const auto& t : terms) {
    s << sep;
    if (values) {
      s << t.value;
    } else {
      s << "f(" << t.row << ',' << t.col << ')';
    }
  }
  return s.str();
}

void cmd_rank(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.bits.empty() == o.positions.empty()) throw UsageError("rank: exactly one of --bits or --positions is required");
  PositionVector p = [&] {
    if (!o.bits.empty()) {
      DyckWord w = [&] {
        try {
          return DyckWord::parse(o.bits);
        } catch (const Error& e) {
          throw UsageError(std::string("--bits: ") + e.what());
        }
      }();
      if (w.semilength() != o.n) {
        throw UsageError("--bits: word has semilength " + std::to_string(w.semilength()) + " but --n is " +
                         std::to_string(o.n));
      }
      return positions_of_ones(w);
    }
    try {
      return parse_positions(o.positions, o.n);
    } catch (const Error& e) {
      throw UsageError(std::string("--positions: ") + e.what());
    }
  }();
  const BallotTable table(o.n);
  std::vector<BallotTerm> terms;
  const Count r = rank(p, table, o.trace ? &terms : nullptr);
  if (o.trace) {
    err << "trace: 1" << join_terms(terms, " + ", false) << " = 1" << join_terms(terms, " + ", true) << " = " << r
        << '\n';
  }
  if (o.rank_order == "lex") {
    out << (table.at(o.n, o.n) + Count(1) - r) << '\n';
  } else {
    out << r << '\n';
  }
}

void cmd_unrank(const Options& o, std::ostream& out, std::ostream& err) {
  const BallotTable table(o.n);
  const Count total = table.at(o.n, o.n);
  if (o.rank < 1 || Count(o.rank) > total) {
    throw UsageError("--rank: " + std::to_string(o.rank) + " outside [1, " + std::to_string(total.value()) +
                     "] for n=" + std::to_string(o.n));
  }
  const Count r = o.rank_order == "lex" ? total + Count(1) - Count(o.rank) : Count(o.rank);
  std::vector<BallotTerm> terms;
  const PositionVector p = unrank(r, o.n, table, o.trace ? &terms : nullptr);
  if (o.trace) {
    const Count start = r - Count(1);
    err << "trace: " << start << join_terms(terms, " - ", false) << " = " << start << join_terms(terms, " - ", true)
        << " = 0\n";
  }
  print_item(out, p, o.format == "positions");
}

void cmd_catalan(const Options& o, std::ostream& out) {
  if (o.method == "table") {
    out << catalan(o.n) << '\n';
  } else if (o.method == "closed") {
    out << catalan_closed_form(o.n) << '\n';
  } else {
    if (o.n == 0) throw UsageError("--n: the alternating method needs n >= 1");
    out << catalan_alternating(o.n) << '\n';
  }
}

// Rows j = n..0 top to bottom, columns i = 0..n; cells above the diagonal
// are blank.
void cmd_table(const Options& o, std::ostream& out) {
  const BallotTable table(o.n);
  const std::size_t width = std::max(std::to_string(table.at(o.n, o.n).value()).size(), std::to_string(o.n).size());
  const std::size_t label = std::to_string(o.n).size();
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  for (std::size_t j = o.n + 1; j-- > 0;) {
    std::string line = pad(std::to_string(j), label) + " |";
    for (std::size_t i = 0; i <= o.n; ++i) {
      line += ' ';
      line += i < j ? std::string(width, ' ') : pad(std::to_string(table.at(i, j).value()), width);
    }
    out << line << '\n';
  }
  out << std::string(label + 1, '-') << '+' << std::string((width + 1) * (o.n + 1), '-') << '\n';
  std::string axis = std::string(label + 1, ' ') + "|";
  for (std::size_t i = 0; i <= o.n; ++i) axis += ' ' + pad(std::to_string(i), width);
  out << axis << '\n';
}

void cmd_encode_tree(const Options& o, std::ostream& out) {
  BinaryTree tree = [&] {
    try {
      return parse_tree(o.tree);
    } catch (const Error& e) {
      throw UsageError(std::string("--tree: ") + e.what());
    }
  }();
  if (tree.empty()) throw UsageError("--tree: the empty tree has no Dyck encoding");
  out << encode_tree(tree).str() << '\n';
}

void cmd_decode_tree(const Options& o, std::ostream& out) {
  DyckWord w = [&] {
    try {
      return DyckWord::parse(o.bits);
    } catch (const Error& e) {
      throw UsageError(std::string("--bits: ") + e.what());
    }
  }();
  out << format_tree(decode_word(w)) << '\n';
}

CLI::Option* add_n(CLI::App* cmd, Options& o, unsigned min_n) {
  return cmd->add_option("--n", o.n, "Semilength")->required()->check(CLI::Range(min_n, kMaxSemilength));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generate, rank, unrank and convert Dyck words", "dyck"};
  app.require_subcommand(1, 1);

  auto* gen = app.add_subcommand("gen", "Enumerate all Dyck words of semilength n");
  add_n(gen, o, 1);
  gen->add_option("--order", o.gen_order, "Generation order")->check(CLI::IsMember({"lex", "revlex", "swap"}));
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"bits", "positions"}));
  gen->add_option("--limit", o.limit, "Stop after this many items");

  auto* rnk = app.add_subcommand("rank", "Rank of a Dyck word");
  add_n(rnk, o, 1);
  auto* bits_opt = rnk->add_option("--bits", o.bits, "Word over {0,1}");
  auto* pos_opt = rnk->add_option("--positions", o.positions, "Space-separated 1-based positions of the 1s");
  bits_opt->excludes(pos_opt);
  rnk->add_option("--order", o.rank_order, "Ranking order")->check(CLI::IsMember({"revlex", "lex"}));
  rnk->add_flag("--trace", o.trace, "Print the ballot terms summed on stderr");

  auto* unr = app.add_subcommand("unrank", "Dyck word at a given rank");
  add_n(unr, o, 1);
  unr->add_option("--rank", o.rank, "1-based rank")->required();
  unr->add_option("--order", o.rank_order, "Ranking order")->check(CLI::IsMember({"revlex", "lex"}));
  unr->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"bits", "positions"}));
  unr->add_flag("--trace", o.trace, "Print the subtraction trace on stderr");

  auto* cat = app.add_subcommand("catalan", "The n-th Catalan number");
  add_n(cat, o, 0);
  cat->add_option("--method", o.method, "Computation route")
      ->check(CLI::IsMember({"table", "alternating", "closed"}));

  auto* tbl = app.add_subcommand("table", "Ballot-number triangle f(i,j) up to n");
  add_n(tbl, o, 0);

  auto* enc = app.add_subcommand("encode-tree", "Binary tree to Dyck word");
  enc->add_option("--tree", o.tree, "Tree text, T := '.' | '(' T T ')'")->required();

  auto* dec = app.add_subcommand("decode-tree", "Dyck word to binary tree");
  dec->add_option("--bits", o.bits, "Word over {0,1}")->required();

  std::vector<const char*> argv{"dyck"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      cmd_gen(o, out);
    } else if (rnk->parsed()) {
      cmd_rank(o, out, err);
    } else if (unr->parsed()) {
      cmd_unrank(o, out, err);
    } else if (cat->parsed()) {
      cmd_catalan(o, out);
    } else if (tbl->parsed()) {
      cmd_table(o, out);
    } else if (enc->parsed()) {
      cmd_encode_tree(o, out);
    } else if (dec->parsed()) {
      cmd_decode_tree(o, out);
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::kOverflow ? kExitOverflow : kExitUsage;
  }
  out.flush();
  return kExitOk;
}

}  // namespace dyck::cli
