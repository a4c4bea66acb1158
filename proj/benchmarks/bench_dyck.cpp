#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "dyck/dyck.hpp"

namespace {

template <typename Generator>
void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::int64_t items = 0;
  for (auto _ : state) {
    Generator gen(n);
    while (auto item = gen.next()) {
      benchmark::DoNotOptimize(item);
      ++items;
    }
  }
  state.SetItemsProcessed(items);
}
BENCHMARK_TEMPLATE(BM_Enumerate, dyck::LexGenerator)->DenseRange(8, 14, 2);
BENCHMARK_TEMPLATE(BM_Enumerate, dyck::RevlexPositionGenerator)->DenseRange(8, 14, 2);
BENCHMARK_TEMPLATE(BM_Enumerate, dyck::SwapGenerator)->DenseRange(8, 14, 2);

void BM_BallotTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dyck::build_ballot_table(n));
}
BENCHMARK(BM_BallotTable)->Arg(10)->Arg(20)->Arg(36);

void BM_RankUnrank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dyck::BallotTable table(n);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(1, table.at(n, n).value());
  std::vector<std::uint64_t> ranks(1024);
  for (auto& r : ranks) r = pick(rng);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto p = dyck::unrank(ranks[k++ & 1023], n, table);
    benchmark::DoNotOptimize(dyck::rank(p, table));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RankUnrank)->Arg(10)->Arg(20)->Arg(35);

void BM_TreeCodec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dyck::BallotTable table(n);
  const auto word = dyck::word_from_positions(dyck::unrank(table.at(n, n).value() / 3 + 1, n, table));
  for (auto _ : state) benchmark::DoNotOptimize(dyck::encode_tree(dyck::decode_word(word)));
}
BENCHMARK(BM_TreeCodec)->Arg(10)->Arg(35);

}  // namespace
BENCHMARK_MAIN();
