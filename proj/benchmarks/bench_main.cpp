#include <benchmark/benchmark.h>

#include <random>

#include "coxeter/diagram.hpp"
#include "coxeter/intrinsic.hpp"
#include "coxeter/words.hpp"

namespace {

using namespace coxeter;

CoxeterMatrix path_diagram(std::size_t n, std::uint32_t first_label) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
  for (GenIndex i = 0; i + 1 < n; ++i)
    edges.push_back({{i, i + 1}, Order::finite(i == 0 ? first_label : 3)});
  return CoxeterMatrix(names, edges);
}

void BM_EnumerateDihedral(benchmark::State& state) {
  auto m = path_diagram(2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto g = EnumeratedGroup::build(m, m.full_set(), 1u << 20);
    benchmark::DoNotOptimize(g->size());
  }
}
BENCHMARK(BM_EnumerateDihedral)->Arg(50)->Arg(500)->Arg(5000);

void BM_EnumerateRankN(benchmark::State& state) {
  // C-type paths: orders 8, 48, 384, 3840, 46080.
  auto m = path_diagram(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    auto g = EnumeratedGroup::build(m, m.full_set(), 1u << 20);
    benchmark::DoNotOptimize(g->size());
  }
}
BENCHMARK(BM_EnumerateRankN)->DenseRange(2, 6);

void BM_NormalForms(benchmark::State& state) {
  auto m = path_diagram(5, 4);
  for (auto _ : state) {
    auto g = EnumeratedGroup::build(m, m.full_set(), 1u << 20);
    benchmark::DoNotOptimize(g->normal_form(g->size() - 1));
  }
}
BENCHMARK(BM_NormalForms);

void BM_ReduceInfiniteDihedral(benchmark::State& state) {
  auto m = parse_diagram("generators a b\nedge a b inf\n");
  WordEngine e(m);
  std::mt19937 rng(7);
  Word w;
  for (std::int64_t i = 0; i < state.range(0); ++i) w.letters.push_back(rng() % 2);
  for (auto _ : state) benchmark::DoNotOptimize(e.reduce(w).length());
}
BENCHMARK(BM_ReduceInfiniteDihedral)->Arg(64)->Arg(256)->Arg(1024);

void BM_ReduceBraid(benchmark::State& state) {
  auto m = path_diagram(3, 3);  // A3
  WordEngine e(m);
  std::mt19937 rng(11);
  std::vector<Word> words;
  for (int i = 0; i < 32; ++i) {
    Word w;
    for (int j = 0; j < 12; ++j) w.letters.push_back(rng() % 3);
    words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.reduce(words[i % words.size()]).length());
    ++i;
  }
}
BENCHMARK(BM_ReduceBraid);

void BM_DecideIntrinsic(benchmark::State& state) {
  // Random right-angled diagrams of the given rank.
  std::mt19937 rng(23);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<CoxeterMatrix> diagrams;
  for (int d = 0; d < 64; ++d) {
    std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
    for (GenIndex i = 0; i < n; ++i)
      for (GenIndex j = i + 1; j < n; ++j)
        if (rng() & 1) edges.push_back({{i, j}, Order::infinity()});
    diagrams.emplace_back(names, edges);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const CoxeterMatrix& m = diagrams[i % diagrams.size()];
    WordEngine e(m);
    benchmark::DoNotOptimize(intrinsic::decide_intrinsic(e, 0).is_intrinsic);
    ++i;
  }
}
BENCHMARK(BM_DecideIntrinsic)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
