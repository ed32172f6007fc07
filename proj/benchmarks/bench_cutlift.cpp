#include <benchmark/benchmark.h>

#include <random>

#include "cutlift/catalog.hpp"
#include "cutlift/equivalence.hpp"
#include "cutlift/ratmat.hpp"
#include "cutlift/trielim.hpp"
#include "cutlift/verify.hpp"

using namespace cutlift;

namespace {

GraphPtr shared_graph(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

GraphPtr k3113() {
  return shared_graph(Graph::complete_multipartite(
      "K3_1_1_3", {{"1", "2", "3"}, {"4"}, {"5"}, {"6", "7", "8"}}));
}

void BM_EnumerateValidity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Inequality q = zero_lift(make_pentagonal(), shared_graph(Graph::complete(n)));
  for (auto _ : state) benchmark::DoNotOptimize(is_valid(q, 1));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(cut_count(q.graph())));
}
BENCHMARK(BM_EnumerateValidity)->Arg(10)->Arg(14)->Arg(18);

void BM_RankExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(16)->Arg(32);

void BM_EliminateExample(benchmark::State& state) {
  Inequality pent = make_pentagonal();
  auto target = k3113();
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "6", FormKind::Canonical});
  plan.entries.push_back({"1", "3", "7", FormKind::Canonical});
  plan.entries.push_back({"2", "3", "8", FormKind::Canonical});
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(pent, target, plan));
}
BENCHMARK(BM_EliminateExample);

void BM_FacetCheckLifted(benchmark::State& state) {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality lifted =
      eliminate_multistage(make_pentagonal({"A1", "A2", "B1", "B2", "B3"}), layout)
          .result.output;
  for (auto _ : state) benchmark::DoNotOptimize(is_facet(lifted));
}
BENCHMARK(BM_FacetCheckLifted);

void BM_OrbitSearchNegative(benchmark::State& state) {
  // exhaustive search that has to scan the whole (sigma, S) space
  Inequality aprime = eliminate_multistage(make_pentagonal(), [] {
                        KPartiteGroup g1, g2, g3;
                        g1.members = {"1", "2", "3"};
                        g1.v_part = 1;
                        g1.w_part = 4;
                        g1.w_labels = {"6", "7", "8"};
                        g2.members = {"4"};
                        g2.v_part = 2;
                        g3.members = {"5"};
                        g3.v_part = 3;
                        return build_kpartite_layout({g1, g2, g3}, 4);
                      }()).result.output;
  Inequality off(aprime.graph_ptr(), aprime.coeffs(), aprime.rhs() + 1);
  EquivOptions opts;
  for (auto _ : state)
    benchmark::DoNotOptimize(are_ps_equivalent(aprime, off, opts));
}
BENCHMARK(BM_OrbitSearchNegative);

void BM_HullOracleC5(benchmark::State& state) {
  auto c5 = shared_graph(Graph::cycle(5));
  for (auto _ : state) benchmark::DoNotOptimize(hull_oracle(c5));
}
BENCHMARK(BM_HullOracleC5);

}  // namespace

BENCHMARK_MAIN();
