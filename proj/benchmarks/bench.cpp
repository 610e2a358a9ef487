#include <benchmark/benchmark.h>

#include <random>

#include "grastab/schubert.hpp"

using namespace grastab;

namespace {

struct QuotientArg {
  const char* group;
  int node;
};
const QuotientArg kQuotients[] = {{"F4", 1}, {"E6", 2}, {"E7", 1}, {"E8", 8}};

void BM_coset_enumeration(benchmark::State& state) {
  const QuotientArg& q = kQuotients[state.range(0)];
  CartanMatrix C = cartan_matrix(q.group);
  for (auto _ : state) {
    CosetTable T = minimal_coset_reps(C, q.node);
    benchmark::DoNotOptimize(T.reps.data());
  }
  state.SetLabel(std::string(q.group) + " node " + std::to_string(q.node));
}
BENCHMARK(BM_coset_enumeration)->DenseRange(0, 3);

void BM_engine_construction(benchmark::State& state) {
  const QuotientArg& q = kQuotients[state.range(0)];
  CartanMatrix C = cartan_matrix(q.group);
  for (auto _ : state) {
    SchubertEngine eng(C, q.node);
    benchmark::DoNotOptimize(eng.cosets().size());
  }
  state.SetLabel(q.group);
}
BENCHMARK(BM_engine_construction)->DenseRange(0, 3);

// The localization DP: all restrictions at every fixed point, top degree
// included. Dominates verification time for the heavy cases.
void BM_restriction_dp(benchmark::State& state) {
  const QuotientArg& q = kQuotients[state.range(0)];
  CartanMatrix C = cartan_matrix(q.group);
  for (auto _ : state) {
    SchubertEngine eng(C, q.node);
    mpz_class sum = 0;
    for (int w = 0; w < eng.cosets().size(); ++w)
      sum += eng.restrictions_at(w).back();
    benchmark::DoNotOptimize(sum.get_mpz_t());
  }
  state.SetLabel(q.group);
}
BENCHMARK(BM_restriction_dp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_product_constants(benchmark::State& state) {
  const QuotientArg& q = kQuotients[state.range(0)];
  CartanMatrix C = cartan_matrix(q.group);
  CosetTable T = minimal_coset_reps(C, q.node);
  std::mt19937 rng(1);
  std::vector<std::pair<int, int>> pairs;
  while (pairs.size() < 32) {
    int u = rng() % T.size(), v = rng() % T.size();
    if (T.lengths[u] + T.lengths[v] <= T.top_length) pairs.emplace_back(u, v);
  }
  // Fresh engine per iteration: the product cache would otherwise hide the
  // triangular-solve cost.
  for (auto _ : state) {
    SchubertEngine eng(C, q.node);
    for (auto& [u, v] : pairs)
      benchmark::DoNotOptimize(eng.product_constants(u, v).size());
  }
  state.SetLabel(q.group);
}
BENCHMARK(BM_product_constants)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_smith_normal_form(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> val(-99, 99);
  int n = (int)state.range(0);
  IntMatrix M(n, n);
  for (auto& e : M.entries) e = val(rng);
  for (auto _ : state) {
    SNFResult s = smith_normal_form(M);
    benchmark::DoNotOptimize(s.S.entries.data());
  }
}
BENCHMARK(BM_smith_normal_form)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
