// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "zdgraph/graph.hpp"
#include "zdgraph/ideals.hpp"
#include "zdgraph/kernels.hpp"
#include "zdgraph/semigroup.hpp"

using namespace zdg;

namespace {

  FiniteRing const& m2z4() {
    static FiniteRing const r = make_matrix_ring(make_cyclic_ring(4), 2);
    return r;
  }

  // Sparse symmetric random graph.
  Adjacency random_graph(std::size_t v, double p) {
    std::mt19937                rng(42);
    std::bernoulli_distribution coin(p);
    Adjacency                   adj(v, ElementSet(v));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (coin(rng)) {
          adj[i].insert(static_cast<Element>(j));
          adj[j].insert(static_cast<Element>(i));
        }
      }
    }
    return adj;
  }

  Adjacency const& apog_m2z4() {
    static Adjacency const adj = directed_zd_graph(build_ipo(m2z4())).undirected();
    return adj;
  }

}  // namespace

static void BM_PrincipalIdeals_Kernel(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::principal_ideals(m2z4(), Side::left));
  }
}
static void BM_PrincipalIdeals_Reference(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::principal_ideals(m2z4(), Side::left));
  }
}
BENCHMARK(BM_PrincipalIdeals_Kernel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrincipalIdeals_Reference)->Unit(benchmark::kMillisecond);

static void BM_IdealProduct_Kernel(benchmark::State& st) {
  auto const ideals = enumerate_one_sided_ideals(m2z4(), Side::left);
  auto const& a     = ideals[ideals.size() / 2];
  auto const& b     = ideals[ideals.size() - 2];
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::ideal_product(m2z4(), a.generators, b.generators));
  }
}
static void BM_IdealProduct_Reference(benchmark::State& st) {
  auto const ideals = enumerate_one_sided_ideals(m2z4(), Side::left);
  auto const& a     = ideals[ideals.size() / 2];
  auto const& b     = ideals[ideals.size() - 2];
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::ideal_product(m2z4(), a.set, b.set));
  }
}
BENCHMARK(BM_IdealProduct_Kernel);
BENCHMARK(BM_IdealProduct_Reference);

static void BM_Distance_Kernel(benchmark::State& st) {
  auto const adj = st.range(0) == 0 ? apog_m2z4() : random_graph(st.range(0), 0.03);
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::distance_summary(adj));
  }
}
static void BM_Distance_Reference(benchmark::State& st) {
  auto const adj = st.range(0) == 0 ? apog_m2z4() : random_graph(st.range(0), 0.03);
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::distance_summary(adj));
  }
}
BENCHMARK(BM_Distance_Kernel)->Arg(0)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Distance_Reference)->Arg(0)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_Girth_Kernel(benchmark::State& st) {
  auto const adj = st.range(0) == 0 ? apog_m2z4() : random_graph(st.range(0), 0.004);
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::girth(adj));
  }
}
static void BM_Girth_Reference(benchmark::State& st) {
  auto const adj = st.range(0) == 0 ? apog_m2z4() : random_graph(st.range(0), 0.004);
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::girth(adj));
  }
}
BENCHMARK(BM_Girth_Kernel)->Arg(0)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Girth_Reference)->Arg(0)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_AssociativeTables_Kernel(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::associative_tables(4));
  }
}
static void BM_AssociativeTables_Reference(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(reference::associative_tables(4));
  }
}
BENCHMARK(BM_AssociativeTables_Kernel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativeTables_Reference)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
