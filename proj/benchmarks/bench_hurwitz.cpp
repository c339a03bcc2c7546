#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "hurwitz/connect.hpp"

using namespace hurwitz;

namespace {

Factorization seed_factorization(const RootSpace& space, int pairs) {
  std::vector<Reflection> factors;
  for (int i = 1; i <= space.rank(); ++i) factors.push_back(space.simple(i));
  for (int j = 0; j < pairs; ++j) {
    int q = 1 + j % space.rank();
    factors.push_back(space.simple(q));
    factors.push_back(space.simple(q));
  }
  return Factorization(space, std::move(factors));
}

Factorization scrambled(const Factorization& f, int moves, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pos(1, f.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Factorization cur = f;
  for (int i = 0; i < moves; ++i)
    cur = apply_generator(cur, pos(rng), coin(rng) ? 1 : -1);
  return cur;
}

void BM_orbit_bfs_I26_len4(benchmark::State& state) {
  RootSpace space(parse_diagram("rank 2\nm 1 2 6"));
  Factorization f = seed_factorization(space, 1);
  for (auto _ : state) {
    OrbitResult orbit = orbit_bfs(f, 1 << 20, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(orbit);
  }
}

void BM_normalize_I2inf(benchmark::State& state) {
  RootSpace space(parse_diagram("rank 2\nm 1 2 inf"));
  Factorization f = scrambled(seed_factorization(space, 2), 14, 3);
  for (auto _ : state) {
    NormalForm nf = normalize(f);
    benchmark::DoNotOptimize(nf);
  }
}

void BM_connect_A3(benchmark::State& state) {
  RootSpace space(parse_diagram("rank 3\nm 1 2 3\nm 2 3 3"));
  ClassLabeling lab = odd_components(space.diagram());
  CoxeterWord cw = coxeter_word(space.diagram(), {1, 2, 3});
  Factorization seed = seed_factorization(space, 1);
  Factorization f = scrambled(seed, 12, 5);
  Factorization g = scrambled(seed, 12, 6);
  for (auto _ : state) {
    Decision d = connect(f, g, cw, lab);
    benchmark::DoNotOptimize(d);
  }
}

}  // namespace

BENCHMARK(BM_orbit_bfs_I26_len4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_normalize_I2inf)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_connect_A3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
