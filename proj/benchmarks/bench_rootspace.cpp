#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "hurwitz/rootspace.hpp"

using namespace hurwitz;

namespace {

std::unique_ptr<RootSpace> space_for(int which) {
  switch (which) {
    case 0: return std::make_unique<RootSpace>(parse_diagram("rank 2\nm 1 2 4"));
    case 1:
      return std::make_unique<RootSpace>(
          parse_diagram("rank 3\nm 1 2 3\nm 2 3 4"));  // B3
    default:
      return std::make_unique<RootSpace>(parse_diagram("rank 2\nm 1 2 inf"));
  }
}

Word random_word(int rank, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(1, rank);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(letter(rng));
  return w;
}

void BM_length(benchmark::State& state) {
  auto space = space_for(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(7);
  Matrix g = space->element_of_word(random_word(space->rank(), 12, rng));
  for (auto _ : state) {
    int len = space->length(g);
    benchmark::DoNotOptimize(len);
  }
}

void BM_reflection_of_word(benchmark::State& state) {
  auto space = space_for(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(8);
  Word u = random_word(space->rank(), 4, rng);
  Word w = u;
  w.push_back(1);
  for (auto it = u.rbegin(); it != u.rend(); ++it) w.push_back(*it);
  for (auto _ : state) {
    Reflection t = space->reflection_of_word(w);
    benchmark::DoNotOptimize(t);
  }
}

void BM_class_witness(benchmark::State& state) {
  auto space = space_for(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(9);
  Word u = random_word(space->rank(), 5, rng);
  Word w = u;
  w.push_back(space->rank());
  for (auto it = u.rbegin(); it != u.rend(); ++it) w.push_back(*it);
  Reflection t = space->reflection_of_word(w);
  for (auto _ : state) {
    auto witness = space->class_witness(t);
    benchmark::DoNotOptimize(witness);
  }
}

}  // namespace

BENCHMARK(BM_length)->Arg(0)->Arg(1)->Arg(2);
BENCHMARK(BM_reflection_of_word)->Arg(0)->Arg(1)->Arg(2);
BENCHMARK(BM_class_witness)->Arg(0)->Arg(1)->Arg(2);
