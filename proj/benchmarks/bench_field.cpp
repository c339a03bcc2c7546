#include <benchmark/benchmark.h>

#include <random>

#include "hurwitz/cyclofield.hpp"

using namespace hurwitz;

namespace {

FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c(ctx.degree());
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return ctx.element(std::move(c));
}

void BM_field_mul(benchmark::State& state) {
  auto ctx = context_for({static_cast<long>(state.range(0))});
  std::mt19937_64 rng(1);
  FieldElement a = random_element(*ctx, rng);
  FieldElement b = random_element(*ctx, rng);
  for (auto _ : state) {
    FieldElement c = a * b;
    benchmark::DoNotOptimize(c);
  }
}

void BM_field_inv(benchmark::State& state) {
  auto ctx = context_for({static_cast<long>(state.range(0))});
  std::mt19937_64 rng(2);
  FieldElement a = ctx->zero();
  while (a.is_zero()) a = random_element(*ctx, rng);
  for (auto _ : state) {
    FieldElement c = a.inv();
    benchmark::DoNotOptimize(c);
  }
}

void BM_field_sign(benchmark::State& state) {
  auto ctx = context_for({static_cast<long>(state.range(0))});
  std::mt19937_64 rng(3);
  FieldElement a = ctx->zero();
  while (a.is_zero()) a = random_element(*ctx, rng);
  for (auto _ : state) {
    int s = a.sign();
    benchmark::DoNotOptimize(s);
  }
}

void BM_context_build(benchmark::State& state) {
  long level = state.range(0);
  for (auto _ : state) {
    auto ctx = context_for({level});
    benchmark::DoNotOptimize(ctx);
  }
}

}  // namespace

BENCHMARK(BM_field_mul)->Arg(5)->Arg(12)->Arg(30);
BENCHMARK(BM_field_inv)->Arg(5)->Arg(12)->Arg(30);
BENCHMARK(BM_field_sign)->Arg(5)->Arg(12)->Arg(30);
BENCHMARK(BM_context_build)->Arg(12)->Arg(30)->Arg(60);
