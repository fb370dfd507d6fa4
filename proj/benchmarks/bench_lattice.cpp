#include <benchmark/benchmark.h>

#include <random>

#include "coincal/cokernel.hpp"
#include "coincal/smith.hpp"

namespace {

coincal::IntMatrix random_matrix(std::mt19937& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    coincal::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

void BM_smith_normal_form(benchmark::State& state) {
    std::mt19937 rng(42);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_matrix(rng, n, 50);
    for (auto _ : state) {
        auto d = coincal::smith_normal_form(a);
        benchmark::DoNotOptimize(d.factors);
    }
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_determinant(benchmark::State& state) {
    std::mt19937 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_matrix(rng, n, 50);
    for (auto _ : state) {
        auto d = coincal::det(a);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_determinant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_cokernel_cardinality(benchmark::State& state) {
    std::mt19937 rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_matrix(rng, n, 9);
    for (auto _ : state) {
        auto c = coincal::cardinality(coincal::cokernel(a));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_cokernel_cardinality)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
