// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "zonoset/analyzer.hpp"
#include "zonoset/join.hpp"
#include "zonoset/order.hpp"
#include "zonoset/parser.hpp"

using namespace zonoset;

namespace {

/// p variables over n central symbols and m perturbation symbols, small integer coefficients.
PerturbedAffineSet random_set(std::mt19937_64& rng, std::size_t p, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<std::string> vars;
    std::vector<AffineForm> cols;
    for (std::size_t k = 0; k < p; ++k) {
        vars.push_back("v" + std::to_string(k));
        AffineForm f = AffineForm::constant(Scalar(coeff(rng)));
        for (std::uint32_t i = 1; i <= n; ++i) {
            f.set({SymbolKind::Central, i}, Scalar(coeff(rng)));
        }
        for (std::uint32_t j = 1; j <= m; ++j) {
            f.set({SymbolKind::Perturbation, j}, Scalar(coeff(rng)));
        }
        cols.push_back(std::move(f));
    }
    return {std::move(vars), std::move(cols)};
}

void BM_LeqExact(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_set(rng, 3, n, 2);
    const auto y = random_set(rng, 3, n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(leq_exact(x, y));
    }
}
BENCHMARK(BM_LeqExact)->DenseRange(1, 5);

void BM_Joins(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto x = random_set(rng, 3, 4, 2);
    const auto y = random_set(rng, 3, 4, 2);
    const bool mub = state.range(0) == 0;
    for (auto _ : state) {
        SymbolRegistry reg;
        benchmark::DoNotOptimize(mub ? mub_join(x, y, reg) : nabla_join(x, y, reg));
    }
}
BENCHMARK(BM_Joins)->Arg(0)->Arg(1);

void BM_Analyze(benchmark::State& state) {
    const Program p = parse(R"(float main() {
  float x in [1, 2], s = 0;
  while (*) { s = 0.5 * s + x * x; }
  return s;
})");
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(p));
    }
}
BENCHMARK(BM_Analyze);

} // namespace

BENCHMARK_MAIN();
