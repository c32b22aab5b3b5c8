// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zonoset/affine_set.hpp"
#include "zonoset/symbols.hpp"

namespace zonoset::testing {

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    /// Multiple of 1/2 in [-limit, limit].
    Scalar half_step(int limit = 2);
    /// Nonzero with probability `density`, else zero.
    Scalar coefficient(double density = 0.7);
    /// Rational in [-1, 1] with denominator 8, endpoints included.
    Scalar unit();
    /// Uniform rational in [lo, hi]; each endpoint drawn with probability 1/5.
    Scalar in(const Scalar& lo, const Scalar& hi);

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

std::vector<std::string> var_names(std::size_t p);

/// Random set over x0.. with central symbols 1..n and perturbation symbols 1..m.
PerturbedAffineSet random_set(Gen& g, std::size_t p, std::size_t n, std::size_t m, double density = 0.7);

/// Random shape with p <= 3 and n + m <= budget.
PerturbedAffineSet random_small_set(Gen& g, std::size_t budget = 4);

/// X plus `rows` fresh perturbation rows (so the result is above X).
PerturbedAffineSet add_perturbation_rows(Gen& g, const PerturbedAffineSet& x, std::size_t rows, SymbolRegistry& reg);

/// Registry whose counters are past every index used by random_set.
SymbolRegistry registry_after(std::uint32_t used = 16);

/// Random value in [-1, 1] for every symbol mentioned by X.
std::map<SymbolId, Scalar> random_assignment(Gen& g, const PerturbedAffineSet& x);

/// Concrete point of X under an assignment (missing symbols default to 0).
std::vector<Scalar> evaluate(const PerturbedAffineSet& x, const std::map<SymbolId, Scalar>& e);

} // namespace zonoset::testing
