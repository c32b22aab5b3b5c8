// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string_view>

#include "zonoset/affine_set.hpp"

namespace zonoset {

/// Element of least magnitude in the interval spanned by a and b: 0 when they differ in sign or
/// either is 0, else whichever of a, b is closer to 0.
Scalar argmin_interval(const Scalar& a, const Scalar& b);

/// Minimal upper bound when X and Y share their perturbation zonotope: the midpoint of the central
/// parts, plus half of every row of C^Y - C^X (center row first) on a fresh perturbation symbol,
/// stacked on P^X. Otherwise both sides are first given the perturbation rows of both operands,
/// with Y's rows renamed to fresh symbols; the result is then an upper bound but not necessarily
/// minimal. Throws DomainError on bottom/top and DimensionError on differing variable lists.
PerturbedAffineSet mub_join(const PerturbedAffineSet& x, const PerturbedAffineSet& y, SymbolRegistry& reg);

/// Per-axis optimal upper bound: each center is the midpoint of the interval hull, each coefficient
/// is argmin_interval of the operand coefficients, and one fresh perturbation symbol per variable
/// restores the hull exactly.
PerturbedAffineSet nabla_join(const PerturbedAffineSet& x, const PerturbedAffineSet& y, SymbolRegistry& reg);

/// Tuning of nabla_generalized. Results stay upper bounds of both operands for any policy.
struct NablaPolicy {
    /// Replaces the per-axis hull with a wider interval (called with the variable index and hull).
    std::function<Interval(std::size_t, const Interval&)> widen;
    /// Keeps a coefficient only where the argmin equals X's coefficient; others become 0.
    bool keep_stable_only = false;
};

PerturbedAffineSet nabla_generalized(const PerturbedAffineSet& x, const PerturbedAffineSet& y, SymbolRegistry& reg,
                                     const NablaPolicy& policy);

enum class JoinMode { Mub, Nabla };

/// "mub" or "nabla"; throws Error otherwise.
JoinMode parse_join_mode(std::string_view text);
std::string_view to_string(JoinMode mode);

/// Bottom is neutral, top absorbing; otherwise mub_join or nabla_join.
PerturbedAffineSet join_dispatch(const PerturbedAffineSet& x, const PerturbedAffineSet& y, JoinMode mode,
                                 SymbolRegistry& reg);

} // namespace zonoset
