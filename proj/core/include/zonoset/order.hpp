// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zonoset/affine_set.hpp"

namespace zonoset {

enum class OrderResult { LessOrEqual, NotLessOrEqual, Unknown };

/// Outcome of an order query. A NotLessOrEqual verdict between two non-special values carries a
/// direction t with order_gap(X, Y, t) > 0 and that gap value.
struct OrderVerdict {
    OrderResult result = OrderResult::Unknown;
    std::optional<std::vector<Scalar>> witness;
    std::optional<Scalar> witness_value;

    [[nodiscard]] bool holds() const { return result == OrderResult::LessOrEqual; }
};

struct OrderOptions {
    /// leq_exact answers Unknown when (#central symbols) + (#perturbation rows) exceeds this.
    std::size_t symbol_cap = 12;
};

struct OrderStats {
    std::size_t hyperplanes = 0;
    std::size_t cells = 0;
    std::size_t lps = 0;
};

/// |(C^Y - C^X) t|_1 + |P^X t|_1 - |P^Y t|_1. X <= Y iff this is <= 0 for every t.
Scalar order_gap(const PerturbedAffineSet& x, const PerturbedAffineSet& y, std::span<const Scalar> t);

/// Exact decision of X <= Y.
///
/// The gap is piecewise linear in t, with pieces bounded by the hyperplanes orthogonal to the rows
/// of C^Y - C^X, P^X and P^Y. For every sign pattern of those rows, the gap is maximized by a
/// linear program over the matching cone intersected with the unit box (the gap is positively
/// homogeneous, so the box loses nothing). Parallel rows are merged into one hyperplane first, and
/// sign patterns are enumerated depth-first, pruning patterns whose cone has empty interior
/// (their programs are dominated by the full-dimensional neighbours).
OrderVerdict leq_exact(const PerturbedAffineSet& x, const PerturbedAffineSet& y, const OrderOptions& options = {},
                       OrderStats* stats = nullptr);

/// Axis vectors, +-pairwise sums and differences of axes, and the rows of C^Y - C^X, P^X and P^Y.
std::vector<std::vector<Scalar>> default_directions(const PerturbedAffineSet& x, const PerturbedAffineSet& y);

/// Necessary-condition filter: NotLessOrEqual on the first direction with a positive gap,
/// Unknown otherwise. Never answers LessOrEqual.
OrderVerdict leq_sampled(const PerturbedAffineSet& x, const PerturbedAffineSet& y,
                         std::span<const std::vector<Scalar>> directions);
OrderVerdict leq_sampled(const PerturbedAffineSet& x, const PerturbedAffineSet& y);

/// X ~ Y: identical central parts and the same perturbation zonotope.
bool equiv(const PerturbedAffineSet& x, const PerturbedAffineSet& y);

/// Inclusion of the projections of the concretizations onto variables (k1, k2).
bool concretization_leq_2d(const PerturbedAffineSet& x, const PerturbedAffineSet& y, std::size_t k1,
                           std::size_t k2);

/// Per-axis inclusion of the interval concretizations.
bool axis_leq(const PerturbedAffineSet& x, const PerturbedAffineSet& y);

} // namespace zonoset
