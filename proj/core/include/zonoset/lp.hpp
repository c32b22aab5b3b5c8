// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zonoset/rational.hpp"

namespace zonoset {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LpConstraint {
    std::vector<Scalar> coeffs;
    Relation relation = Relation::LessEqual;
    Scalar bound;
};

/// maximize <objective, x> subject to the constraints. Variables are free unless flagged in
/// `nonnegative` (which, when non-empty, has one entry per variable).
struct LpProblem {
    std::vector<Scalar> objective;
    std::vector<LpConstraint> constraints;
    std::vector<bool> nonnegative;
};

enum class LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// A feasible point whose objective strictly exceeds LpOptions::target was found; the
    /// search stopped there.
    TargetReached,
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Scalar> x;
    Scalar objective;
    std::size_t pivots = 0;
};

struct LpOptions {
    std::optional<Scalar> target;
};

/// Exact two-phase primal simplex on a dense tableau with Bland's anti-cycling rule.
/// Returned points satisfy every constraint exactly.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

} // namespace zonoset
