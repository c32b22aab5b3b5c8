// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zonoset/affine_set.hpp"
#include "zonoset/ast.hpp"
#include "zonoset/join.hpp"

namespace zonoset {

struct AnalysisConfig {
    /// Bounding box applied to every variable; leaving it turns a loop invariant into top.
    Interval box{Scalar(-1000000), Scalar(1000000)};
    std::size_t max_iterations = 100;
    JoinMode join_mode = JoinMode::Nabla;
    std::size_t initial_unfold = 0;
    std::size_t cyclic_unfold = 1;
    /// Iterations joined with `join_mode` before switching to extrapolation: coefficients that
    /// moved are dropped and bounds that grew jump to the box.
    std::size_t widening_delay = 3;
    /// Symbol cap for leq_exact checks of the result.
    std::size_t order_cap = 12;
    /// Run leq_exact(F(V), V) on stabilized loop invariants.
    bool verify_postfix = true;

    /// Throws Error when K = 0 or cyclic_unfold = 0.
    void validate() const;
};

using Functional = std::function<PerturbedAffineSet(const PerturbedAffineSet&)>;

struct KleeneResult {
    /// The invariant, or top.
    PerturbedAffineSet value;
    bool stabilized = false;
    /// Top was returned because some variable left the box.
    bool escaped = false;
    std::size_t iterations = 0;
    /// X_0 = bottom, X_1, ... up to the last computed iterate.
    std::vector<PerturbedAffineSet> trace;
};

/// Two-stage stopping test: per-axis inclusion of `next` in `current`, then equivalence.
bool stop_test(const PerturbedAffineSet& current, const PerturbedAffineSet& next);

/// True when every axis of a regular X lies inside the box (bottom: true, top: false).
bool inside_box(const PerturbedAffineSet& x, const Interval& box);

/// X_0 = bottom, X_{u+1} = X_u join F(X_u), until stop_test(X_u, X_{u+1}) holds; the result is then
/// X_u, which satisfies F(X_u) <= X_u. Top when an iterate leaves the box or after K iterations.
KleeneResult kleene_iterate(const Functional& f, const std::vector<std::string>& vars, const AnalysisConfig& config,
                            SymbolRegistry& reg);

/// `initial_unfold` guarded copies of the body (`if (g) S`) followed by the loop whose body is S
/// then `cyclic_unfold - 1` guarded copies. Returns the replacement statements.
Block unfold(const StmtPtr& loop, const AnalysisConfig& config);

} // namespace zonoset
