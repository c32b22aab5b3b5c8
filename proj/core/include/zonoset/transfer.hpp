// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zonoset/affine_set.hpp"
#include "zonoset/ast.hpp"

namespace zonoset {

// Form-level primitives. Fresh symbols come from `reg`; zero fresh coefficients are not allocated.

/// (a+b)/2 + |b-a|/2 e_new. Throws DomainError when a > b.
AffineForm const_form(const Scalar& a, const Scalar& b, SymbolRegistry& reg);
/// Affine-arithmetic product: linear terms kept, the quadratic central remainder bounded by one fresh
/// central symbol and every term involving perturbations by one fresh perturbation symbol.
AffineForm mul_forms(const AffineForm& x, const AffineForm& y, SymbolRegistry& reg);
/// Square with the nonnegative central remainder recentred: with q = (sum of |central coefficients|)^2,
/// x^2 = c0^2 + q/2 + 2 c0 (central part) + q/2 e_new + r n_new, where
/// r = |P|^2 + 2 (|c0| + |C|) |P| absorbs everything touching perturbations.
AffineForm square_form(const AffineForm& x, SymbolRegistry& reg);

// Assignments. Each appends a column named `target` holding the result; the other columns are
// unchanged. Bottom stays bottom and top stays top.

PerturbedAffineSet assign_const(const PerturbedAffineSet& x, std::string target, const Scalar& a, const Scalar& b,
                                SymbolRegistry& reg);
PerturbedAffineSet assign_add(const PerturbedAffineSet& x, std::string target, std::size_t i, std::size_t j);
PerturbedAffineSet assign_scale(const PerturbedAffineSet& x, std::string target, const Scalar& lambda,
                                std::size_t i);
PerturbedAffineSet assign_mul(const PerturbedAffineSet& x, std::string target, std::size_t i, std::size_t j,
                              SymbolRegistry& reg);
PerturbedAffineSet square_refined(const PerturbedAffineSet& x, std::string target, std::size_t i,
                                  SymbolRegistry& reg);

struct PlanStep {
    enum class Op { Const, Add, Scale, Mul, Square, Copy };
    Op op = Op::Copy;
    /// Operand slots. Slot s < base_columns is a column of the input, otherwise the output of step
    /// s - base_columns.
    std::size_t a = 0;
    std::size_t b = 0;
    /// Const: interval bounds. Scale: lambda in `lo`.
    Scalar lo;
    Scalar hi;
};

struct ExprPlan {
    std::size_t base_columns = 0;
    std::vector<PlanStep> steps;
    /// Always the last step's slot.
    std::size_t result = 0;
    [[nodiscard]] std::string str() const;
};

/// Lowers an expression over the variables `env` to primitive steps. Literal subexpressions are
/// folded, a product of a variable with itself becomes a Square step, and a - b is a + (-1) b.
/// Throws AnalysisError on unbound variables and on calls.
ExprPlan compile_expr(const Expr& expr, const std::vector<std::string>& env);

/// Runs the plan on X and stores the result in `target`: the column is replaced when `target` is
/// already a variable of X and appended otherwise. Temporaries never reach the result.
PerturbedAffineSet eval_plan(const PerturbedAffineSet& x, const ExprPlan& plan, SymbolRegistry& reg,
                             const std::string& target);

} // namespace zonoset
