// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zonoset/affine_set.hpp"
#include "zonoset/ast.hpp"
#include "zonoset/fixpoint.hpp"

namespace zonoset {

struct VarReport {
    std::string name;
    Interval interval;
    /// The point is top: `interval` is the box.
    bool unbounded = false;
    Scalar center;
    CoeffMap central;
    CoeffMap perturbation;
};

struct PointReport {
    std::string label;
    bool bottom = false;
    bool top = false;
    std::vector<VarReport> vars;
    /// Abstract value over the reported variables, in the order of `vars`.
    PerturbedAffineSet value;

    [[nodiscard]] const VarReport* find(const std::string& name) const;
};

struct Sensitivity {
    std::string label;
    std::string var;
    /// Central symbols by decreasing |coefficient| (ties by index).
    std::vector<std::pair<std::uint32_t, Scalar>> ranking;
};

struct AnalysisStatus {
    bool stabilized = true;
    bool top = false;
    std::size_t loops = 0;
    std::size_t iterations = 0;
    std::size_t postfix_verified = 0;
    std::size_t postfix_unknown = 0;
    std::size_t postfix_failed = 0;
};

struct Report {
    std::vector<PointReport> points;
    std::vector<Sensitivity> sensitivity;
    AnalysisStatus status;
    /// Central symbols created by interval declarations, with the declared variable.
    std::map<std::uint32_t, std::string> inputs;

    [[nodiscard]] const PointReport* find(const std::string& label) const;
};

/// Builds the report entry of one variable from a value (bottom/top handled).
VarReport describe_var(const PerturbedAffineSet& x, std::size_t k, const Interval& box);

/// Forward analysis of `main`. Statements are recorded under their labels as the state after the
/// statement; the last point, "return", holds main's variables and `ret`. Inlined callee points are
/// prefixed with the call site, e.g. "L3#1/f:L9". Throws AnalysisError on reads of uninitialized or
/// undeclared variables.
Report analyze(const Program& program, const AnalysisConfig& config = {});

} // namespace zonoset
