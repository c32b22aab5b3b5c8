// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "zonoset/analyzer.hpp"

namespace zonoset {

enum class ReportFormat { Text, Json, Csv };

/// "text", "json" or "csv"; throws Error otherwise.
ReportFormat parse_report_format(std::string_view text);

/// Text: one block per point with `name ∈ [lo, hi]` lines and the affine forms.
/// Json: {"points": [{"label", "vars": {name: {"interval", "center", "central", "perturbation"}}}],
///        "sensitivity", "inputs", "status"}; rationals are "num/den" strings with a
///        "decimal" companion.
/// Csv: header `point,var,lo,hi` and one row per variable and point.
std::string emit_report(const Report& report, ReportFormat format);

/// Reads back the json rendering. Abstract values of points are rebuilt from the coefficients.
Report parse_report_json(std::string_view json);

} // namespace zonoset
