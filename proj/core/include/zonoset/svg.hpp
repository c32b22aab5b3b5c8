// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

#include "zonoset/affine_set.hpp"

namespace zonoset {

/// SVG drawing of the projection of X onto variables (k1, k2): the zonotope polygon, both axes and
/// a center marker. A single point is drawn as a 1-pixel square.
std::string render_svg(const PerturbedAffineSet& x, std::size_t k1, std::size_t k2);

/// Writes render_svg to `path`; throws Error when the file cannot be written.
void emit_svg(const PerturbedAffineSet& x, std::size_t k1, std::size_t k2, const std::string& path);

} // namespace zonoset
