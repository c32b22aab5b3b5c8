// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zonoset/affine_set.hpp"

namespace zonoset {

struct Point2 {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Planar zonotope: center + sum of s_i * g_i with s_i in [-1, 1].
struct Zonotope2D {
    Point2 center;
    std::vector<Point2> generators;
};

/// Projection of the full concretization (central and perturbation terms) onto two variables.
Zonotope2D project_2d(const PerturbedAffineSet& x, std::size_t k1, std::size_t k2);

/// Vertices of the zonotope in counter-clockwise order, starting from center - sum of the
/// generators once each has been flipped into the upper half-plane. Parallel generators are
/// merged, so no three consecutive vertices are collinear. A zonotope without generators yields
/// its center; a single generator direction yields the two segment endpoints.
std::vector<Point2> vertices(const Zonotope2D& z);

} // namespace zonoset
