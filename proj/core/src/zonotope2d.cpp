// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/zonotope2d.hpp"

#include <algorithm>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

Point2 upper_half(const Point2& g) {
    if (g.y.sign() < 0 || (g.y.is_zero() && g.x.sign() < 0)) {
        return {-g.x, -g.y};
    }
    return g;
}

Scalar cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

} // namespace

Zonotope2D project_2d(const PerturbedAffineSet& x, std::size_t k1, std::size_t k2) {
    if (k1 == k2) {
        throw DimensionError("project_2d needs two distinct variables");
    }
    const auto& a = x.column(k1);
    const auto& b = x.column(k2);
    Zonotope2D z{{a.center, b.center}, {}};
    auto collect = [&](const CoeffMap& ma, const CoeffMap& mb) {
        std::map<std::uint32_t, Point2> gens;
        for (const auto& [i, c] : ma) {
            gens[i].x = c;
        }
        for (const auto& [i, c] : mb) {
            gens[i].y = c;
        }
        for (auto& [_, g] : gens) {
            z.generators.push_back(g);
        }
    };
    collect(a.central, b.central);
    collect(a.perturbation, b.perturbation);
    return z;
}

std::vector<Point2> vertices(const Zonotope2D& z) {
    // Merge parallel generators after flipping into the upper half-plane (angle in [0, pi)).
    std::vector<Point2> gens;
    for (const auto& g0 : z.generators) {
        if (g0.x.is_zero() && g0.y.is_zero()) {
            continue;
        }
        const Point2 g = upper_half(g0);
        auto same = std::find_if(gens.begin(), gens.end(), [&](const Point2& h) { return cross(g, h).is_zero(); });
        if (same != gens.end()) {
            same->x += g.x;
            same->y += g.y;
        } else {
            gens.push_back(g);
        }
    }
    if (gens.empty()) {
        return {z.center};
    }
    // Angle order within the upper half-plane: a before b iff cross(a, b) > 0.
    std::sort(gens.begin(), gens.end(), [](const Point2& a, const Point2& b) { return cross(a, b).sign() > 0; });

    Point2 v = z.center;
    for (const auto& g : gens) {
        v.x -= g.x;
        v.y -= g.y;
    }
    std::vector<Point2> out;
    out.reserve(2 * gens.size());
    for (const auto& g : gens) {
        out.push_back(v);
        v.x += Scalar(2) * g.x;
        v.y += Scalar(2) * g.y;
    }
    for (const auto& g : gens) {
        out.push_back(v);
        v.x -= Scalar(2) * g.x;
        v.y -= Scalar(2) * g.y;
    }
    return out;
}

} // namespace zonoset
