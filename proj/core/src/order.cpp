// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/order.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zonoset/error.hpp"
#include "zonoset/lp.hpp"
#include "zonoset/zonotope2d.hpp"

namespace zonoset {

namespace {

using Vec = std::vector<Scalar>;

void require_compatible(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    if (x.vars() != y.vars()) {
        throw DimensionError("order: operands range over different variable lists");
    }
}

/// One row (a vector in R^p) per symbol of the given kind.
std::vector<Vec> symbol_rows(const PerturbedAffineSet& x, SymbolKind kind) {
    std::map<std::uint32_t, Vec> rows;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        const auto& col = x.columns()[k];
        for (const auto& [s, c] : kind == SymbolKind::Central ? col.central : col.perturbation) {
            auto [it, _] = rows.try_emplace(s, Vec(x.dim()));
            it->second[k] = c;
        }
    }
    std::vector<Vec> out;
    out.reserve(rows.size());
    for (auto& [_, r] : rows) {
        out.push_back(std::move(r));
    }
    return out;
}

/// Rows of C^Y - C^X including the center row; rows that vanish are omitted.
std::vector<Vec> difference_rows(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    const std::size_t p = x.dim();
    std::map<std::uint32_t, Vec> rows;
    Vec center(p);
    for (std::size_t k = 0; k < p; ++k) {
        const auto& cx = x.columns()[k];
        const auto& cy = y.columns()[k];
        center[k] = cy.center - cx.center;
        for (const auto& [s, c] : cy.central) {
            auto [it, _] = rows.try_emplace(s, Vec(p));
            it->second[k] += c;
        }
        for (const auto& [s, c] : cx.central) {
            auto [it, _] = rows.try_emplace(s, Vec(p));
            it->second[k] -= c;
        }
    }
    std::vector<Vec> out;
    auto nonzero = [](const Vec& v) { return std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); }); };
    if (nonzero(center)) {
        out.push_back(std::move(center));
    }
    for (auto& [_, r] : rows) {
        if (nonzero(r)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

Scalar rows_norm(const std::vector<Vec>& rows, std::span<const Scalar> t) {
    Scalar s;
    for (const auto& r : rows) {
        s += dot(r, t).abs();
    }
    return s;
}

struct Hyperplane {
    Vec normal;   // leading nonzero entry is 1
    Scalar weight; // gap contribution is weight * |<normal, t>|
};

std::vector<Hyperplane> merge_hyperplanes(const std::vector<Vec>& plus_rows_a, const std::vector<Vec>& plus_rows_b,
                                          const std::vector<Vec>& minus_rows) {
    std::map<Vec, Scalar> merged;
    auto add = [&](const Vec& r, int w) {
        const auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (lead == r.end()) {
            return;
        }
        const Scalar scale = *lead;
        Vec d;
        d.reserve(r.size());
        for (const auto& v : r) {
            d.push_back(v / scale);
        }
        merged[std::move(d)] += Scalar(w) * scale.abs();
    };
    for (const auto& r : plus_rows_a) {
        add(r, 1);
    }
    for (const auto& r : plus_rows_b) {
        add(r, 1);
    }
    for (const auto& r : minus_rows) {
        add(r, -1);
    }
    std::vector<Hyperplane> out;
    for (auto& [d, w] : merged) {
        if (!w.is_zero()) {
            out.push_back({d, w});
        }
    }
    return out;
}

class CellSearch {
  public:
    CellSearch(std::vector<Hyperplane> planes, std::size_t p, OrderStats& stats)
        : planes_(std::move(planes)), p_(p), signs_(planes_.size(), 0), stats_(stats) {}

    /// A direction where the gap is positive, if any.
    std::optional<Vec> run() { return visit(0, Vec(p_)); }

  private:
    std::optional<Vec> visit(std::size_t depth, const Vec& interior) {
        if (depth == planes_.size()) {
            ++stats_.cells;
            return maximize_on_cell(interior);
        }
        const Scalar side = dot(planes_[depth].normal, interior);
        for (const int sigma : {1, -1}) {
            signs_[depth] = sigma;
            std::optional<Vec> child;
            if (side.sign() == sigma) {
                child = interior;
            } else {
                child = interior_point(depth + 1);
            }
            if (child) {
                if (auto w = visit(depth + 1, *child)) {
                    return w;
                }
            }
        }
        signs_[depth] = 0;
        return std::nullopt;
    }

    void add_box(LpProblem& lp, std::size_t width) const {
        for (std::size_t k = 0; k < p_; ++k) {
            Vec row(width);
            row[k] = Scalar(1);
            lp.constraints.push_back({row, Relation::LessEqual, Scalar(1)});
            lp.constraints.push_back({row, Relation::GreaterEqual, Scalar(-1)});
        }
    }

    /// Strictly interior point of the cone cut out by the first `count` signed hyperplanes.
    std::optional<Vec> interior_point(std::size_t count) {
        const std::size_t width = p_ + 1; // u, then the slack margin s
        LpProblem lp;
        lp.objective.assign(width, Scalar());
        lp.objective[p_] = Scalar(1);
        lp.nonnegative.assign(width, false);
        lp.nonnegative[p_] = true;
        for (std::size_t h = 0; h < count; ++h) {
            Vec row(width);
            for (std::size_t k = 0; k < p_; ++k) {
                row[k] = planes_[h].normal[k] * Scalar(signs_[h]);
            }
            row[p_] = Scalar(-1);
            lp.constraints.push_back({std::move(row), Relation::GreaterEqual, Scalar()});
        }
        add_box(lp, width);
        Vec s_row(width);
        s_row[p_] = Scalar(1);
        lp.constraints.push_back({std::move(s_row), Relation::LessEqual, Scalar(1)});

        ++stats_.lps;
        const auto sol = solve_lp(lp, LpOptions{Scalar()});
        if ((sol.status == LpStatus::TargetReached || sol.status == LpStatus::Optimal) && sol.objective.sign() > 0) {
            return Vec(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(p_));
        }
        return std::nullopt;
    }

    std::optional<Vec> maximize_on_cell(const Vec& interior) {
        Vec g(p_);
        for (std::size_t h = 0; h < planes_.size(); ++h) {
            const Scalar f = planes_[h].weight * Scalar(signs_[h]);
            for (std::size_t k = 0; k < p_; ++k) {
                g[k] += f * planes_[h].normal[k];
            }
        }
        if (dot(g, interior).sign() > 0) {
            return interior;
        }
        LpProblem lp;
        lp.objective = g;
        for (std::size_t h = 0; h < planes_.size(); ++h) {
            Vec row(p_);
            for (std::size_t k = 0; k < p_; ++k) {
                row[k] = planes_[h].normal[k] * Scalar(signs_[h]);
            }
            lp.constraints.push_back({std::move(row), Relation::GreaterEqual, Scalar()});
        }
        add_box(lp, p_);
        ++stats_.lps;
        const auto sol = solve_lp(lp, LpOptions{Scalar()});
        if (sol.status == LpStatus::TargetReached || (sol.status == LpStatus::Optimal && sol.objective.sign() > 0)) {
            return sol.x;
        }
        return std::nullopt;
    }

    std::vector<Hyperplane> planes_;
    std::size_t p_;
    std::vector<int> signs_;
    OrderStats& stats_;
};

Interval support_2d(const Zonotope2D& z, const Scalar& tx, const Scalar& ty) {
    const Scalar c = z.center.x * tx + z.center.y * ty;
    Scalar r;
    for (const auto& g : z.generators) {
        r += (g.x * tx + g.y * ty).abs();
    }
    return {c - r, c + r};
}

} // namespace

Scalar order_gap(const PerturbedAffineSet& x, const PerturbedAffineSet& y, std::span<const Scalar> t) {
    require_compatible(x, y);
    if (x.is_special() || y.is_special()) {
        throw DomainError("order_gap of bottom/top");
    }
    if (t.size() != x.dim()) {
        throw DimensionError("order_gap: direction has wrong length");
    }
    return rows_norm(difference_rows(x, y), t) + rows_norm(symbol_rows(x, SymbolKind::Perturbation), t) -
           rows_norm(symbol_rows(y, SymbolKind::Perturbation), t);
}

OrderVerdict leq_exact(const PerturbedAffineSet& x, const PerturbedAffineSet& y, const OrderOptions& options,
                       OrderStats* stats) {
    require_compatible(x, y);
    if (x.is_bottom() || y.is_top()) {
        return {OrderResult::LessOrEqual, std::nullopt, std::nullopt};
    }
    if (x.is_top() || y.is_bottom()) {
        return {OrderResult::NotLessOrEqual, std::nullopt, std::nullopt};
    }

    std::set<std::uint32_t> central;
    for (const auto* v : {&x, &y}) {
        for (const auto s : v->central_symbols()) {
            central.insert(s);
        }
    }
    const std::size_t m = std::max(x.perturbation_symbols().size(), y.perturbation_symbols().size());
    if (central.size() + m > options.symbol_cap) {
        return {OrderResult::Unknown, std::nullopt, std::nullopt};
    }

    OrderStats local;
    OrderStats& st = stats != nullptr ? *stats : local;
    auto planes = merge_hyperplanes(difference_rows(x, y), symbol_rows(x, SymbolKind::Perturbation),
                                    symbol_rows(y, SymbolKind::Perturbation));
    st.hyperplanes = planes.size();
    if (planes.empty()) {
        return {OrderResult::LessOrEqual, std::nullopt, std::nullopt};
    }
    CellSearch search(std::move(planes), x.dim(), st);
    if (auto w = search.run()) {
        Scalar value = order_gap(x, y, *w);
        return {OrderResult::NotLessOrEqual, std::move(w), std::move(value)};
    }
    return {OrderResult::LessOrEqual, std::nullopt, std::nullopt};
}

std::vector<std::vector<Scalar>> default_directions(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    require_compatible(x, y);
    const std::size_t p = x.dim();
    std::set<Vec> dirs;
    auto unit = [p](std::size_t k) {
        Vec v(p);
        v[k] = Scalar(1);
        return v;
    };
    for (std::size_t a = 0; a < p; ++a) {
        dirs.insert(unit(a));
        for (std::size_t b = a + 1; b < p; ++b) {
            for (const int sa : {1, -1}) {
                for (const int sb : {1, -1}) {
                    Vec v(p);
                    v[a] = Scalar(sa);
                    v[b] = Scalar(sb);
                    dirs.insert(v);
                }
            }
        }
    }
    if (!x.is_special() && !y.is_special()) {
        for (auto& r : difference_rows(x, y)) {
            dirs.insert(std::move(r));
        }
        for (const auto* v : {&x, &y}) {
            for (auto& r : symbol_rows(*v, SymbolKind::Perturbation)) {
                dirs.insert(std::move(r));
            }
        }
    }
    return {dirs.begin(), dirs.end()};
}

OrderVerdict leq_sampled(const PerturbedAffineSet& x, const PerturbedAffineSet& y,
                         std::span<const std::vector<Scalar>> directions) {
    require_compatible(x, y);
    if (directions.empty()) {
        throw DomainError("leq_sampled needs at least one direction");
    }
    if (x.is_bottom() || y.is_top()) {
        return {OrderResult::Unknown, std::nullopt, std::nullopt};
    }
    if (x.is_top() || y.is_bottom()) {
        return {OrderResult::NotLessOrEqual, std::nullopt, std::nullopt};
    }
    for (const auto& t : directions) {
        Scalar gap = order_gap(x, y, t);
        if (gap.sign() > 0) {
            return {OrderResult::NotLessOrEqual, t, std::move(gap)};
        }
    }
    return {OrderResult::Unknown, std::nullopt, std::nullopt};
}

OrderVerdict leq_sampled(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    const auto dirs = default_directions(x, y);
    return leq_sampled(x, y, dirs);
}

bool equiv(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    require_compatible(x, y);
    if (x.is_special() || y.is_special()) {
        return x.is_bottom() == y.is_bottom() && x.is_top() == y.is_top();
    }
    for (std::size_t k = 0; k < x.dim(); ++k) {
        const auto& a = x.columns()[k];
        const auto& b = y.columns()[k];
        if (a.center != b.center || a.central != b.central) {
            return false;
        }
    }
    const auto px = materialize(x).perturbation;
    const auto py = materialize(y).perturbation;
    return canonical_generators(px) == canonical_generators(py);
}

bool concretization_leq_2d(const PerturbedAffineSet& x, const PerturbedAffineSet& y, std::size_t k1,
                           std::size_t k2) {
    require_compatible(x, y);
    if (x.dim() < 2) {
        throw DimensionError("concretization_leq_2d needs at least two variables");
    }
    if (x.is_bottom() || y.is_top()) {
        return true;
    }
    if (x.is_top() || y.is_bottom()) {
        return false;
    }
    const Zonotope2D zx = project_2d(x, k1, k2);
    const Zonotope2D zy = project_2d(y, k1, k2);

    // Facet normals of Y's projection; lower-dimensional projections also need their own direction.
    const auto poly = vertices(zy);
    std::vector<std::pair<Scalar, Scalar>> normals;
    if (poly.size() == 1) {
        normals = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    } else {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& a = poly[i];
            const auto& b = poly[(i + 1) % poly.size()];
            const Scalar ex = b.x - a.x;
            const Scalar ey = b.y - a.y;
            normals.emplace_back(ey, -ex);
            if (poly.size() == 2) {
                normals.emplace_back(ex, ey);
            }
        }
    }
    for (const auto& [tx, ty] : normals) {
        if (!support_2d(zy, tx, ty).contains(support_2d(zx, tx, ty))) {
            return false;
        }
    }
    return true;
}

bool axis_leq(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    require_compatible(x, y);
    if (x.is_bottom() || y.is_top()) {
        return true;
    }
    if (x.is_top() || y.is_bottom()) {
        return false;
    }
    for (std::size_t k = 0; k < x.dim(); ++k) {
        if (!gamma_interval(y, k).contains(gamma_interval(x, k))) {
            return false;
        }
    }
    return true;
}

} // namespace zonoset
