// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/join.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

void require_joinable(const PerturbedAffineSet& x, const PerturbedAffineSet& y) {
    if (x.vars() != y.vars()) {
        throw DimensionError("join of values over different variable lists");
    }
}

void require_regular(const PerturbedAffineSet& x, const PerturbedAffineSet& y, const char* what) {
    if (x.is_special() || y.is_special()) {
        throw DomainError(std::string(what) + " of bottom/top; use join_dispatch");
    }
}

std::set<std::uint32_t> union_keys(const CoeffMap& a, const CoeffMap& b) {
    std::set<std::uint32_t> keys;
    for (const auto& [s, _] : a) {
        keys.insert(s);
    }
    for (const auto& [s, _] : b) {
        keys.insert(s);
    }
    return keys;
}

Scalar lookup(const CoeffMap& m, std::uint32_t s) {
    const auto it = m.find(s);
    return it == m.end() ? Scalar() : it->second;
}

} // namespace

Scalar argmin_interval(const Scalar& a, const Scalar& b) {
    if (a.sign() * b.sign() <= 0) {
        return Scalar();
    }
    return a.abs() <= b.abs() ? a : b;
}

PerturbedAffineSet mub_join(const PerturbedAffineSet& x, const PerturbedAffineSet& y, SymbolRegistry& reg) {
    require_joinable(x, y);
    require_regular(x, y, "mub_join");
    const std::size_t p = x.dim();
    const bool same_perturbation =
        canonical_generators(materialize(x).perturbation) == canonical_generators(materialize(y).perturbation);

    std::vector<AffineForm> cols(p);
    for (std::size_t k = 0; k < p; ++k) {
        const auto& a = x.columns()[k];
        const auto& b = y.columns()[k];
        cols[k].center = (a.center + b.center) / Scalar(2);
        for (const auto s : union_keys(a.central, b.central)) {
            cols[k].set({SymbolKind::Central, s}, (lookup(a.central, s) + lookup(b.central, s)) / Scalar(2));
        }
        cols[k].perturbation = a.perturbation;
    }
    if (!same_perturbation) {
        std::map<std::uint32_t, SymbolId> renamed;
        for (const auto s : y.perturbation_symbols()) {
            renamed.emplace(s, reg.fresh(SymbolKind::Perturbation));
        }
        for (std::size_t k = 0; k < p; ++k) {
            for (const auto& [s, c] : y.columns()[k].perturbation) {
                cols[k].set(renamed.at(s), c);
            }
        }
    }

    // Half differences of the central rows, center row first.
    auto spread = [&](auto&& value_of) {
        std::vector<Scalar> row(p);
        bool nonzero = false;
        for (std::size_t k = 0; k < p; ++k) {
            row[k] = value_of(k) / Scalar(2);
            nonzero = nonzero || !row[k].is_zero();
        }
        if (!nonzero) {
            return;
        }
        const SymbolId eta = reg.fresh(SymbolKind::Perturbation);
        for (std::size_t k = 0; k < p; ++k) {
            cols[k].set(eta, row[k]);
        }
    };
    spread([&](std::size_t k) { return y.columns()[k].center - x.columns()[k].center; });
    std::set<std::uint32_t> central;
    for (const auto* v : {&x, &y}) {
        for (const auto s : v->central_symbols()) {
            central.insert(s);
        }
    }
    for (const auto s : central) {
        spread([&](std::size_t k) { return lookup(y.columns()[k].central, s) - lookup(x.columns()[k].central, s); });
    }
    return {x.vars(), std::move(cols)};
}

PerturbedAffineSet nabla_generalized(const PerturbedAffineSet& x, const PerturbedAffineSet& y, SymbolRegistry& reg,
                                     const NablaPolicy& policy) {
    require_joinable(x, y);
    require_regular(x, y, "nabla_join");
    const std::size_t p = x.dim();
    std::vector<AffineForm> cols(p);
    std::vector<Scalar> slack(p);
    for (std::size_t k = 0; k < p; ++k) {
        const auto& a = x.columns()[k];
        const auto& b = y.columns()[k];
        Interval hull = a.interval().hull(b.interval());
        if (policy.widen) {
            const Interval wide = policy.widen(k, hull);
            if (!wide.contains(hull)) {
                throw DomainError("nabla widening must contain the hull");
            }
            hull = wide;
        }
        AffineForm& z = cols[k];
        z.center = hull.mid();
        auto merge = [&](const CoeffMap& ma, const CoeffMap& mb, SymbolKind kind) {
            for (const auto s : union_keys(ma, mb)) {
                const Scalar ca = lookup(ma, s);
                Scalar c = argmin_interval(ca, lookup(mb, s));
                if (policy.keep_stable_only && c != ca) {
                    c = Scalar();
                }
                z.set({kind, s}, c);
            }
        };
        merge(a.central, b.central, SymbolKind::Central);
        merge(a.perturbation, b.perturbation, SymbolKind::Perturbation);
        slack[k] = hull.radius() - z.radius();
    }
    for (std::size_t k = 0; k < p; ++k) {
        if (!slack[k].is_zero()) {
            cols[k].set(reg.fresh(SymbolKind::Perturbation), slack[k]);
        }
    }
    return {x.vars(), std::move(cols)};
}

PerturbedAffineSet nabla_join(const PerturbedAffineSet& x, const PerturbedAffineSet& y, SymbolRegistry& reg) {
    return nabla_generalized(x, y, reg, {});
}

JoinMode parse_join_mode(std::string_view text) {
    if (text == "mub") {
        return JoinMode::Mub;
    }
    if (text == "nabla") {
        return JoinMode::Nabla;
    }
    throw Error("unknown join mode '" + std::string(text) + "' (expected mub or nabla)");
}

std::string_view to_string(JoinMode mode) { return mode == JoinMode::Mub ? "mub" : "nabla"; }

PerturbedAffineSet join_dispatch(const PerturbedAffineSet& x, const PerturbedAffineSet& y, JoinMode mode,
                                 SymbolRegistry& reg) {
    require_joinable(x, y);
    if (x.is_top() || y.is_top()) {
        return PerturbedAffineSet::top(x.vars());
    }
    if (x.is_bottom()) {
        return y;
    }
    if (y.is_bottom()) {
        return x;
    }
    return mode == JoinMode::Mub ? mub_join(x, y, reg) : nabla_join(x, y, reg);
}

} // namespace zonoset
