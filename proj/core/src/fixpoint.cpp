// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/fixpoint.hpp"

#include "zonoset/error.hpp"
#include "zonoset/order.hpp"

namespace zonoset {

void AnalysisConfig::validate() const {
    if (max_iterations == 0) {
        throw Error("max_iterations must be at least 1");
    }
    if (cyclic_unfold == 0) {
        throw Error("cyclic_unfold must be at least 1");
    }
}

bool stop_test(const PerturbedAffineSet& current, const PerturbedAffineSet& next) {
    return axis_leq(next, current) && equiv(current, next);
}

bool inside_box(const PerturbedAffineSet& x, const Interval& box) {
    if (x.is_bottom()) {
        return true;
    }
    if (x.is_top()) {
        return false;
    }
    for (std::size_t k = 0; k < x.dim(); ++k) {
        if (!box.contains(gamma_interval(x, k))) {
            return false;
        }
    }
    return true;
}

namespace {

PerturbedAffineSet extrapolate(const PerturbedAffineSet& x, const PerturbedAffineSet& y, const Interval& box,
                               SymbolRegistry& reg) {
    NablaPolicy policy;
    policy.keep_stable_only = true;
    policy.widen = [&](std::size_t k, const Interval& hull) {
        const Interval old = gamma_interval(x, k);
        Scalar lo = hull.lo();
        Scalar hi = hull.hi();
        if (lo < old.lo()) {
            lo = min(lo, box.lo());
        }
        if (old.hi() < hi) {
            hi = max(hi, box.hi());
        }
        return Interval(lo, hi);
    };
    return nabla_generalized(x, y, reg, policy);
}

} // namespace

KleeneResult kleene_iterate(const Functional& f, const std::vector<std::string>& vars, const AnalysisConfig& config,
                            SymbolRegistry& reg) {
    config.validate();
    KleeneResult r;
    PerturbedAffineSet current = PerturbedAffineSet::bottom(vars);
    r.trace.push_back(current);
    for (std::size_t u = 0; u < config.max_iterations; ++u) {
        const PerturbedAffineSet image = f(current);
        if (image.vars() != vars) {
            throw DimensionError("loop functional changed the variable list");
        }
        PerturbedAffineSet next;
        if (image.is_top() || current.is_top()) {
            next = PerturbedAffineSet::top(vars);
        } else if (current.is_bottom() || image.is_bottom() || u < config.widening_delay) {
            next = join_dispatch(current, image, config.join_mode, reg);
        } else {
            next = extrapolate(current, image, config.box, reg);
        }
        r.iterations = u + 1;
        r.trace.push_back(next);
        if (!inside_box(next, config.box)) {
            r.value = PerturbedAffineSet::top(vars);
            r.escaped = !next.is_special();
            return r;
        }
        if (stop_test(current, next)) {
            r.value = current;
            r.stabilized = true;
            return r;
        }
        current = std::move(next);
    }
    r.value = PerturbedAffineSet::top(vars);
    return r;
}

Block unfold(const StmtPtr& loop, const AnalysisConfig& config) {
    config.validate();
    if (loop == nullptr || loop->kind != Stmt::Kind::While) {
        throw Error("unfold expects a while statement");
    }
    Block out;
    for (std::size_t i = 0; i < config.initial_unfold; ++i) {
        out.push_back(make_if(loop->cond, loop->body, loop->line, loop->label + ".peel" + std::to_string(i + 1)));
    }
    Block body = loop->body;
    for (std::size_t i = 1; i < config.cyclic_unfold; ++i) {
        body.push_back(make_if(loop->cond, loop->body, loop->line, loop->label + ".copy" + std::to_string(i + 1)));
    }
    out.push_back(make_while(loop->cond, std::move(body), loop->line, loop->label));
    return out;
}

} // namespace zonoset
