// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/analyzer.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "zonoset/error.hpp"
#include "zonoset/join.hpp"
#include "zonoset/order.hpp"
#include "zonoset/transfer.hpp"

namespace zonoset {

const VarReport* PointReport::find(const std::string& name) const {
    const auto it = std::find_if(vars.begin(), vars.end(), [&](const VarReport& v) { return v.name == name; });
    return it == vars.end() ? nullptr : &*it;
}

const PointReport* Report::find(const std::string& label) const {
    const auto it = std::find_if(points.begin(), points.end(), [&](const PointReport& p) { return p.label == label; });
    return it == points.end() ? nullptr : &*it;
}

VarReport describe_var(const PerturbedAffineSet& x, std::size_t k, const Interval& box) {
    if (x.is_bottom()) {
        throw DomainError("bottom has no variable ranges");
    }
    VarReport v;
    v.name = x.vars().at(k);
    if (x.is_top()) {
        v.interval = box;
        v.unbounded = true;
        v.center = box.mid();
        return v;
    }
    const AffineForm& f = x.column(k);
    v.interval = gamma_interval(x, k);
    v.center = f.center;
    v.central = f.central;
    v.perturbation = f.perturbation;
    return v;
}

namespace {

using Binding = std::pair<std::string, std::string>; // source name, column

struct Frame {
    std::string function;
    std::string prefix;
    std::vector<std::vector<Binding>> scopes;
};

std::string where(const Expr& e) { return std::to_string(e.line) + ":" + std::to_string(e.column) + ": "; }

PerturbedAffineSet project(const PerturbedAffineSet& x, const std::vector<std::string>& names) {
    std::vector<std::size_t> keep;
    keep.reserve(names.size());
    for (const auto& n : names) {
        const auto k = x.index_of(n);
        if (!k) {
            throw DimensionError("projection onto missing variable '" + n + "'");
        }
        keep.push_back(*k);
    }
    return x.select(keep);
}

PerturbedAffineSet without(const PerturbedAffineSet& x, const std::vector<std::string>& drop) {
    std::vector<std::string> keep;
    for (const auto& n : x.vars()) {
        if (std::find(drop.begin(), drop.end(), n) == drop.end()) {
            keep.push_back(n);
        }
    }
    return project(x, keep);
}

PerturbedAffineSet relabel(const PerturbedAffineSet& x, std::vector<std::string> names) {
    if (x.is_bottom()) {
        return PerturbedAffineSet::bottom(std::move(names));
    }
    if (x.is_top()) {
        return PerturbedAffineSet::top(std::move(names));
    }
    return {std::move(names), x.columns()};
}

class Engine {
  public:
    Engine(const Program& program, const AnalysisConfig& config) : program_(program), config_(config) {}

    Report run() {
        config_.validate();
        const Function* main = program_.find("main");
        if (main == nullptr) {
            throw AnalysisError("no main");
        }
        Frame frame{"main", "", {{}}};
        frames_.push_back(&frame);
        PerturbedAffineSet x(std::vector<std::string>{}, std::vector<AffineForm>{});
        x = run_body(*main, x, frame);
        const Stmt& ret = *main->body.back();
        std::vector<std::string> temps;
        std::size_t calls = 0;
        const ExprPtr e = lower(ret.expr, x, frame, ret.label, temps, calls);
        const std::string col = fresh_column("ret", x);
        x = without(assign(x, e, col), temps);
        record("return", x, frame, Binding{"ret", col});
        frames_.pop_back();
        report_.status.top = x.is_top();
        if (x.is_top()) {
            report_.status.stabilized = false;
        }
        return std::move(report_);
    }

  private:
    PerturbedAffineSet run_body(const Function& f, PerturbedAffineSet x, Frame& frame) {
        for (std::size_t i = 0; i + 1 < f.body.size(); ++i) {
            x = exec(*f.body[i], std::move(x), frame);
        }
        return x;
    }

    bool taken(const std::string& name, const PerturbedAffineSet& x) const {
        if (x.index_of(name)) {
            return true;
        }
        for (const Frame* f : frames_) {
            for (const auto& scope : f->scopes) {
                for (const auto& [_, col] : scope) {
                    if (col == name) {
                        return true;
                    }
                }
            }
        }
        return false;
    }

    std::string fresh_column(const std::string& base, const PerturbedAffineSet& x) const {
        if (!taken(base, x)) {
            return base;
        }
        for (std::size_t n = 2;; ++n) {
            std::string candidate = base + "'" + std::to_string(n);
            if (!taken(candidate, x)) {
                return candidate;
            }
        }
    }

    static const std::string* resolve(const std::string& name, const Frame& frame) {
        for (auto s = frame.scopes.rbegin(); s != frame.scopes.rend(); ++s) {
            for (auto b = s->rbegin(); b != s->rend(); ++b) {
                if (b->first == name) {
                    return &b->second;
                }
            }
        }
        return nullptr;
    }

    /// Rewrites source names to columns and replaces calls by temporaries holding their results.
    /// Calls are numbered from 1 in evaluation order within the statement `site`.
    ExprPtr lower(const ExprPtr& e, PerturbedAffineSet& x, Frame& frame, const std::string& site,
                  std::vector<std::string>& temps, std::size_t& calls) {
        switch (e->kind) {
        case Expr::Kind::Const:
        case Expr::Kind::Range:
            return e;
        case Expr::Kind::Var: {
            const std::string* col = resolve(e->name, frame);
            if (col == nullptr) {
                throw AnalysisError(where(*e) + "undeclared variable '" + e->name + "'");
            }
            if (!x.index_of(*col)) {
                throw AnalysisError(where(*e) + "read of uninitialized variable '" + e->name + "'");
            }
            return Expr::var(*col);
        }
        case Expr::Kind::Call: {
            std::vector<ExprPtr> args;
            for (const auto& a : e->args) {
                args.push_back(lower(a, x, frame, site, temps, calls));
            }
            const std::string tmp = fresh_column("$t" + std::to_string(++temp_counter_), x);
            const std::size_t index = ++calls;
            x = inline_call(x, *program_.find(e->name), args, tmp, frame,
                            frame.prefix + site + "#" + std::to_string(index));
            temps.push_back(tmp);
            return Expr::var(tmp);
        }
        default: {
            auto copy = std::make_shared<Expr>(*e);
            for (auto& a : copy->args) {
                a = lower(a, x, frame, site, temps, calls);
            }
            return copy;
        }
        }
    }

    PerturbedAffineSet assign(const PerturbedAffineSet& x, const ExprPtr& e, const std::string& col) {
        const ExprPlan plan = compile_expr(*e, x.vars());
        return eval_plan(x, plan, reg_, col);
    }

    PerturbedAffineSet inline_call(PerturbedAffineSet x, const Function& f, const std::vector<ExprPtr>& args,
                                   const std::string& result, const Frame& caller, const std::string& site) {
        (void)caller;
        const std::vector<std::string> before = x.vars();
        Frame frame{f.name, site + "/" + f.name + ":", {{}}};
        std::vector<Binding> params;
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            const std::string col = fresh_column(f.name + "." + f.params[i], x);
            x = assign(x, args[i], col);
            params.emplace_back(f.params[i], col);
        }
        frame.scopes[0] = std::move(params);
        frames_.push_back(&frame);
        x = run_body(f, std::move(x), frame);
        const Stmt& ret = *f.body.back();
        std::vector<std::string> temps;
        std::size_t calls = 0;
        const ExprPtr e = lower(ret.expr, x, frame, ret.label, temps, calls);
        x = without(assign(x, e, result), temps);
        record(frame.prefix + ret.label, x, frame, Binding{"ret", result});
        frames_.pop_back();
        std::vector<std::string> keep = before;
        keep.push_back(result);
        return project(x, keep);
    }

    PerturbedAffineSet exec_block(const Block& b, PerturbedAffineSet x, Frame& frame) {
        frame.scopes.emplace_back();
        for (const auto& s : b) {
            x = exec(*s, std::move(x), frame);
        }
        std::vector<std::string> locals;
        for (const auto& [_, col] : frame.scopes.back()) {
            if (x.index_of(col)) {
                locals.push_back(col);
            }
        }
        frame.scopes.pop_back();
        return without(x, locals);
    }

    PerturbedAffineSet join_aligned(const PerturbedAffineSet& a, const PerturbedAffineSet& b) {
        std::vector<std::string> common;
        for (const auto& n : a.vars()) {
            if (b.index_of(n)) {
                common.push_back(n);
            }
        }
        return join_dispatch(project(a, common), project(b, common), config_.join_mode, reg_);
    }

    PerturbedAffineSet exec(const Stmt& s, PerturbedAffineSet x, Frame& frame) {
        switch (s.kind) {
        case Stmt::Kind::Decl:
            for (const auto& d : s.decls) {
                for (const auto& [name, _] : frame.scopes.back()) {
                    if (name == d.name) {
                        throw AnalysisError(std::to_string(s.line) + ": '" + d.name + "' declared twice in one scope");
                    }
                }
                const std::string base = frame.function == "main" ? d.name : frame.function + "." + d.name;
                if (d.init) {
                    std::vector<std::string> temps;
                    std::size_t calls = 0;
                    const ExprPtr e = lower(d.init, x, frame, s.label, temps, calls);
                    const std::string col = fresh_column(base, x);
                    const std::uint32_t next = reg_.next_index(SymbolKind::Central);
                    x = without(assign(x, e, col), temps);
                    if (d.init->kind == Expr::Kind::Range && next != reg_.next_index(SymbolKind::Central)) {
                        report_.inputs[next] = d.name;
                    }
                    frame.scopes.back().emplace_back(d.name, col);
                } else {
                    frame.scopes.back().emplace_back(d.name, fresh_column(base, x));
                }
            }
            break;
        case Stmt::Kind::Assign: {
            const std::string* col = resolve(s.target, frame);
            if (col == nullptr) {
                throw AnalysisError(std::to_string(s.line) + ": assignment to undeclared variable '" + s.target + "'");
            }
            const std::string target = *col;
            std::vector<std::string> temps;
            std::size_t calls = 0;
            const ExprPtr e = lower(s.expr, x, frame, s.label, temps, calls);
            x = without(assign(x, e, target), temps);
            break;
        }
        case Stmt::Kind::If: {
            PerturbedAffineSet then_value = exec_block(s.body, x, frame);
            PerturbedAffineSet else_value = s.has_else ? exec_block(s.else_body, x, frame) : x;
            x = join_aligned(then_value, else_value);
            break;
        }
        case Stmt::Kind::While:
            x = loop(s, std::move(x), frame);
            break;
        case Stmt::Kind::Block:
            x = exec_block(s.body, std::move(x), frame);
            break;
        case Stmt::Kind::Return:
            throw AnalysisError(std::to_string(s.line) + ": misplaced 'return'");
        }
        record(frame.prefix + s.label, x, frame, std::nullopt);
        return x;
    }

    PerturbedAffineSet loop(const Stmt& s, PerturbedAffineSet x, Frame& frame) {
        const Block parts = unfold(std::make_shared<Stmt>(s), config_);
        const bool saved = recording_;
        recording_ = false;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            x = exec(*parts[i], std::move(x), frame);
        }
        ++report_.status.loops;
        if (x.is_top()) {
            recording_ = saved;
            return x;
        }
        const Stmt& unfolded = *parts.back();
        const PerturbedAffineSet entry = x;
        const std::vector<std::string> head = x.vars();
        const Functional f = [&](const PerturbedAffineSet& v) {
            PerturbedAffineSet body = v.is_bottom() ? v : project(exec_block(unfolded.body, v, frame), head);
            return join_dispatch(entry, body, config_.join_mode, reg_);
        };
        const KleeneResult r = kleene_iterate(f, head, config_, reg_);
        report_.status.iterations += r.iterations;
        if (!r.stabilized) {
            report_.status.stabilized = false;
            recording_ = saved;
            return PerturbedAffineSet::top(head);
        }
        if (config_.verify_postfix) {
            OrderOptions opts;
            opts.symbol_cap = config_.order_cap;
            switch (leq_exact(f(r.value), r.value, opts).result) {
            case OrderResult::LessOrEqual:
                ++report_.status.postfix_verified;
                break;
            case OrderResult::Unknown:
                ++report_.status.postfix_unknown;
                break;
            case OrderResult::NotLessOrEqual:
                ++report_.status.postfix_failed;
                break;
            }
        }
        recording_ = saved;
        if (recording_) {
            (void)exec_block(s.body, r.value, frame);
        }
        return r.value;
    }

    void record(const std::string& label, const PerturbedAffineSet& x, const Frame& frame,
                const std::optional<Binding>& extra) {
        if (!recording_) {
            return;
        }
        std::vector<Binding> visible;
        for (const auto& scope : frame.scopes) {
            for (const auto& b : scope) {
                if (!x.index_of(b.second)) {
                    continue;
                }
                const auto it = std::find_if(visible.begin(), visible.end(),
                                             [&](const Binding& v) { return v.first == b.first; });
                if (it != visible.end()) {
                    visible.erase(it);
                }
                visible.push_back(b);
            }
        }
        if (extra) {
            visible.push_back(*extra);
        }
        std::vector<std::string> names;
        std::vector<std::string> cols;
        for (const auto& [n, c] : visible) {
            names.push_back(n);
            cols.push_back(c);
        }
        PerturbedAffineSet value = relabel(project(x, cols), names);

        auto existing = std::find_if(report_.points.begin(), report_.points.end(),
                                     [&](const PointReport& p) { return p.label == label; });
        if (existing != report_.points.end()) {
            value = join_aligned(existing->value, value);
        }
        PointReport point;
        point.label = label;
        point.bottom = value.is_bottom();
        point.top = value.is_top();
        if (!value.is_bottom()) {
            for (std::size_t k = 0; k < value.dim(); ++k) {
                point.vars.push_back(describe_var(value, k, config_.box));
            }
        }
        point.value = value;
        if (existing != report_.points.end()) {
            *existing = std::move(point);
        } else {
            report_.points.push_back(std::move(point));
        }
        if (extra && value.is_special() == false) {
            Sensitivity sens{label, extra->first, {}};
            for (const auto& [i, c] : value.column(value.dim() - 1).central) {
                sens.ranking.emplace_back(i, c);
            }
            std::stable_sort(sens.ranking.begin(), sens.ranking.end(),
                             [](const auto& a, const auto& b) { return b.second.abs() < a.second.abs(); });
            auto old = std::find_if(report_.sensitivity.begin(), report_.sensitivity.end(),
                                    [&](const Sensitivity& q) { return q.label == label; });
            if (old != report_.sensitivity.end()) {
                *old = std::move(sens);
            } else {
                report_.sensitivity.push_back(std::move(sens));
            }
        }
    }

    const Program& program_;
    const AnalysisConfig& config_;
    SymbolRegistry reg_;
    Report report_;
    bool recording_ = true;
    std::vector<Frame*> frames_;
    std::size_t temp_counter_ = 0;
};

} // namespace

Report analyze(const Program& program, const AnalysisConfig& config) { return Engine(program, config).run(); }

} // namespace zonoset
