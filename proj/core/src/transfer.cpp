// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/transfer.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

void allocate(AffineForm& f, SymbolKind kind, const Scalar& coeff, SymbolRegistry& reg) {
    if (!coeff.is_zero()) {
        f.set(reg.fresh(kind), coeff);
    }
}

void check_column(const PerturbedAffineSet& x, std::size_t k) {
    if (k >= x.dim()) {
        throw DimensionError("column " + std::to_string(k) + " out of range (dimension " + std::to_string(x.dim()) +
                             ")");
    }
}

} // namespace

AffineForm const_form(const Scalar& a, const Scalar& b, SymbolRegistry& reg) {
    if (b < a) {
        throw DomainError("empty constant interval [" + a.str() + ", " + b.str() + "]");
    }
    AffineForm f = AffineForm::constant((a + b) / Scalar(2));
    allocate(f, SymbolKind::Central, (b - a) / Scalar(2), reg);
    return f;
}

AffineForm mul_forms(const AffineForm& x, const AffineForm& y, SymbolRegistry& reg) {
    AffineForm out = AffineForm::constant(x.center * y.center);
    for (const auto& [l, c] : x.central) {
        out.add({SymbolKind::Central, l}, c * y.center);
    }
    for (const auto& [l, c] : y.central) {
        out.add({SymbolKind::Central, l}, x.center * c);
    }
    const Scalar cx = x.central_radius();
    const Scalar cy = y.central_radius();
    const Scalar px = x.perturbation_radius();
    const Scalar py = y.perturbation_radius();
    const Scalar cx0 = cx + x.center.abs();
    const Scalar cy0 = cy + y.center.abs();
    allocate(out, SymbolKind::Central, cx * cy, reg);
    allocate(out, SymbolKind::Perturbation, px * py + cx0 * py + cy0 * px, reg);
    return out;
}

AffineForm square_form(const AffineForm& x, SymbolRegistry& reg) {
    const Scalar c = x.central_radius();
    const Scalar p = x.perturbation_radius();
    const Scalar half_q = c * c / Scalar(2);
    AffineForm out = AffineForm::constant(x.center * x.center + half_q);
    for (const auto& [l, v] : x.central) {
        out.add({SymbolKind::Central, l}, Scalar(2) * x.center * v);
    }
    allocate(out, SymbolKind::Central, half_q, reg);
    allocate(out, SymbolKind::Perturbation, p * p + Scalar(2) * (x.center.abs() + c) * p, reg);
    return out;
}

PerturbedAffineSet assign_const(const PerturbedAffineSet& x, std::string target, const Scalar& a, const Scalar& b,
                                SymbolRegistry& reg) {
    if (b < a) {
        throw DomainError("empty constant interval [" + a.str() + ", " + b.str() + "]");
    }
    if (x.is_special()) {
        return x.with_column(std::move(target), {});
    }
    return x.with_column(std::move(target), const_form(a, b, reg));
}

PerturbedAffineSet assign_add(const PerturbedAffineSet& x, std::string target, std::size_t i, std::size_t j) {
    check_column(x, i);
    check_column(x, j);
    if (x.is_special()) {
        return x.with_column(std::move(target), {});
    }
    return x.with_column(std::move(target), x.column(i) + x.column(j));
}

PerturbedAffineSet assign_scale(const PerturbedAffineSet& x, std::string target, const Scalar& lambda,
                                std::size_t i) {
    check_column(x, i);
    if (x.is_special()) {
        return x.with_column(std::move(target), {});
    }
    return x.with_column(std::move(target), x.column(i).scaled(lambda));
}

PerturbedAffineSet assign_mul(const PerturbedAffineSet& x, std::string target, std::size_t i, std::size_t j,
                              SymbolRegistry& reg) {
    check_column(x, i);
    check_column(x, j);
    if (x.is_special()) {
        return x.with_column(std::move(target), {});
    }
    return x.with_column(std::move(target), mul_forms(x.column(i), x.column(j), reg));
}

PerturbedAffineSet square_refined(const PerturbedAffineSet& x, std::string target, std::size_t i,
                                  SymbolRegistry& reg) {
    check_column(x, i);
    if (x.is_special()) {
        return x.with_column(std::move(target), {});
    }
    return x.with_column(std::move(target), square_form(x.column(i), reg));
}

namespace {

/// A compiled subexpression: a folded literal or a slot.
using Operand = std::variant<Scalar, std::size_t>;

class Compiler {
  public:
    explicit Compiler(const std::vector<std::string>& env) : env_(env) { plan_.base_columns = env.size(); }

    ExprPlan finish(const Expr& e) {
        const Operand r = compile(e);
        if (const auto* c = std::get_if<Scalar>(&r)) {
            emit({PlanStep::Op::Const, 0, 0, *c, *c});
        } else if (std::get<std::size_t>(r) < plan_.base_columns) {
            emit({PlanStep::Op::Copy, std::get<std::size_t>(r), 0, {}, {}});
        }
        plan_.result = plan_.base_columns + plan_.steps.size() - 1;
        return std::move(plan_);
    }

  private:
    std::size_t emit(PlanStep s) {
        plan_.steps.push_back(std::move(s));
        return plan_.base_columns + plan_.steps.size() - 1;
    }

    std::size_t slot(const Operand& o) {
        if (const auto* c = std::get_if<Scalar>(&o)) {
            return emit({PlanStep::Op::Const, 0, 0, *c, *c});
        }
        return std::get<std::size_t>(o);
    }

    Operand scale(const Operand& o, const Scalar& lambda) {
        if (const auto* c = std::get_if<Scalar>(&o)) {
            return *c * lambda;
        }
        if (lambda == Scalar(1)) {
            return o;
        }
        return emit({PlanStep::Op::Scale, std::get<std::size_t>(o), 0, lambda, {}});
    }

    Operand add(const Operand& a, const Operand& b) {
        const auto* ca = std::get_if<Scalar>(&a);
        const auto* cb = std::get_if<Scalar>(&b);
        if (ca != nullptr && cb != nullptr) {
            return *ca + *cb;
        }
        if (ca != nullptr && ca->is_zero()) {
            return b;
        }
        if (cb != nullptr && cb->is_zero()) {
            return a;
        }
        const std::size_t sa = slot(a);
        const std::size_t sb = slot(b);
        return emit({PlanStep::Op::Add, sa, sb, {}, {}});
    }

    void collect_factors(const Expr& e, std::vector<const Expr*>& out) {
        if (e.kind == Expr::Kind::Mul) {
            collect_factors(*e.args[0], out);
            collect_factors(*e.args[1], out);
        } else {
            out.push_back(&e);
        }
    }

    Operand product(const Expr& e) {
        std::vector<const Expr*> factors;
        collect_factors(e, factors);
        Scalar lambda(1);
        std::map<std::string, int> powers;
        std::vector<std::string> order;
        std::vector<std::size_t> slots;
        for (const Expr* f : factors) {
            if (f->kind == Expr::Kind::Var) {
                lookup(*f);
                if (powers[f->name]++ == 0) {
                    order.push_back(f->name);
                }
                continue;
            }
            const Operand o = compile(*f);
            if (const auto* c = std::get_if<Scalar>(&o)) {
                lambda *= *c;
            } else {
                slots.push_back(std::get<std::size_t>(o));
            }
        }
        if (lambda.is_zero()) {
            return Scalar();
        }
        for (const auto& name : order) {
            const std::size_t col = lookup_name(name);
            int n = powers[name];
            for (; n >= 2; n -= 2) {
                slots.push_back(emit({PlanStep::Op::Square, col, 0, {}, {}}));
            }
            if (n == 1) {
                slots.push_back(col);
            }
        }
        if (slots.empty()) {
            return lambda;
        }
        std::size_t acc = slots[0];
        for (std::size_t k = 1; k < slots.size(); ++k) {
            acc = emit({PlanStep::Op::Mul, acc, slots[k], {}, {}});
        }
        return scale(acc, lambda);
    }

    std::size_t lookup_name(const std::string& name) const {
        for (std::size_t k = 0; k < env_.size(); ++k) {
            if (env_[k] == name) {
                return k;
            }
        }
        throw AnalysisError("unbound variable '" + name + "'");
    }

    std::size_t lookup(const Expr& e) const {
        try {
            return lookup_name(e.name);
        } catch (const AnalysisError&) {
            throw AnalysisError(std::to_string(e.line) + ":" + std::to_string(e.column) + ": unbound variable '" +
                                e.name + "'");
        }
    }

    Operand compile(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::Var:
            return lookup(e);
        case Expr::Kind::Const:
            return e.value;
        case Expr::Kind::Range:
            if (e.value == e.hi) {
                return e.value;
            }
            return emit({PlanStep::Op::Const, 0, 0, e.value, e.hi});
        case Expr::Kind::Neg:
            return scale(compile(*e.args[0]), Scalar(-1));
        case Expr::Kind::Add:
            return add(compile(*e.args[0]), compile(*e.args[1]));
        case Expr::Kind::Sub: {
            const Operand a = compile(*e.args[0]);
            return add(a, scale(compile(*e.args[1]), Scalar(-1)));
        }
        case Expr::Kind::Mul:
            return product(e);
        case Expr::Kind::Call:
            throw AnalysisError("call to '" + e.name + "' must be inlined before compilation");
        }
        throw AnalysisError("unknown expression kind");
    }

    const std::vector<std::string>& env_;
    ExprPlan plan_;
};

} // namespace

std::string ExprPlan::str() const {
    std::ostringstream os;
    auto name = [this](std::size_t s) {
        return s < base_columns ? "c" + std::to_string(s) : "t" + std::to_string(s - base_columns);
    };
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        os << name(base_columns + k) << " := ";
        switch (s.op) {
        case PlanStep::Op::Const:
            os << "[" << s.lo.str() << ", " << s.hi.str() << "]";
            break;
        case PlanStep::Op::Add:
            os << name(s.a) << " + " << name(s.b);
            break;
        case PlanStep::Op::Scale:
            os << s.lo.str() << " * " << name(s.a);
            break;
        case PlanStep::Op::Mul:
            os << name(s.a) << " * " << name(s.b);
            break;
        case PlanStep::Op::Square:
            os << "sq " << name(s.a);
            break;
        case PlanStep::Op::Copy:
            os << name(s.a);
            break;
        }
        os << '\n';
    }
    return os.str();
}

ExprPlan compile_expr(const Expr& expr, const std::vector<std::string>& env) { return Compiler(env).finish(expr); }

PerturbedAffineSet eval_plan(const PerturbedAffineSet& x, const ExprPlan& plan, SymbolRegistry& reg,
                             const std::string& target) {
    if (plan.base_columns != x.dim()) {
        throw DimensionError("plan compiled for " + std::to_string(plan.base_columns) + " columns, value has " +
                             std::to_string(x.dim()));
    }
    if (plan.steps.empty() || plan.result != plan.base_columns + plan.steps.size() - 1) {
        throw DimensionError("malformed expression plan");
    }
    const auto existing = x.index_of(target);
    if (x.is_special()) {
        return existing ? x : x.with_column(target, {});
    }
    std::vector<AffineForm> temps;
    temps.reserve(plan.steps.size());
    auto get = [&](std::size_t s) -> const AffineForm& {
        if (s < plan.base_columns) {
            return x.column(s);
        }
        if (s - plan.base_columns >= temps.size()) {
            throw DimensionError("plan step reads an undefined slot");
        }
        return temps[s - plan.base_columns];
    };
    for (const auto& s : plan.steps) {
        switch (s.op) {
        case PlanStep::Op::Const:
            temps.push_back(const_form(s.lo, s.hi, reg));
            break;
        case PlanStep::Op::Add:
            temps.push_back(get(s.a) + get(s.b));
            break;
        case PlanStep::Op::Scale:
            temps.push_back(get(s.a).scaled(s.lo));
            break;
        case PlanStep::Op::Mul:
            temps.push_back(mul_forms(get(s.a), get(s.b), reg));
            break;
        case PlanStep::Op::Square:
            temps.push_back(square_form(get(s.a), reg));
            break;
        case PlanStep::Op::Copy:
            temps.push_back(get(s.a));
            break;
        }
    }
    AffineForm result = std::move(temps.back());
    if (existing) {
        return x.with_replaced(*existing, std::move(result));
    }
    return x.with_column(target, std::move(result));
}

} // namespace zonoset
