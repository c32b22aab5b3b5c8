// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/ast.hpp"

#include <algorithm>

namespace zonoset {

ExprPtr Expr::var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::constant(Scalar v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Const;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::range(Scalar lo, Scalar hi) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Range;
    e->value = std::move(lo);
    e->hi = std::move(hi);
    return e;
}

ExprPtr Expr::unary(Kind kind, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = {std::move(a)};
    return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::call(std::string name, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Call;
    e->name = std::move(name);
    e->args = std::move(args);
    return e;
}

std::string Expr::str() const {
    switch (kind) {
    case Kind::Var:
        return name;
    case Kind::Const:
        return value.str();
    case Kind::Range:
        return "[" + value.str() + ", " + hi.str() + "]";
    case Kind::Neg:
        return "-(" + args[0]->str() + ")";
    case Kind::Add:
        return "(" + args[0]->str() + " + " + args[1]->str() + ")";
    case Kind::Sub:
        return "(" + args[0]->str() + " - " + args[1]->str() + ")";
    case Kind::Mul:
        return args[0]->str() + " * " + args[1]->str();
    case Kind::Call: {
        std::string s = name + "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            s += (i == 0 ? "" : ", ") + args[i]->str();
        }
        return s + ")";
    }
    }
    return {};
}

std::string Condition::str() const {
    if (nondet) {
        return "*";
    }
    return lhs->str() + " " + op + " " + rhs->str();
}

const Function* Program::find(const std::string& name) const {
    const auto it = std::find_if(functions.begin(), functions.end(), [&](const Function& f) { return f.name == name; });
    return it == functions.end() ? nullptr : &*it;
}

StmtPtr make_if(Condition cond, Block body, std::size_t line, std::string label) {
    auto s = std::make_shared<Stmt>();
    s->kind = Stmt::Kind::If;
    s->cond = std::move(cond);
    s->body = std::move(body);
    s->line = line;
    s->label = std::move(label);
    return s;
}

StmtPtr make_while(Condition cond, Block body, std::size_t line, std::string label) {
    auto s = std::make_shared<Stmt>();
    s->kind = Stmt::Kind::While;
    s->cond = std::move(cond);
    s->body = std::move(body);
    s->line = line;
    s->label = std::move(label);
    return s;
}

} // namespace zonoset
