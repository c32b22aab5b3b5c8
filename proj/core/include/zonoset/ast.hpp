// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "zonoset/rational.hpp"

namespace zonoset {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Var, Const, Range, Neg, Add, Sub, Mul, Call };
    Kind kind = Kind::Const;
    /// Variable or callee name.
    std::string name;
    /// Const value, or Range lower bound.
    Scalar value;
    /// Range upper bound.
    Scalar hi;
    /// Operands (Neg: 1, Add/Sub/Mul: 2, Call: arguments).
    std::vector<ExprPtr> args;
    std::size_t line = 0;
    std::size_t column = 0;

    static ExprPtr var(std::string name);
    static ExprPtr constant(Scalar v);
    static ExprPtr range(Scalar lo, Scalar hi);
    static ExprPtr unary(Kind kind, ExprPtr a);
    static ExprPtr binary(Kind kind, ExprPtr a, ExprPtr b);
    static ExprPtr call(std::string name, std::vector<ExprPtr> args);

    [[nodiscard]] std::string str() const;
};

struct Condition {
    /// `*`: a nondeterministic choice.
    bool nondet = true;
    std::string op;
    ExprPtr lhs;
    ExprPtr rhs;
    [[nodiscard]] std::string str() const;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;
using Block = std::vector<StmtPtr>;

struct Declarator {
    std::string name;
    /// Null for an uninitialized declaration.
    ExprPtr init;
};

struct Stmt {
    enum class Kind { Decl, Assign, If, While, Return, Block };
    Kind kind = Kind::Block;
    std::size_t line = 0;
    /// Program point name, `L<line>` with a suffix when a line holds several statements.
    std::string label;
    std::vector<Declarator> decls;
    std::string target;
    ExprPtr expr;
    Condition cond;
    Block body;
    Block else_body;
    bool has_else = false;
};

struct Function {
    std::string name;
    std::vector<std::string> params;
    Block body;
    std::size_t line = 0;
};

struct Program {
    std::vector<Function> functions;
    [[nodiscard]] const Function* find(const std::string& name) const;
};

/// Builds `if (cond) body` without an else branch.
StmtPtr make_if(Condition cond, Block body, std::size_t line, std::string label);
/// Builds `while (cond) body`.
StmtPtr make_while(Condition cond, Block body, std::size_t line, std::string label);

} // namespace zonoset
