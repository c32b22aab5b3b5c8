// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "zonoset/ast.hpp"

namespace zonoset {

/// Parses a program and checks it: a parameterless `main` exists, every call names a defined
/// function with matching arity, the call graph is acyclic, and each function ends with `return`.
/// Throws ParseError with the position of the offending token.
///
/// Grammar:
///   program  := fundef*
///   fundef   := "float" IDENT "(" ["float" IDENT {"," "float" IDENT}] ")" "{" stmt* "}"
///   stmt     := "float" decl {"," decl} ";"
///             | IDENT ("=" | ":=") expr ";"
///             | "if" "(" cond ")" body ["else" body]
///             | "while" "(" cond ")" body
///             | "return" expr ";"
///             | "{" stmt* "}"
///   decl     := IDENT [("∈" | "in") interval | "=" expr]
///   body     := stmt
///   cond     := "*" | expr relop expr
///   expr     := term {("+" | "-") term}
///   term     := unary {("*" | "/") unary}
///   unary    := ("-" | "+") unary | NUMBER | IDENT | IDENT "(" [expr {"," expr}] ")"
///             | "(" expr ")" | interval
///   interval := "[" ["-"] NUMBER "," ["-"] NUMBER "]"
///
/// A ";" may be omitted before a line break or a closing brace. Numbers are exact decimals. Division
/// is only accepted between literals and is folded.
Program parse(std::string_view source);

} // namespace zonoset
