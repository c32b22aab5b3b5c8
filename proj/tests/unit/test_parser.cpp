// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "builders.hpp"
#include "doctest.h"
#include "zonoset/error.hpp"
#include "zonoset/parser.hpp"

using namespace zonoset;
using namespace zonoset::testing;

namespace {

const char* const kBranch = R"(float main() {
  float x ∈ [-1,1];
  return f(x)-x;
}

float f(float x) {
  float y;
  if (x >= 0) y = x + 1;
  else y = x - 1;
  return y; }
)";

std::string error_of(const std::string& src) {
    try {
        (void)parse(src);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("parser") {

TEST_CASE("branch program") {
    const Program p = parse(kBranch);
    REQUIRE(p.functions.size() == 2);
    const Function* f = p.find("f");
    REQUIRE(f != nullptr);
    CHECK(f->params == std::vector<std::string>{"x"});
    REQUIRE(f->body.size() == 3);
    const auto& branch = *f->body[1];
    CHECK(branch.kind == Stmt::Kind::If);
    CHECK(branch.has_else);
    CHECK(branch.cond.op == ">=");
    CHECK(branch.label == "L8");
    const auto& ret = *p.find("main")->body[1];
    CHECK(ret.kind == Stmt::Kind::Return);
    CHECK(ret.expr->kind == Expr::Kind::Sub);
    CHECK(ret.expr->args[0]->kind == Expr::Kind::Call);
    CHECK(ret.expr->args[0]->name == "f");
    const auto& decl = *p.find("main")->body[0];
    REQUIRE(decl.decls.size() == 1);
    CHECK(decl.decls[0].init->kind == Expr::Kind::Range);
    CHECK(decl.decls[0].init->value == q(-1));
    CHECK(decl.decls[0].init->hi == q(1));
}

TEST_CASE("literal division folds to a rational") {
    const Program p = parse("float main() { float x in [1,2], y; y = 3/8.0+3/4.0*x-1/8.0*x*x\n return y; }");
    const auto& assign = *p.find("main")->body[1];
    REQUIRE(assign.kind == Stmt::Kind::Assign);
    CHECK(assign.target == "y");
    const std::string text = assign.expr->str();
    CHECK(text.find("3/8") != std::string::npos);
    CHECK(text.find("3/4") != std::string::npos);
    CHECK(text.find("1/8") != std::string::npos);
}

TEST_CASE("both membership spellings") {
    CHECK_NOTHROW(parse("float main() { float x in [0, 1]; return x; }"));
    CHECK_NOTHROW(parse("float main() { float x ∈ [0, 1]; return x; }"));
    CHECK_NOTHROW(parse("float main() { float x ∈ [-1e-1, 2.5]; x := x * x; return x; }"));
}

TEST_CASE("comments, loops and nondeterminism") {
    const Program p = parse(R"(// header
float main() {
  float x in [0, 1]; /* block
  comment */
  while (*) { x = 0.5 * x; }
  if (*) { x = x + 1; } else { x = x - 1; }
  return x;
})");
    const auto& body = p.find("main")->body;
    REQUIRE(body.size() == 4);
    CHECK(body[1]->kind == Stmt::Kind::While);
    CHECK(body[1]->cond.nondet);
    CHECK(body[1]->label == "L5");
    CHECK(body[2]->cond.nondet);
}

TEST_CASE("labels of statements sharing a line") {
    const Program p = parse("float main() { float x in [0, 1]; x = x + 1; x = x * 2; return x; }");
    const auto& body = p.find("main")->body;
    CHECK(body[0]->label == "L1");
    CHECK(body[1]->label == "L1_2");
    CHECK(body[2]->label == "L1_3");
}

TEST_CASE("errors") {
    CHECK(error_of("").find("no main") != std::string::npos);
    CHECK(error_of("float main(float a) { return a; }").find("no parameters") != std::string::npos);
    CHECK(error_of("float main() { return g(1); }").find("undefined") != std::string::npos);
    CHECK(error_of("float main() { return f(1, 2); } float f(float a) { return a; }").find("expects") !=
          std::string::npos);
    CHECK(error_of("float main() { return f(1); } float f(float a) { return f(a); }").find("recursive") !=
          std::string::npos);
    CHECK(error_of("float main() { return 1; } float main() { return 2; }").find("twice") != std::string::npos);
    CHECK(error_of("float main() { return 1; float x = 2; }").find("last") != std::string::npos);
    CHECK(error_of("float main() { float x = 1 / 0; return x; }") != "");
    CHECK(error_of("float main() { float x in [0, 1]; return 1 / x; }") != "");
    CHECK(error_of("float main() { float x = (1 + ; return x; }") != "");
    CHECK(error_of("float main() { float x = 1 # 2; return x; }").find("unexpected character") != std::string::npos);
    CHECK(error_of("float main() { /* open").find("unterminated") != std::string::npos);
}

TEST_CASE("error positions") {
    try {
        (void)parse("float main() {\n  float x = (1 + ;\n  return x;\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
}

}
