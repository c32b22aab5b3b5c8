// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "builders.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "zonoset/analyzer.hpp"
#include "zonoset/error.hpp"
#include "zonoset/fixpoint.hpp"
#include "zonoset/join.hpp"
#include "zonoset/order.hpp"
#include "zonoset/parser.hpp"

using namespace zonoset;
using namespace zonoset::testing;

namespace {

struct Loop {
    SymbolRegistry reg;
    PerturbedAffineSet entry;
    AnalysisConfig config;

    Loop() { entry = single(form(q(1, 2), {{reg.fresh(SymbolKind::Central).index, q(1, 2)}})); }

    Functional with_body(std::function<AffineForm(const AffineForm&)> body) {
        return [this, body](const PerturbedAffineSet& v) {
            if (v.is_bottom()) {
                return entry;
            }
            if (v.is_top()) {
                return v;
            }
            return join_dispatch(entry, single(body(v.column(0))), config.join_mode, reg);
        };
    }
};

const char* const kHalving = "float main() { float x in [0,1]; while (*) { x = 0.5 * x; } return x; }";

} // namespace

TEST_SUITE("fixpoint") {

TEST_CASE("identity body") {
    Loop l;
    const auto r = kleene_iterate(l.with_body([](const AffineForm& f) { return f; }), {"x"}, l.config, l.reg);
    CHECK(r.stabilized);
    CHECK(r.iterations <= 2);
    CHECK(gamma_interval(r.value, 0) == Interval(q(0), q(1)));
    CHECK(r.trace.front().is_bottom());
}

TEST_CASE("increment escapes the box") {
    Loop l;
    const auto r = kleene_iterate(l.with_body([](const AffineForm& f) { return f + AffineForm::constant(q(1)); }),
                                  {"x"}, l.config, l.reg);
    CHECK(r.value.is_top());
    CHECK(r.escaped);
    CHECK_FALSE(r.stabilized);
    CHECK_FALSE(inside_box(r.trace.back(), l.config.box));
}

TEST_CASE("iteration cap gives top") {
    Loop l;
    l.config.box = Interval(q(-1000000000), q(1000000000));
    l.config.max_iterations = 3;
    l.config.widening_delay = 10;
    const auto r = kleene_iterate(l.with_body([](const AffineForm& f) { return f + AffineForm::constant(q(1)); }),
                                  {"x"}, l.config, l.reg);
    CHECK(r.value.is_top());
    CHECK_FALSE(r.escaped);
    CHECK(r.iterations == 3);
}

TEST_CASE("halving converges") {
    for (const auto mode : {JoinMode::Nabla, JoinMode::Mub}) {
        Loop l;
        l.config.join_mode = mode;
        const auto f = l.with_body([](const AffineForm& a) { return a.scaled(q(1, 2)); });
        const auto r = kleene_iterate(f, {"x"}, l.config, l.reg);
        REQUIRE(r.stabilized);
        CHECK(r.iterations <= l.config.max_iterations);
        const auto iv = gamma_interval(r.value, 0);
        INFO(to_string(mode) << " " << r.value.str() << " after " << r.iterations);
        CHECK(iv.contains(Interval(q(0), q(1))));
        if (mode == JoinMode::Nabla) {
            CHECK(Interval(q(-1, 10), q(11, 10)).contains(iv));
        }
        CHECK(leq_exact(f(r.value), r.value).holds());
    }
}

TEST_CASE("stop test") {
    const auto x = z1_set();
    CHECK(stop_test(x, x));
    const auto wider = xy(form(0, {{1, 2}}), form(0, {{1, 1}}, {{1, 1}}));
    CHECK_FALSE(stop_test(x, wider));
    // Same concretization per axis, different shape.
    const auto reshaped = xy(form(0, {{1, 1}}), form(0, {{1, 1}}, {{2, 1}, {3, 0}}));
    CHECK(stop_test(x, reshaped));
    const auto rotated = xy(form(0, {{1, 1}}), form(0, {{1, -1}}, {{1, 1}}));
    CHECK_FALSE(stop_test(x, rotated));
    const auto bot = PerturbedAffineSet::bottom({"x", "y"});
    CHECK_FALSE(stop_test(bot, x));
    CHECK(stop_test(bot, bot));
}

TEST_CASE("box membership") {
    const Interval box(q(-5), q(5));
    CHECK(inside_box(z1_set(), box));
    CHECK_FALSE(inside_box(fig1_set(), box));
    CHECK(inside_box(PerturbedAffineSet::bottom({"x"}), box));
    CHECK_FALSE(inside_box(PerturbedAffineSet::top({"x"}), box));
}

TEST_CASE("configuration is validated") {
    AnalysisConfig c;
    CHECK_NOTHROW(c.validate());
    c.max_iterations = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = {};
    c.cyclic_unfold = 0;
    CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("unfolding") {
    const auto p = parse(kHalving);
    const StmtPtr loop = p.find("main")->body[1];
    REQUIRE(loop->kind == Stmt::Kind::While);

    AnalysisConfig c;
    const auto same = unfold(loop, c);
    REQUIRE(same.size() == 1);
    CHECK(same[0]->kind == Stmt::Kind::While);
    CHECK(same[0]->body.size() == loop->body.size());

    c.initial_unfold = 1;
    const auto peeled = unfold(loop, c);
    REQUIRE(peeled.size() == 2);
    CHECK(peeled[0]->kind == Stmt::Kind::If);
    CHECK(peeled[0]->body.size() == loop->body.size());
    CHECK(peeled[1]->kind == Stmt::Kind::While);

    c.initial_unfold = 0;
    c.cyclic_unfold = 2;
    const auto cyclic = unfold(loop, c);
    REQUIRE(cyclic.size() == 1);
    REQUIRE(cyclic[0]->body.size() == 2);
    CHECK(cyclic[0]->body[1]->kind == Stmt::Kind::If);
}

TEST_CASE("unfolded loops stay sound") {
    const auto p = parse(kHalving);
    const auto oracle = interval_oracle(p);
    const auto& want = oracle.at("return").vars.at("x");
    REQUIRE(want.has_value());
    for (std::size_t initial : {0, 1, 2}) {
        for (std::size_t cyclic : {1, 2, 3}) {
            AnalysisConfig c;
            c.initial_unfold = initial;
            c.cyclic_unfold = cyclic;
            const Report r = analyze(p, c);
            CHECK(r.status.stabilized);
            CHECK(r.find("return")->find("x")->interval.contains(*want));
            CHECK(r.status.postfix_failed == 0);
        }
    }
}

}
