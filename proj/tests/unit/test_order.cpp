// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "builders.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "random.hpp"
#include "zonoset/error.hpp"
#include "zonoset/join.hpp"
#include "zonoset/order.hpp"

using namespace zonoset;
using namespace zonoset::testing;

TEST_SUITE("order") {

TEST_CASE("adding a perturbation term goes up") {
    const auto x = single(form(0, {{1, 1}}));
    const auto y = single(form(0, {{1, 1}}, {{1, 1}}));
    CHECK(leq_exact(x, y).result == OrderResult::LessOrEqual);
    const auto back = leq_exact(y, x);
    REQUIRE(back.result == OrderResult::NotLessOrEqual);
    CHECK(order_gap(y, x, *back.witness) > q(0));
    CHECK(*back.witness_value == order_gap(y, x, *back.witness));
}

TEST_CASE("inclusion without order") {
    const auto z1 = z1_set();
    const auto z2 = z2_set();
    const std::vector<Scalar> t{q(1), q(1)};
    CHECK(order_gap(z2, z1, t) == q(4));
    const auto v = leq_exact(z2, z1);
    REQUIRE(v.result == OrderResult::NotLessOrEqual);
    CHECK(gap_oracle(z2, z1, *v.witness) > q(0));
    CHECK(concretization_leq_2d(z2, z1, 0, 1));
    CHECK_FALSE(concretization_leq_2d(z1, z2, 0, 1));
    CHECK(concretization_leq_2d(z1, z1, 0, 1));
    CHECK(concretization_leq_2d(fig1_set(), fig1_set(), 0, 1));
}

TEST_CASE("joins of the two-variable example") {
    const auto z = mub_z();
    const auto zp = nabla_z();
    const auto zpp = tight_z();
    CHECK(leq_exact(zpp, zp).holds());
    CHECK(leq_exact(zp, zpp).result == OrderResult::NotLessOrEqual);
    for (const auto& other : {zp, zpp}) {
        CHECK(leq_exact(z, other).result == OrderResult::NotLessOrEqual);
        CHECK(leq_exact(other, z).result == OrderResult::NotLessOrEqual);
    }
    CHECK_FALSE(equiv(z, zp));
}

TEST_CASE("sampled falsification") {
    const auto z1 = z1_set();
    const auto z2 = z2_set();
    const auto v = leq_sampled(z2, z1);
    REQUIRE(v.result == OrderResult::NotLessOrEqual);
    CHECK(order_gap(z2, z1, *v.witness) > q(0));
    const std::vector<std::vector<Scalar>> diag{{q(1), q(1)}};
    const auto d = leq_sampled(z2, z1, diag);
    REQUIRE(d.result == OrderResult::NotLessOrEqual);
    CHECK(*d.witness_value == q(4));
    CHECK(leq_sampled(z1, z1).result == OrderResult::Unknown);

    const std::vector<std::vector<Scalar>> anti{{q(-1), q(1)}};
    const auto zp_z = leq_sampled(nabla_z(), mub_z(), anti);
    REQUIRE(zp_z.result == OrderResult::NotLessOrEqual);
    CHECK(*zp_z.witness_value > q(0));
    CHECK(leq_sampled(mub_z(), nabla_z()).result == OrderResult::NotLessOrEqual);
    const std::vector<std::vector<Scalar>> none;
    CHECK_THROWS_AS(leq_sampled(z1, z1, none), DomainError);
}

TEST_CASE("default directions") {
    const auto dirs = default_directions(z2_set(), z1_set());
    const auto has = [&](std::vector<Scalar> t) { return std::find(dirs.begin(), dirs.end(), t) != dirs.end(); };
    CHECK(has({q(1), q(0)}));
    CHECK(has({q(0), q(1)}));
    CHECK(has({q(1), q(1)}));
    CHECK(has({q(1), q(-1)}));
}

TEST_CASE("special values") {
    const auto bot = PerturbedAffineSet::bottom({"x", "y"});
    const auto top = PerturbedAffineSet::top({"x", "y"});
    const auto z1 = z1_set();
    CHECK(leq_exact(bot, z1).holds());
    CHECK(leq_exact(z1, top).holds());
    CHECK(leq_exact(bot, top).holds());
    CHECK(leq_exact(top, z1).result == OrderResult::NotLessOrEqual);
    CHECK(leq_exact(z1, bot).result == OrderResult::NotLessOrEqual);
    CHECK(equiv(bot, bot));
    CHECK_FALSE(equiv(bot, z1));
}

TEST_CASE("equivalence") {
    const auto z1 = z1_set();
    CHECK(equiv(z1, z1));
    const auto split = single(form(0, {}, {{1, 1}, {2, 1}}));
    const auto merged = single(form(0, {}, {{5, 2}}));
    CHECK(equiv(split, merged));
    CHECK(leq_exact(split, merged).holds());
    CHECK(leq_exact(merged, split).holds());
    const std::vector<Scalar> t{q(1)};
    CHECK(support(split, t) == support(merged, t));
    CHECK_FALSE(equiv(single(form(0, {{1, 1}})), single(form(0, {}, {{1, 1}}))));
}

TEST_CASE("symbol cap") {
    OrderOptions o;
    o.symbol_cap = 2;
    const auto x = xy(form(0, {{1, 1}, {2, 1}}), form(0, {{3, 1}}));
    const auto y = xy(form(0, {{1, 1}, {2, 1}}), form(0, {{3, 1}}, {{1, 1}}));
    CHECK(leq_exact(x, y, o).result == OrderResult::Unknown);
    CHECK(leq_exact(x, y).holds());
}

TEST_CASE("statistics are reported") {
    OrderStats stats;
    (void)leq_exact(mub_z(), nabla_z(), {}, &stats);
    CHECK(stats.hyperplanes > 0);
    CHECK(stats.lps > 0);
}

TEST_CASE("agrees with the extreme-ray oracle") {
    Gen g(99);
    SymbolRegistry reg = registry_after();
    int decided = 0;
    for (int i = 0; i < 150; ++i) {
        const auto x = random_small_set(g, 4);
        const auto y = g.coin() ? add_perturbation_rows(g, x, 1 + g.index(2), reg) : random_small_set(g, 4);
        if (x.dim() != y.dim()) {
            continue;
        }
        const auto v = leq_exact(x, y);
        const auto o = leq_oracle(x, y);
        CHECK(v.holds() == o.holds);
        ++decided;
    }
    CHECK(decided > 50);
}

TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(leq_exact(single(form(0, {})), z1_set()), DimensionError);
}

}
