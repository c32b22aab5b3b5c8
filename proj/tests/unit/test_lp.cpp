// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "builders.hpp"
#include "doctest.h"
#include "random.hpp"
#include "zonoset/lp.hpp"

using namespace zonoset;
using namespace zonoset::testing;

namespace {

bool satisfies(const LpProblem& p, const std::vector<Scalar>& x) {
    for (const auto& c : p.constraints) {
        const Scalar lhs = dot(c.coeffs, x);
        const bool ok = c.relation == Relation::LessEqual      ? lhs <= c.bound
                        : c.relation == Relation::GreaterEqual ? lhs >= c.bound
                                                               : lhs == c.bound;
        if (!ok) {
            return false;
        }
    }
    for (std::size_t i = 0; i < p.nonnegative.size(); ++i) {
        if (p.nonnegative[i] && x[i].sign() < 0) {
            return false;
        }
    }
    return true;
}

LpConstraint le(std::vector<Scalar> a, Scalar b) { return {std::move(a), Relation::LessEqual, std::move(b)}; }
LpConstraint ge(std::vector<Scalar> a, Scalar b) { return {std::move(a), Relation::GreaterEqual, std::move(b)}; }

} // namespace

TEST_SUITE("lp") {

TEST_CASE("textbook maximum") {
    // max 3x + 2y, x + y <= 4, x + 3y <= 6, x, y >= 0.
    LpProblem p{{q(3), q(2)}, {le({q(1), q(1)}, q(4)), le({q(1), q(3)}, q(6))}, {true, true}};
    const auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == q(12));
    CHECK(s.x == std::vector<Scalar>{q(4), q(0)});
}

TEST_CASE("free variables and equalities") {
    LpProblem p{{q(1), q(-1)},
                {{{q(1), q(1)}, Relation::Equal, q(1)}, le({q(1), q(0)}, q(5, 2)), ge({q(1), q(0)}, q(-3))},
                {}};
    const auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == q(4));
    CHECK(satisfies(p, s.x));
}

TEST_CASE("infeasible and unbounded") {
    LpProblem inf{{q(1)}, {le({q(1)}, q(0)), ge({q(1)}, q(1))}, {}};
    CHECK(solve_lp(inf).status == LpStatus::Infeasible);
    LpProblem unb{{q(1), q(1)}, {le({q(1), q(-1)}, q(1))}, {true, true}};
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("target stops early with a feasible point") {
    LpProblem p{{q(1)}, {le({q(1)}, q(10))}, {true}};
    LpOptions o;
    o.target = q(0);
    const auto s = solve_lp(p, o);
    CHECK((s.status == LpStatus::TargetReached || s.status == LpStatus::Optimal));
    CHECK(s.objective > q(0));
    CHECK(satisfies(p, s.x));
}

TEST_CASE("random boxes: optimum is the best vertex") {
    Gen g(3);
    for (int i = 0; i < 100; ++i) {
        // max <c, x> over a box intersected with a random half-space through the origin.
        const std::vector<Scalar> c{g.half_step(), g.half_step()};
        const std::vector<Scalar> h{g.half_step(), g.half_step()};
        LpProblem p{c, {le({q(1), q(0)}, q(1)), ge({q(1), q(0)}, q(-1)), le({q(0), q(1)}, q(1)),
                        ge({q(0), q(1)}, q(-1)), le(h, q(0))}, {}};
        const auto s = solve_lp(p);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(satisfies(p, s.x));
        // Grid check over the box with step 1/4: nothing feasible beats the optimum.
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                const std::vector<Scalar> x{q(a, 4), q(b, 4)};
                if (satisfies(p, x)) {
                    CHECK(dot(c, x) <= s.objective);
                }
            }
        }
    }
}

TEST_CASE("shape errors") {
    LpProblem p{{q(1), q(1)}, {le({q(1)}, q(1))}, {}};
    CHECK_THROWS(solve_lp(p));
}

}
