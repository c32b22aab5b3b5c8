// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cstdint>

#include "doctest.h"
#include "properties.hpp"

using namespace zonoset::testing;

namespace {

constexpr std::uint64_t kSeed = 7741;

void check(const PropertyOutcome& p) {
    INFO(p.name << ": " << p.cases << " cases, " << p.skipped << " skipped, first failure: " << p.first_failure);
    CHECK(p.failures == 0);
    CHECK(p.cases - p.skipped >= kPropertyCases);
}

} // namespace

TEST_SUITE("property") {
TEST_CASE("order agrees with the extreme-ray oracle") { check(prop_order_matches_oracle(kSeed)); }
TEST_CASE("order is a preorder") { check(prop_preorder(kSeed + 1)); }
TEST_CASE("order implies inclusion") { check(prop_leq_implies_inclusion(kSeed + 2)); }
TEST_CASE("equivalence is two-way order") { check(prop_equiv_two_way(kSeed + 3)); }
TEST_CASE("transfer functions are monotone") { check(prop_transfer_monotone(kSeed + 4)); }
TEST_CASE("affine assignments are exact") { check(prop_affine_exact(kSeed + 5)); }
TEST_CASE("multiplication is sound") { check(prop_mul_sound(kSeed + 6)); }
TEST_CASE("joins are upper bounds") { check(prop_join_upper_bound(kSeed + 7)); }
TEST_CASE("nabla is the axis hull") { check(prop_nabla_hull(kSeed + 8)); }
TEST_CASE("kleene results are post-fixpoints") { check(prop_kleene_postfix(kSeed + 9)); }
}
