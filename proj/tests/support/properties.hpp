// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zonoset::testing {

inline constexpr std::size_t kPropertyCases = 500;

struct PropertyOutcome {
    std::string name;
    std::size_t cases = 0;
    /// Cases where a precondition did not hold or leq_exact answered Unknown.
    std::size_t skipped = 0;
    std::size_t failures = 0;
    std::string first_failure;

    [[nodiscard]] bool ok() const { return failures == 0 && cases - skipped >= kPropertyCases; }
    void fail(const std::string& why);
};

PropertyOutcome prop_order_matches_oracle(std::uint64_t seed);
PropertyOutcome prop_preorder(std::uint64_t seed);
PropertyOutcome prop_leq_implies_inclusion(std::uint64_t seed);
PropertyOutcome prop_equiv_two_way(std::uint64_t seed);
PropertyOutcome prop_transfer_monotone(std::uint64_t seed);
PropertyOutcome prop_affine_exact(std::uint64_t seed);
PropertyOutcome prop_mul_sound(std::uint64_t seed);
PropertyOutcome prop_join_upper_bound(std::uint64_t seed);
PropertyOutcome prop_nabla_hull(std::uint64_t seed);
PropertyOutcome prop_kleene_postfix(std::uint64_t seed);

std::vector<PropertyOutcome> run_all_properties(std::uint64_t seed);

} // namespace zonoset::testing
