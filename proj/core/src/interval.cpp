// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/interval.hpp"

#include <ostream>

#include "zonoset/error.hpp"

namespace zonoset {

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) {
        throw DomainError("empty interval [" + lo_.str() + ", " + hi_.str() + "]");
    }
}

Interval Interval::hull(const Interval& o) const { return {min(lo_, o.lo_), max(hi_, o.hi_)}; }

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.str(); }

} // namespace zonoset
