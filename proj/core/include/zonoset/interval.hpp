// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "zonoset/rational.hpp"

namespace zonoset {

/// Closed interval [lo, hi] with lo <= hi.
class Interval {
  public:
    Interval() = default;
    Interval(Scalar lo, Scalar hi);

    static Interval point(const Scalar& v) { return {v, v}; }

    [[nodiscard]] const Scalar& lo() const { return lo_; }
    [[nodiscard]] const Scalar& hi() const { return hi_; }
    [[nodiscard]] Scalar width() const { return hi_ - lo_; }
    [[nodiscard]] Scalar mid() const { return (lo_ + hi_) / Scalar(2); }
    [[nodiscard]] Scalar radius() const { return (hi_ - lo_) / Scalar(2); }

    [[nodiscard]] bool contains(const Scalar& v) const { return lo_ <= v && v <= hi_; }
    [[nodiscard]] bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    [[nodiscard]] Interval hull(const Interval& o) const;

    /// "[lo, hi]" with exact rationals.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;

  private:
    Scalar lo_;
    Scalar hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

} // namespace zonoset
