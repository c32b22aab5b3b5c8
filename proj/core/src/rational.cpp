// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/rational.hpp"

#include <cctype>
#include <ostream>

#include "zonoset/error.hpp"

namespace zonoset {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class pow10(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    auto fail = [&]() -> Rational { throw DomainError("malformed number '" + original + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return fail();
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            return fail();
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw DomainError("rational with zero denominator");
        }
        mpq_class q(mpz_class(std::string(num), 10), d);
        q.canonicalize();
        return Rational(negative ? mpq_class(-q) : q);
    }

    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            return fail();
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) {
            exponent = -exponent;
        }
        text = text.substr(0, e);
    }

    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            return fail();
        }
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) {
            return fail();
        }
        digits = std::string(text);
    }
    if (digits.empty()) {
        digits = "0";
    }

    mpq_class q{mpz_class(digits, 10)};
    const long scale = exponent - fraction_digits;
    if (scale > 0) {
        q *= mpq_class(pow10(static_cast<unsigned long>(scale)));
    } else if (scale < 0) {
        q /= mpq_class(pow10(static_cast<unsigned long>(-scale)));
    }
    q.canonicalize();
    return Rational(negative ? mpq_class(-q) : q);
}

std::string Rational::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace zonoset
