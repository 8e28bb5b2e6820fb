// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/rational.hpp"

#include <cctype>
#include <ostream>

#include "frobcode/error.hpp"

namespace frobcode {

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw SyntaxError(offset + i, "expected digits");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw SyntaxError(offset + i, "unexpected character '" + std::string(1, text[i]) + "' in rational");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::internal, "rational with zero denominator");
    value_ = value_type(num, den);
}

Rational Rational::parse(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) throw SyntaxError(0, "empty rational");
    text = text.substr(first, text.find_last_not_of(" \t") - first + 1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
    BigInt num = parse_integer(text.substr(0, slash), 0);
    BigInt den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0) throw SyntaxError(slash + 1, "zero denominator");
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(Errc::internal, "division by zero rational");
    value_ /= rhs.value_;
    return *this;
}

BigInt Rational::floor() const {
    const BigInt num = numerator();
    const BigInt den = denominator();
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt Rational::ceil() const {
    const BigInt num = numerator();
    const BigInt den = denominator();
    BigInt q = num / den;
    if (num > 0 && q * den != num) q += 1;
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace frobcode
