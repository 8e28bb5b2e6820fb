// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "frobcode/error.hpp"

namespace frobcode {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division by a monic divisor; returns the quotient and leaves the remainder in `num`.
IntPoly divide_monic(IntPoly& num, const IntPoly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {};
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    trim(num);
    trim(quot);
    return quot;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::uint32_t order) {
    if (order == 0) throw Error(Errc::internal, "cyclotomic polynomial of order 0");
    static std::mutex mutex;
    static std::map<std::uint32_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }
    IntPoly poly(order + 1, 0);
    poly[0] = -1;
    poly[order] = 1;
    for (std::uint32_t d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        IntPoly rem = poly;
        poly = divide_monic(rem, cyclotomic_polynomial(d));
        if (!rem.empty()) throw Error(Errc::internal, "x^N - 1 not divisible by a cyclotomic factor");
    }
    std::lock_guard lock(mutex);
    return cache.emplace(order, std::move(poly)).first->second;
}

CyclotomicSum::CyclotomicSum(std::uint32_t order) : order_(order), counts_(order, 0) {
    if (order == 0) throw Error(Errc::internal, "cyclotomic sum of order 0");
}

void CyclotomicSum::add(std::uint64_t exponent, std::int64_t multiplicity) {
    counts_[exponent % order_] += multiplicity;
}

IntPoly CyclotomicSum::reduced() const {
    IntPoly rem = counts_;
    divide_monic(rem, cyclotomic_polynomial(order_));
    return rem;
}

Rational cyclotomic_reduce(const CyclotomicSum& sum) {
    const IntPoly rem = sum.reduced();
    if (rem.size() > 1) {
        throw Error(Errc::not_rational, "character sum of order " + std::to_string(sum.order()) +
                                            " is not rational (malformed character?)");
    }
    return rem.empty() ? Rational(0) : Rational(rem[0]);
}

}  // namespace frobcode
