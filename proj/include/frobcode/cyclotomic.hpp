// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "frobcode/rational.hpp"

namespace frobcode {

/// Integer polynomial, coefficient i multiplies x^i. Trailing zeros are trimmed.
using IntPoly = std::vector<std::int64_t>;

/// The N-th cyclotomic polynomial, built by dividing x^N - 1 by Phi_d for
/// every proper divisor d of N. Results are memoized per N.
const IntPoly& cyclotomic_polynomial(std::uint32_t order);

/// A formal sum  sum_j counts[j] * zeta_N^j  of N-th roots of unity.
class CyclotomicSum {
public:
    explicit CyclotomicSum(std::uint32_t order);

    std::uint32_t order() const { return order_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    /// Adds `multiplicity` copies of zeta_N^exponent (exponent taken mod N).
    void add(std::uint64_t exponent, std::int64_t multiplicity = 1);

    /// Remainder of the count polynomial modulo Phi_N, i.e. the canonical
    /// representative in Z[x]/(Phi_N). Two sums are equal iff these match.
    IntPoly reduced() const;

private:
    std::uint32_t order_;
    std::vector<std::int64_t> counts_;
};

/// Returns r if the sum equals the rational r exactly.
/// Throws Error(Errc::not_rational) when the reduction leaves a nonconstant remainder.
Rational cyclotomic_reduce(const CyclotomicSum& sum);

}  // namespace frobcode
