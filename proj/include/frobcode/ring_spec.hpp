// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frobcode {

/// Syntax tree of a ring description. Leaves are Z_m, GF(p^k) and
/// F_q[u]/(u^2); inner nodes are matrix rings and direct products.
struct RingSpec {
    enum class Kind { zm, gf, mat, prod, chain };

    Kind kind = Kind::zm;
    std::uint64_t modulus = 0;  // zm: m
    std::uint64_t prime = 0;    // gf, chain: characteristic p
    std::uint64_t degree = 0;   // gf, chain: q = p^degree
    std::uint64_t dim = 0;      // mat: n
    std::vector<RingSpec> children;  // mat: {inner}; prod: {left, right}

    static RingSpec zm(std::uint64_t m);
    static RingSpec gf(std::uint64_t p, std::uint64_t k);
    static RingSpec mat(std::uint64_t n, RingSpec inner);
    static RingSpec prod(RingSpec left, RingSpec right);
    /// F_q[u]/(u^2); q must be a prime power.
    static RingSpec chain(std::uint64_t q);

    /// Number of elements of the denoted ring, saturated at UINT64_MAX.
    std::uint64_t cardinality() const;

    /// Canonical text form; parse_ring_spec(s.str()) == s.
    std::string str() const;

    /// Throws Error(Errc::invalid_spec) for bad leaf parameters and
    /// Error(Errc::cap_exceeded) when cardinality() > cap.
    void validate(std::uint64_t cap) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Parses `Z<m>`, `GF(<p>^<k>)`, `GF(<q>)`, `M<n>(<spec>)`, `<spec>x<spec>`
/// (left-associative), `CHAIN(<q>)` and parenthesized groups, case-insensitively.
/// Throws SyntaxError with the byte offset, or Error(Errc::invalid_spec).
RingSpec parse_ring_spec(std::string_view text);

bool is_prime(std::uint64_t n);

/// Returns (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q);

}  // namespace frobcode
