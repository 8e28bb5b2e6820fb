// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "frobcode/cyclotomic.hpp"
#include "frobcode/rational.hpp"
#include "frobcode/ring.hpp"

namespace frobcode {

/// Homogeneous weight of a ring, stored normalized: normalized(x) = w(x) / gamma.
///
/// Besides the exact rationals the table keeps every value scaled by a common
/// denominator so that word weights can be summed in 64-bit integers.
class HomWeightTable {
public:
    /// Wraps arbitrary per-element values; no axioms are checked here.
    HomWeightTable(RingPtr ring, Rational gamma, std::vector<Rational> normalized);

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const Rational& gamma() const { return gamma_; }

    const Rational& normalized(Element x) const { return normalized_[x]; }
    const std::vector<Rational>& normalized_values() const { return normalized_; }
    /// w(x) = gamma * normalized(x).
    Rational weight(Element x) const { return gamma_ * normalized_[x]; }

    /// Common denominator D of all normalized values.
    std::int64_t scale() const { return scale_; }
    /// D * normalized(x), exact.
    std::int64_t scaled(Element x) const { return scaled_[x]; }
    std::int64_t scaled_word(std::span<const Element> word) const;

private:
    RingPtr ring_;
    Rational gamma_;
    std::vector<Rational> normalized_;
    std::int64_t scale_ = 1;
    std::vector<std::int64_t> scaled_;
};

using WeightTablePtr = std::shared_ptr<const HomWeightTable>;

/// normalized(x) = 1 - (1/|R^x|) * sum_{u in R^x} zeta^{char_exp(x u)}, reduced exactly.
/// Throws Error(Errc::not_rational) for a malformed character and
/// Error(Errc::internal) if the result fails the H1/H2 check.
WeightTablePtr hom_weight_table(RingPtr ring, const Rational& gamma = Rational(1));

/// Character sum  sum_{u in R^x} chi(x u)  (or chi(u x) for Side::right).
CyclotomicSum unit_character_sum(const Ring& ring, Element x, Side side = Side::left);

/// Exhaustive H1 (Rx = Ry implies equal weight) and H2 (normalized sum over
/// each nonzero Rx equals |Rx|) together with w(0) = 0.
bool verify_axioms(const HomWeightTable& table);

/// Example weight of a local ring: 0 at 0, q/(q-1) on the nonzero socle, 1
/// elsewhere (normalized). Throws Error(Errc::not_local).
WeightTablePtr local_socle_weight_table(RingPtr ring, const Rational& gamma = Rational(1));

/// Sum of normalized weights over the coordinates of a word.
Rational extend_weight(const HomWeightTable& table, std::span<const Element> word);

/// gamma preset reproducing the textbook weights: (q-1)/q on GF(q), 3/2 on
/// M2(GF(2)), 1 otherwise.
Rational preset_gamma(const RingSpec& spec);

}  // namespace frobcode
