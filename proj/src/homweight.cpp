// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/homweight.hpp"

#include <map>
#include <numeric>

#include "frobcode/error.hpp"

namespace frobcode {

HomWeightTable::HomWeightTable(RingPtr ring, Rational gamma, std::vector<Rational> normalized)
    : ring_(std::move(ring)), gamma_(std::move(gamma)), normalized_(std::move(normalized)) {
    if (!ring_ || normalized_.size() != ring_->size()) {
        throw Error(Errc::dimension_mismatch, "weight table size does not match the ring");
    }
    if (gamma_.sign() <= 0) throw Error(Errc::invalid_spec, "gamma must be positive");
    BigInt lcm = 1;
    for (const Rational& v : normalized_) {
        const BigInt d = v.denominator();
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    if (lcm > (BigInt(1) << 40)) throw Error(Errc::internal, "weight denominators too large for scaled arithmetic");
    scale_ = lcm.convert_to<std::int64_t>();
    scaled_.reserve(normalized_.size());
    for (const Rational& v : normalized_) {
        const BigInt s = v.numerator() * (lcm / v.denominator());
        if (boost::multiprecision::abs(s) > (BigInt(1) << 40)) throw Error(Errc::internal, "weight value too large");
        scaled_.push_back(s.convert_to<std::int64_t>());
    }
}

std::int64_t HomWeightTable::scaled_word(std::span<const Element> word) const {
    std::int64_t total = 0;
    for (Element c : word) total += scaled_[c];
    return total;
}

CyclotomicSum unit_character_sum(const Ring& ring, Element x, Side side) {
    CyclotomicSum sum(ring.additive_exponent());
    for (Element u : ring.units()) sum.add(ring.char_exp(side == Side::left ? ring.mul(x, u) : ring.mul(u, x)));
    return sum;
}

WeightTablePtr hom_weight_table(RingPtr ring, const Rational& gamma) {
    const Ring& r = *ring;
    const Rational unit_count(static_cast<std::int64_t>(r.units().size()));
    std::vector<Rational> values;
    values.reserve(r.size());
    for (Element x = 0; x < r.size(); ++x) {
        values.push_back(Rational(1) - cyclotomic_reduce(unit_character_sum(r, x)) / unit_count);
    }
    auto table = std::make_shared<const HomWeightTable>(std::move(ring), gamma, std::move(values));
    if (!verify_axioms(*table)) {
        throw Error(Errc::internal, "character-formula weight on " + table->ring().name() + " violates H1/H2");
    }
    return table;
}

bool verify_axioms(const HomWeightTable& table) {
    const Ring& r = table.ring();
    if (!table.normalized(0).is_zero()) return false;
    std::map<std::vector<Element>, Rational> by_ideal;
    for (Element x = 0; x < r.size(); ++x) {
        const Ideal ideal = principal_ideal(r, x, Side::left);
        auto [it, inserted] = by_ideal.emplace(ideal.members, table.normalized(x));
        if (!inserted && it->second != table.normalized(x)) return false;  // H1
        if (x == 0) continue;
        Rational sum(0);
        for (Element y : ideal.members) sum += table.normalized(y);
        if (sum != Rational(static_cast<std::int64_t>(ideal.size()))) return false;  // H2
    }
    return true;
}

WeightTablePtr local_socle_weight_table(RingPtr ring, const Rational& gamma) {
    const Ring& r = *ring;
    const std::vector<Element> soc = socle_local(r);
    const auto q = static_cast<std::int64_t>(residue_field_size(r));
    std::vector<Rational> values(r.size(), Rational(1));
    values[0] = Rational(0);
    for (Element x : soc) {
        if (x != 0) values[x] = Rational(q, q - 1);
    }
    return std::make_shared<const HomWeightTable>(std::move(ring), gamma, std::move(values));
}

Rational extend_weight(const HomWeightTable& table, std::span<const Element> word) {
    return Rational(table.scaled_word(word), table.scale());
}

Rational preset_gamma(const RingSpec& spec) {
    if (spec.kind == RingSpec::Kind::gf) {
        const auto q = static_cast<std::int64_t>(spec.cardinality());
        return Rational(q - 1, q);
    }
    if (spec.kind == RingSpec::Kind::mat && spec.dim == 2 && spec.children[0].kind == RingSpec::Kind::gf &&
        spec.children[0].cardinality() == 2) {
        return Rational(3, 2);
    }
    return Rational(1);
}

}  // namespace frobcode
