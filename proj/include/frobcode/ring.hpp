// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "frobcode/ring_spec.hpp"

namespace frobcode {

/// Dense index of a ring element; 0 is the additive and 1 the multiplicative identity.
using Element = std::uint32_t;

enum class Side { left, right };

/// Default cardinality cap for ring construction: FROBCODE_CAP if set, else 512.
std::uint64_t default_ring_cap();

/// Finite ring with identity, stored as exact operation tables.
///
/// Instances are immutable and are shared between weight tables and codes
/// through `std::shared_ptr<const Ring>`.
class Ring {
public:
    /// Raw tables in the final index order. The constructor derives negation
    /// and the unit group and checks the identities sit at indices 0 and 1.
    struct Tables {
        RingSpec spec;
        std::size_t size = 0;
        std::vector<Element> add;  // size*size, row-major
        std::vector<Element> mul;  // size*size, row-major
        std::uint32_t additive_exponent = 1;
        std::vector<std::uint32_t> char_exp;  // values mod additive_exponent
        std::vector<std::string> labels;
    };

    explicit Ring(Tables tables);

    std::size_t size() const { return size_; }
    static constexpr Element zero() { return 0; }
    static constexpr Element one() { return 1; }

    Element add(Element a, Element b) const { return add_[a * size_ + b]; }
    Element mul(Element a, Element b) const { return mul_[a * size_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    bool is_unit(Element a) const { return unit_flag_[a] != 0; }
    const std::vector<Element>& units() const { return units_; }
    bool is_commutative() const { return commutative_; }

    /// Exponent N of the additive group; character values are N-th roots of unity.
    std::uint32_t additive_exponent() const { return additive_exponent_; }
    /// Canonical generating character: chi(x) = zeta_N^char_exp(x).
    std::uint32_t char_exp(Element x) const { return char_exp_[x]; }
    std::span<const std::uint32_t> char_exps() const { return char_exp_; }

    const std::string& label(Element x) const { return labels_[x]; }
    /// Parses an element literal; whitespace is ignored. Integer literals are
    /// reduced modulo m in Z_m. Throws Error(Errc::bad_literal).
    Element parse_element(std::string_view literal) const;

    const RingSpec& spec() const { return spec_; }
    std::string name() const { return spec_.str(); }

private:
    RingSpec spec_;
    std::size_t size_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> units_;
    std::vector<std::uint8_t> unit_flag_;
    bool commutative_ = true;
    std::uint32_t additive_exponent_;
    std::vector<std::uint32_t> char_exp_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Element> label_index_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Builds the ring denoted by `spec` with its canonical trace-type generating
/// character. Throws Error(invalid_spec | cap_exceeded | malformed_character).
RingPtr build_ring(const RingSpec& spec, std::uint64_t cap = default_ring_cap());
RingPtr build_ring(std::string_view spec_text, std::uint64_t cap = default_ring_cap());

/// Exhaustive check of the ring axioms (O(|R|^3)).
bool verify_ring_axioms(const Ring& ring);

/// Principal one-sided ideal Rx (left) or xR (right), members sorted ascending.
struct Ideal {
    Side side = Side::left;
    Element generator = 0;
    std::vector<Element> members;

    std::size_t size() const { return members.size(); }
    bool contains(Element x) const;
};

Ideal principal_ideal(const Ring& ring, Element x, Side side);

/// True iff no nonzero principal left or right ideal lies in the kernel of
/// x -> zeta_N^exponents[x]. Throws Error(Errc::malformed_character) when the
/// map is not additive mod N.
bool is_generating_character(const Ring& ring, std::span<const std::uint32_t> exponents, std::uint32_t modulus);

/// All minimal nonzero left ideals, ordered by smallest member.
std::vector<Ideal> minimal_left_ideals(const Ring& ring);

/// Jacobson radical by brute force: x with 1 - r x left-invertible for every r.
std::vector<Element> radical(const Ring& ring);

/// True iff R \ rad(R) is exactly the unit group.
bool is_local(const Ring& ring);

/// Socle of a local ring: {x : x rad = 0 = rad x}. Throws Error(Errc::not_local).
std::vector<Element> socle_local(const Ring& ring);

/// Size of the residue field R / rad(R) of a local ring. Throws Error(Errc::not_local).
std::size_t residue_field_size(const Ring& ring);

/// Size of the left annihilator {r : r x_i = 0 for all i} of a word.
std::size_t left_annihilator_size(const Ring& ring, std::span<const Element> word);

}  // namespace frobcode
