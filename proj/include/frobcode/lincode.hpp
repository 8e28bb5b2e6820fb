// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobcode/homweight.hpp"

namespace frobcode {

using Word = std::vector<Element>;
/// Generator matrix as a list of rows.
using Matrix = std::vector<Word>;
/// Zero-based coordinate positions, ascending.
using Positions = std::vector<std::size_t>;

/// Cap on the number of messages |R|^k swept by build_code.
inline constexpr std::uint64_t kDefaultMessageCap = std::uint64_t{1} << 24;

/// Left-linear code over a ring, stored as its explicit word set.
///
/// Words are kept in first-occurrence order of the message sweep (messages in
/// lexicographic order, first row most significant); that position doubles as
/// the "smallest message" tie-break used by the bound and chain selectors.
class LinearCode {
public:
    /// Takes an already-closed word list (flat, `length` elements per word) in
    /// canonical order. Use build_code() for generator matrices.
    LinearCode(WeightTablePtr weights, std::size_t length, Matrix generators, std::vector<Element> flat_words);

    const HomWeightTable& weights() const { return *weights_; }
    const WeightTablePtr& weights_ptr() const { return weights_; }
    const Ring& ring() const { return weights_->ring(); }

    std::size_t length() const { return length_; }
    /// M = number of words.
    std::size_t size() const { return word_count_; }
    const Matrix& generators() const { return generators_; }

    std::span<const Element> word(std::size_t i) const {
        return {words_.data() + i * length_, length_};
    }
    std::optional<std::size_t> find(std::span<const Element> w) const;
    bool contains(std::span<const Element> w) const { return find(w).has_value(); }

    /// Normalized homogeneous weight of word i, times weights().scale().
    std::int64_t scaled_weight(std::size_t i) const { return scaled_weight_[i]; }
    Rational normalized_weight(std::size_t i) const { return Rational(scaled_weight_[i], weights_->scale()); }
    std::size_t hamming(std::size_t i) const { return hamming_[i]; }

    bool in_support(std::size_t position) const { return support_mask_[position] != 0; }
    Positions support() const;
    /// l(C) = |supp(C)|.
    std::size_t support_size() const { return support_size_; }

    /// Absent for the zero code.
    std::optional<std::size_t> min_hamming() const { return min_hamming_; }
    /// d / gamma; absent for the zero code.
    std::optional<Rational> min_hom_norm() const;

private:
    WeightTablePtr weights_;
    std::size_t length_;
    Matrix generators_;
    std::vector<Element> words_;
    std::size_t word_count_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::int64_t> scaled_weight_;
    std::vector<std::size_t> hamming_;
    std::vector<std::uint8_t> support_mask_;
    std::size_t support_size_ = 0;
    std::optional<std::size_t> min_hamming_;
    std::optional<std::int64_t> min_scaled_weight_;
};

/// Enumerates {x G : x in R^k}. Throws Error(cap_exceeded) if |R|^k > message_cap,
/// Error(dimension_mismatch) for ragged rows or out-of-range entries.
LinearCode build_code(WeightTablePtr weights, const Matrix& generators, std::uint64_t message_cap = kDefaultMessageCap);
/// Same, with an explicit length (required when `generators` is empty).
LinearCode build_code(WeightTablePtr weights, std::size_t length, const Matrix& generators,
                      std::uint64_t message_cap = kDefaultMessageCap);

Positions support(std::span<const Element> word);
/// Hamming weight l(c).
std::size_t ell(std::span<const Element> word);

/// Sho(C, S): words supported inside S. Keeps length n unless `compact`, in
/// which case only the coordinates in S are retained.
LinearCode shorten(const LinearCode& code, const Positions& positions, bool compact = false);
LinearCode shorten(const LinearCode& code, std::span<const Element> word, bool compact = false);

/// Res(C, S): projection onto the coordinates outside S.
LinearCode residual(const LinearCode& code, const Positions& positions);
LinearCode residual(const LinearCode& code, std::span<const Element> word);

/// (1/|C|) * sum_{c in C} normalized weight of x + c, by enumeration.
Rational coset_average(const LinearCode& code, std::span<const Element> x);
/// l(C) + sum_{i not in supp(C)} normalized weight of x_i.
Rational coset_average_closed_form(const LinearCode& code, std::span<const Element> x);

struct CyclicSubmodule {
    Word generator;
    std::vector<Word> members;  // r c for r = 0, 1, ... deduplicated in that order
    std::size_t size() const { return members.size(); }
};

/// Rc for a word over the ring (no membership requirement).
CyclicSubmodule left_multiples(const Ring& ring, std::span<const Element> word);
/// Rc for a codeword; throws Error(Errc::not_in_code) if c is not in C.
CyclicSubmodule cyclic_submodule(const LinearCode& code, std::span<const Element> word);
/// |Rc| = |R| / |left annihilator of c|, without enumerating Rc.
std::size_t cyclic_size(const Ring& ring, std::span<const Element> word);

struct MinHammingStructure {
    Element alpha = 0;
    std::vector<std::pair<std::size_t, Element>> units;  // (position, u_i) with c_i = alpha u_i
};

/// Writes a minimum-Hamming codeword as c_i = alpha u_i with units u_i and
/// checks |Rc| = |R alpha|. Throws Error(Errc::structure_violation) if c is not
/// of minimum Hamming weight or no decomposition exists.
MinHammingStructure min_hamming_word_structure(const LinearCode& code, std::span<const Element> word);

/// True iff every nonzero c' in C with Rc' contained in Rc generates all of Rc.
bool cyclic_submodule_is_simple(const LinearCode& code, std::span<const Element> word);

}  // namespace frobcode
