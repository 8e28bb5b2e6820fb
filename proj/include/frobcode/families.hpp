// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobcode/lincode.hpp"

namespace frobcode {

/// Cap on the simplex length |R|^m - 1.
inline constexpr std::uint64_t kDefaultLengthCap = 4096;

/// Simplex code: m x (|R|^m - 1) generator whose columns are the nonzero
/// vectors of R^m in lexicographic index order (first coordinate most
/// significant). Throws Error(cap_exceeded) or Error(invalid_spec) for m = 0.
LinearCode simplex(WeightTablePtr weights, std::size_t m, std::uint64_t length_cap = kDefaultLengthCap);

/// The Z4-linear octacode from its systematic 4 x 8 generator matrix.
LinearCode octacode();
Matrix octacode_generator();

/// Gray image of a Z4 word: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
using GrayWord = std::vector<std::uint8_t>;

/// Throws Error(Errc::wrong_ring) unless the ring is Z4.
GrayWord gray_map(const Ring& ring, std::span<const Element> word);
/// Gray images of all codewords, deduplicated, in code order.
std::vector<GrayWord> gray_image(const LinearCode& code);

/// Point representatives of the projective Hjelmslev line over a chain ring
/// of length 2: one column per right cyclic submodule xR, x outside rad(R^2),
/// each given by its lexicographically smallest generator, sorted.
std::vector<std::pair<Element, Element>> hjelmslev_points(const Ring& ring);

/// Code generated by the 2 x (q^2 + q) matrix of Hjelmslev points.
/// Throws Error(Errc::not_chain_ring) unless rad(R)^2 = 0 != rad(R) with R local and |rad R| = q.
LinearCode hjelmslev_line(WeightTablePtr weights);

/// One step of a residual chain.
struct ChainStage {
    LinearCode code;
    std::optional<Word> chosen;          // c^i; absent at the final stage
    std::optional<std::size_t> chosen_ell;    // l(c^i)
    std::optional<std::size_t> chosen_cyclic;  // |Rc^i|
};

/// C_0 = C, C_{i+1} = Res(C_i, supp(c^i)) with c^i of largest |Rc^i| among
/// nonzero words with l(c^i) < n_i (ties: smaller l, then earlier message).
struct ResidualChain {
    std::vector<ChainStage> stages;
    std::size_t steps() const { return stages.empty() ? 0 : stages.size() - 1; }  // r

    // n <= d^. Without it Sho(C_i, c^i) may exceed Rc^i, so only the two
    // final-stage checks are owed.
    bool premise = false;
    // Certificate checks, all exact.
    bool sizes_divide = false;      // |C_{i+1}| = |C_i| / |Rc^i|
    bool weights_descend = false;   // d_{i+1} >= d_i - l_i > 0
    bool product_formula = false;   // |C| = |Rc^0| ... |Rc^{r-1}| |C_r|
    bool final_constant_weight = false;  // nonzero words of C_r have Hamming weight n_r
    bool final_size_bounded = false;     // |C_r| <= |R|
    bool chain_inequality = false;  // n >= (|Rc^0|-1)/|Rc^0| d^ + r
    /// Right-hand side of the chain inequality; absent when d is undefined.
    std::optional<Rational> chain_rhs;

    bool all_checks() const {
        return final_constant_weight && final_size_bounded &&
               (!premise || (sizes_divide && weights_descend && product_formula && chain_inequality));
    }
};

ResidualChain residual_chain(const LinearCode& code);

}  // namespace frobcode
