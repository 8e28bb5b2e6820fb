// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/families.hpp"

#include <algorithm>
#include <set>

#include "frobcode/error.hpp"

namespace frobcode {

LinearCode simplex(WeightTablePtr weights, std::size_t m, std::uint64_t length_cap) {
    if (m == 0) throw Error(Errc::invalid_spec, "simplex code needs m >= 1");
    const Ring& r = weights->ring();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (total > (length_cap + 1) / r.size()) {
            throw Error(Errc::cap_exceeded, "simplex length |R|^m - 1 exceeds the cap of " + std::to_string(length_cap));
        }
        total *= r.size();
    }
    Matrix g(m, Word{});
    std::vector<Element> column(m, Ring::zero());
    for (std::uint64_t c = 1; c < total; ++c) {
        // column index c in base |R|, first coordinate most significant
        std::uint64_t code = c;
        for (std::size_t i = m; i-- > 0;) {
            column[i] = static_cast<Element>(code % r.size());
            code /= r.size();
        }
        for (std::size_t i = 0; i < m; ++i) g[i].push_back(column[i]);
    }
    return build_code(std::move(weights), static_cast<std::size_t>(total - 1), g);
}

Matrix octacode_generator() {
    return {
        {1, 0, 0, 0, 3, 1, 2, 1},
        {0, 1, 0, 0, 1, 2, 3, 1},
        {0, 0, 1, 0, 3, 3, 3, 2},
        {0, 0, 0, 1, 2, 3, 1, 1},
    };
}

LinearCode octacode() { return build_code(hom_weight_table(build_ring(RingSpec::zm(4))), octacode_generator()); }

GrayWord gray_map(const Ring& ring, std::span<const Element> word) {
    if (ring.spec() != RingSpec::zm(4)) throw Error(Errc::wrong_ring, "Gray map is defined on Z4 only, got " + ring.name());
    static constexpr std::uint8_t kBits[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    GrayWord out;
    out.reserve(2 * word.size());
    for (Element e : word) {
        out.push_back(kBits[e][0]);
        out.push_back(kBits[e][1]);
    }
    return out;
}

std::vector<GrayWord> gray_image(const LinearCode& code) {
    std::set<GrayWord> seen;
    std::vector<GrayWord> out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        GrayWord g = gray_map(code.ring(), code.word(i));
        if (seen.insert(g).second) out.push_back(std::move(g));
    }
    return out;
}

namespace {

// q for a local ring with rad^2 = 0 != rad and |rad| = q; throws otherwise.
std::size_t length_two_chain_residue(const Ring& r) {
    if (!is_local(r)) throw Error(Errc::not_chain_ring, r.name() + " is not local");
    const std::vector<Element> rad = radical(r);
    const std::size_t q = r.size() / rad.size();
    bool square_zero = true;
    for (Element a : rad) {
        for (Element b : rad) square_zero = square_zero && r.mul(a, b) == Ring::zero();
    }
    if (rad.size() < 2 || !square_zero || rad.size() != q) {
        throw Error(Errc::not_chain_ring, r.name() + " is not a chain ring of length 2");
    }
    return q;
}

}  // namespace

std::vector<std::pair<Element, Element>> hjelmslev_points(const Ring& r) {
    length_two_chain_residue(r);
    std::set<std::pair<Element, Element>> reps;
    for (Element a = 0; a < r.size(); ++a) {
        for (Element b = 0; b < r.size(); ++b) {
            if (!r.is_unit(a) && !r.is_unit(b)) continue;
            // generators of xR inside R^2 \ rad(R^2) are exactly x u, u a unit
            std::pair<Element, Element> best{a, b};
            for (Element u : r.units()) best = std::min(best, std::pair{r.mul(a, u), r.mul(b, u)});
            reps.insert(best);
        }
    }
    return {reps.begin(), reps.end()};
}

LinearCode hjelmslev_line(WeightTablePtr weights) {
    const Ring& r = weights->ring();
    const auto points = hjelmslev_points(r);
    Matrix g(2);
    for (const auto& [a, b] : points) {
        g[0].push_back(a);
        g[1].push_back(b);
    }
    return build_code(std::move(weights), points.size(), g);
}

ResidualChain residual_chain(const LinearCode& code) {
    ResidualChain chain;
    chain.stages.push_back({code, std::nullopt, std::nullopt, std::nullopt});
    while (true) {
        const LinearCode& current = chain.stages.back().code;
        const Ring& r = current.ring();
        std::optional<std::size_t> pick;
        std::size_t pick_size = 0;
        for (std::size_t i = 0; i < current.size(); ++i) {
            const std::size_t h = current.hamming(i);
            if (h == 0 || h >= current.length()) continue;
            const std::size_t s = cyclic_size(r, current.word(i));
            if (!pick || s > pick_size || (s == pick_size && h < current.hamming(*pick))) {
                pick = i;
                pick_size = s;
            }
        }
        if (!pick) break;
        ChainStage& stage = chain.stages.back();
        stage.chosen = Word(current.word(*pick).begin(), current.word(*pick).end());
        stage.chosen_ell = current.hamming(*pick);
        stage.chosen_cyclic = pick_size;
        LinearCode next = residual(current, *stage.chosen);
        chain.stages.push_back({std::move(next), std::nullopt, std::nullopt, std::nullopt});
    }

    const std::size_t r = chain.steps();
    chain.premise = code.min_hom_norm() && Rational(static_cast<std::int64_t>(code.length())) <= *code.min_hom_norm();
    chain.sizes_divide = true;
    chain.weights_descend = true;
    std::size_t product = 1;
    for (std::size_t i = 0; i < r; ++i) {
        const ChainStage& s = chain.stages[i];
        const LinearCode& next = chain.stages[i + 1].code;
        product *= *s.chosen_cyclic;
        chain.sizes_divide = chain.sizes_divide && next.size() * *s.chosen_cyclic == s.code.size();
        const Rational floor_value = *s.code.min_hom_norm() - Rational(static_cast<std::int64_t>(*s.chosen_ell));
        const auto next_d = next.min_hom_norm();
        chain.weights_descend = chain.weights_descend && floor_value > Rational(0) && (!next_d || *next_d >= floor_value);
    }
    const LinearCode& last = chain.stages.back().code;
    product *= last.size();
    chain.product_formula = product == code.size();
    chain.final_constant_weight = true;
    for (std::size_t i = 0; i < last.size(); ++i) {
        if (last.hamming(i) != 0 && last.hamming(i) != last.length()) chain.final_constant_weight = false;
    }
    chain.final_size_bounded = last.size() <= last.ring().size();
    if (r == 0) {
        chain.chain_inequality = true;
    } else {
        const Rational rc(static_cast<std::int64_t>(*chain.stages[0].chosen_cyclic));
        chain.chain_rhs = (rc - Rational(1)) / rc * *code.min_hom_norm() + Rational(static_cast<std::int64_t>(r));
        chain.chain_inequality = Rational(static_cast<std::int64_t>(code.length())) >= *chain.chain_rhs;
    }
    return chain;
}

}  // namespace frobcode
