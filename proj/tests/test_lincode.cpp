// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "frobcode/error.hpp"
#include "frobcode/families.hpp"
#include "frobcode/lincode.hpp"
#include "oracles.hpp"

using namespace frobcode;

namespace {

oracle::WordSet words_of(const LinearCode& c) {
    oracle::WordSet out;
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace(c.word(i).begin(), c.word(i).end());
    return out;
}

std::set<std::size_t> as_set(const Positions& p) { return {p.begin(), p.end()}; }

WeightTablePtr z4() {
    static const WeightTablePtr t = hom_weight_table(build_ring("Z4"));
    return t;
}

}  // namespace

TEST_SUITE("lincode") {

TEST_CASE("span agrees with closure") {
    std::mt19937_64 rng(7);
    for (const char* s : {"Z4", "GF(4)", "CHAIN(2)", "M2(GF(2))", "Z6"}) {
        const auto t = hom_weight_table(build_ring(s));
        const Ring& r = t->ring();
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + rng() % 3, k = 1 + rng() % 2;
            Matrix g(k, Word(n));
            for (Word& row : g) for (Element& e : row) e = rng() % r.size();
            const LinearCode code = build_code(t, n, g);
            CHECK(words_of(code) == oracle::span(r, g, n));
            for (std::size_t i = 0; i < code.size(); ++i) {
                CHECK(code.find(code.word(i)) == i);
                CHECK(code.hamming(i) == oracle::hamming(oracle::Vec(code.word(i).begin(), code.word(i).end())));
            }
        }
    }
}

TEST_CASE("zero code and zero-length code") {
    const LinearCode zero = build_code(z4(), 3, Matrix{});
    CHECK(zero.size() == 1);
    CHECK_FALSE(zero.min_hom_norm().has_value());
    CHECK_FALSE(zero.min_hamming().has_value());
    const LinearCode empty = build_code(z4(), 0, Matrix{{}});
    CHECK(empty.size() == 1);
    CHECK_THROWS_AS(build_code(z4(), 3, Matrix{{1, 2}}), Error);
}

TEST_CASE("octacode parameters") {
    const LinearCode c = octacode();
    CHECK(c.size() == 256);
    CHECK(c.length() == 8);
    CHECK(*c.min_hom_norm() == Rational(6));
    CHECK(*c.min_hamming() == 4);
    CHECK(c.support_size() == 8);
}

TEST_CASE("shorten and residual match the set definitions") {
    const LinearCode c = octacode();
    const oracle::WordSet all = words_of(c);
    for (const Positions& s : {Positions{}, Positions{0}, Positions{3, 5, 6, 7}, Positions{0, 1, 2, 3, 4, 5, 6, 7}}) {
        const LinearCode sh = shorten(c, s);
        const LinearCode re = residual(c, s);
        CHECK(words_of(sh) == oracle::sho(all, as_set(s)));
        CHECK(words_of(re) == oracle::res(all, as_set(s)));
        CHECK(re.length() == 8 - s.size());
        // C / Sho(C,S) is isomorphic to Res(C,S)
        CHECK(sh.size() * re.size() == c.size());
    }
    const LinearCode compact = shorten(c, Positions{3, 5, 6, 7}, true);
    CHECK(compact.length() == 4);
}

TEST_CASE("octacode: shortening by c is Rc and the residual is (4,128,2)") {
    const LinearCode c = octacode();
    const Word w{0, 0, 0, 2, 0, 2, 2, 2};
    REQUIRE(c.contains(w));
    const CyclicSubmodule rc = cyclic_submodule(c, w);
    CHECK(rc.size() == 2);
    CHECK(words_of(shorten(c, w)) == oracle::left_multiples(c.ring(), w));
    const LinearCode res = residual(c, w);
    CHECK(res.length() == 4);
    CHECK(res.size() == 128);
    CHECK(*res.min_hom_norm() == Rational(2));
}

TEST_CASE("coset average identity on small codes") {
    for (const Matrix& g : {Matrix{{1, 2, 0}}, Matrix{{2, 0, 2}, {0, 2, 0}}, Matrix{{0, 0, 0}}, Matrix{{1, 1, 3}, {0, 2, 2}}}) {
        const LinearCode code = build_code(z4(), 3, g);
        for (Element a = 0; a < 4; ++a)
            for (Element b = 0; b < 4; ++b)
                for (Element cc = 0; cc < 4; ++cc) {
                    const Word x{a, b, cc};
                    CHECK(coset_average(code, x) == coset_average_closed_form(code, x));
                }
    }
}

TEST_CASE("cyclic submodules") {
    const LinearCode s = simplex(z4(), 1);
    const Word w{1, 2, 3};
    CHECK(cyclic_submodule(s, w).size() == 4);
    CHECK(cyclic_size(s.ring(), w) == 4);
    const Word zero{0, 0, 0};
    CHECK(cyclic_submodule(s, zero).size() == 1);
    CHECK_THROWS_AS(cyclic_submodule(s, Word{1, 1, 1}), Error);
    CHECK(left_multiples(s.ring(), Word{1, 1, 1}).size() == 4);
}

TEST_CASE("minimum Hamming words factor through a single element") {
    const LinearCode c = build_code(z4(), Matrix{{2, 2, 0}, {0, 1, 1}});
    const MinHammingStructure st = min_hamming_word_structure(c, Word{2, 2, 0});
    CHECK(st.alpha == 2);
    REQUIRE(st.units.size() == 2);
    CHECK(st.units[0] == std::pair<std::size_t, Element>{0, 1});
    CHECK(st.units[1] == std::pair<std::size_t, Element>{1, 1});
    CHECK_THROWS_AS(min_hamming_word_structure(c, Word{2, 3, 1}), Error);

    const LinearCode octa = octacode();
    const MinHammingStructure o = min_hamming_word_structure(octa, Word{0, 0, 0, 2, 0, 2, 2, 2});
    CHECK(o.alpha == 2);

    const auto m2 = hom_weight_table(build_ring("M2(GF(2))"));
    const LinearCode sm = simplex(m2, 1);
    const Ring& r = sm.ring();
    for (std::size_t i = 0; i < sm.size(); ++i) {
        if (sm.hamming(i) != *sm.min_hamming()) continue;
        const MinHammingStructure ms = min_hamming_word_structure(sm, sm.word(i));
        for (const auto& [pos, u] : ms.units) {
            CHECK(r.is_unit(u));
            CHECK(r.mul(ms.alpha, u) == sm.word(i)[pos]);
        }
    }
}

TEST_CASE("simple cyclic submodules") {
    const LinearCode octa = octacode();
    CHECK(cyclic_submodule_is_simple(octa, Word{0, 0, 0, 2, 0, 2, 2, 2}));
    const LinearCode c = build_code(z4(), Matrix{{1, 1}});
    CHECK_FALSE(cyclic_submodule_is_simple(c, Word{1, 1}));
    CHECK(cyclic_submodule_is_simple(c, Word{2, 2}));
}

}
