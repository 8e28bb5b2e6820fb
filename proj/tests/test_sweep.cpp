// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "sweeps.hpp"

using namespace frobcode;

TEST_SUITE("sweep") {

TEST_CASE("theorem-backed bounds and lemmas hold on every small code") {
    struct Case { const char* ring; std::size_t n; };
    for (Case c : {Case{"Z4", 4}, Case{"GF(4)", 3}, Case{"CHAIN(2)", 3}}) {
        CAPTURE(c.ring);
        const sweep::Tally t = sweep::soundness(c.ring, c.n);
        CHECK(t.codes > 0);
        CHECK(t.violations_except("singleton-weak") == 0);
        CHECK(t.lemma_failures() == 0);
        for (const char* lemma : {"lemma2", "cor1", "lemma4", "chain"}) CHECK(t.lemma_checked.at(lemma) > 0);
    }
}

TEST_CASE("Lemma 1 holds on every subcode of Z4^n, n <= 2") {
    const sweep::Lemma1Result r = sweep::lemma1_exhaustive_z4(2);
    CHECK(r.pairs > 0);
    CHECK(r.failures == 0);
}

TEST_CASE("Lemma 1 on seeded random codes") {
    const sweep::Lemma1Result r = sweep::lemma1_random(200, 1);
    CHECK(r.failures == 0);
}

TEST_CASE("the weak Singleton proposition has small counterexamples") {
    // Lee weight on Z4: gamma n <= d holds, yet the inequality fails.
    const auto t = hom_weight_table(build_ring("Z4"));
    const BoundReport single = singleton_weak(build_code(t, Matrix{{2, 2}}));
    CHECK(single.applicable);
    CHECK(*single.lhs == Rational(-1));
    CHECK(*single.rhs == Rational(0));
    CHECK_FALSE(single.satisfied);
    const LinearCode c = build_code(t, Matrix{{1, 1}, {2, 0}});
    CHECK(c.size() == 8);
    const BoundReport two = singleton_weak(c);
    CHECK(two.applicable);
    CHECK(*two.lhs == Rational(0));
    CHECK(*two.rhs == Rational(1));
    CHECK_FALSE(two.satisfied);
    // Thm. 3 and the chain certificate are fine on the same code.
    CHECK(singleton_p(c).satisfied);
    CHECK(residual_chain(c).all_checks());
}

}
