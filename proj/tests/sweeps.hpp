// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Exhaustive and seeded sweeps shared by the unit tests and the acceptance
// runner.

#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "frobcode/bounds.hpp"
#include "frobcode/error.hpp"
#include "frobcode/families.hpp"
#include "oracles.hpp"

namespace sweep {

using namespace frobcode;

struct Tally {
    std::size_t codes = 0;
    std::map<std::string, std::size_t> applicable;
    std::map<std::string, std::size_t> violated;
    std::map<std::string, std::size_t> lemma_checked;
    std::map<std::string, std::size_t> lemma_failed;
    std::vector<Matrix> weak_counterexamples;

    std::size_t violations_except(const std::string& skip) const {
        std::size_t total = 0;
        for (const auto& [k, v] : violated) total += k == skip ? 0 : v;
        return total;
    }
    std::size_t lemma_failures() const {
        std::size_t total = 0;
        for (const auto& [k, v] : lemma_failed) total += v;
        return total;
    }
};

inline oracle::WordSet word_set(const LinearCode& c) {
    oracle::WordSet out;
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace(c.word(i).begin(), c.word(i).end());
    return out;
}

/// All distinct codes generated by 1..max_rows rows of length n.
inline std::vector<LinearCode> codes_up_to(const WeightTablePtr& t, std::size_t n, std::size_t max_rows) {
    const std::size_t q = t->ring().size();
    std::vector<LinearCode> out;
    std::set<oracle::WordSet> seen;
    for (std::size_t k = 1; k <= max_rows; ++k) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < n * k; ++i) count *= q;
        for (std::size_t idx = 0; idx < count; ++idx) {
            Matrix g(k, Word(n));
            std::size_t v = idx;
            for (Word& row : g) {
                for (Element& e : row) {
                    e = static_cast<Element>(v % q);
                    v /= q;
                }
            }
            LinearCode code = build_code(t, n, g);
            if (seen.insert(word_set(code)).second) out.push_back(std::move(code));
        }
    }
    return out;
}

inline void note(Tally& t, const std::string& lemma, bool ok) {
    ++t.lemma_checked[lemma];
    if (!ok) ++t.lemma_failed[lemma];
}

/// Bound reports plus Lemmas 2, 4, 5, 6, Cor. 1 and the chain certificate.
inline void check_code(const LinearCode& code, Tally& tally) {
    ++tally.codes;
    const Ring& r = code.ring();
    for (const BoundReport& b : check_all(code)) {
        if (!b.applicable) continue;
        ++tally.applicable[bound_name(b.kind)];
        if (!b.satisfied) {
            ++tally.violated[bound_name(b.kind)];
            if (b.kind == BoundKind::singleton_weak) tally.weak_counterexamples.push_back(code.generators());
        }
    }
    note(tally, "chain", residual_chain(code).all_checks());

    const auto d = code.min_hom_norm();
    if (!d) return;
    const oracle::WordSet all = word_set(code);
    const Rational n(static_cast<std::int64_t>(code.length()));
    const std::size_t lmin = *code.min_hamming();
    const bool premise = n <= *d;
    const std::size_t q_all = max_cyclic_size(code, false);
    const std::size_t p_all = max_cyclic_size(code, true);

    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::size_t l = code.hamming(i);
        if (l == 0) continue;
        const oracle::Vec c(code.word(i).begin(), code.word(i).end());
        const std::set<std::size_t> s = oracle::supp(c);
        const oracle::WordSet rc = oracle::left_multiples(r, c);

        if (Rational(static_cast<std::int64_t>(l)) < *d) {
            // Lemma 2 and Cor. 1
            note(tally, "lemma2", oracle::sho(all, s) == rc && word_set(shorten(code, code.word(i))) == rc);
            const LinearCode res = residual(code, code.word(i));
            bool cor1 = res.length() == code.length() - l && res.size() * rc.size() == code.size();
            if (const auto dr = res.min_hom_norm()) cor1 = cor1 && *dr >= *d - Rational(static_cast<std::int64_t>(l));
            note(tally, "cor1", cor1);
        }
        if (l == lmin) {
            // Lemma 4, and Lemma 5 under gamma l < d
            bool lemma4 = true;
            try {
                const MinHammingStructure st = min_hamming_word_structure(code, code.word(i));
                for (const auto& [pos, u] : st.units) lemma4 = lemma4 && r.is_unit(u) && r.mul(st.alpha, u) == c[pos];
            } catch (const Error&) {
                lemma4 = false;
            }
            note(tally, "lemma4", lemma4);
            if (Rational(static_cast<std::int64_t>(lmin)) < *d) {
                bool simple = true;
                for (const oracle::Vec& other : all) {
                    if (oracle::hamming(other) == 0 || !rc.count(other)) continue;
                    simple = simple && oracle::left_multiples(r, other) == rc;
                }
                note(tally, "lemma5", simple && cyclic_submodule_is_simple(code, code.word(i)));
            }
        }
        if (premise && l < code.length()) {
            // Lemma 6
            const LinearCode res = residual(code, code.word(i));
            bool lemma6 = true;
            for (std::size_t j = 0; j < res.size(); ++j) {
                const std::size_t size = cyclic_size(r, res.word(j));
                lemma6 = lemma6 && size <= q_all;
                if (res.hamming(j) < code.length() - l) lemma6 = lemma6 && size <= p_all;
            }
            note(tally, "lemma6", lemma6);
        }
    }
}

inline Tally soundness(const char* ring, std::size_t max_length, std::size_t max_rows = 2) {
    const WeightTablePtr t = hom_weight_table(build_ring(ring));
    Tally tally;
    for (std::size_t n = 1; n <= max_length; ++n) {
        for (const LinearCode& code : codes_up_to(t, n, max_rows)) check_code(code, tally);
    }
    return tally;
}

/// Every submodule of R^n, by closing {0} under adding one cyclic summand.
inline std::vector<LinearCode> all_submodules(const WeightTablePtr& t, std::size_t n) {
    const Ring& r = t->ring();
    std::vector<oracle::Vec> vectors;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= r.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        oracle::Vec v(n);
        std::size_t x = idx;
        for (Element& e : v) {
            e = static_cast<Element>(x % r.size());
            x /= r.size();
        }
        vectors.push_back(v);
    }
    std::map<oracle::WordSet, Matrix> found{{oracle::WordSet{oracle::Vec(n, 0)}, Matrix{}}};
    std::vector<std::pair<oracle::WordSet, Matrix>> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<std::pair<oracle::WordSet, Matrix>> next;
        for (const auto& [words, gens] : frontier) {
            for (const oracle::Vec& v : vectors) {
                if (words.count(v)) continue;
                Matrix g = gens;
                g.push_back(v);
                oracle::WordSet span = oracle::span(r, g, n);
                if (found.emplace(span, g).second) next.emplace_back(std::move(span), std::move(g));
            }
        }
        frontier = std::move(next);
    }
    std::vector<LinearCode> out;
    for (const auto& [words, gens] : found) out.push_back(build_code(t, n, gens));
    return out;
}

struct Lemma1Result {
    std::size_t pairs = 0;
    std::size_t failures = 0;
};

/// Lemma 1 by three routes: enumeration in the library, its closed form, and
/// the oracle weight table summed over the oracle's own word set.
inline bool lemma1_holds(const LinearCode& code, const std::vector<oracle::Q>& table, const oracle::Vec& x) {
    const Rational lhs = coset_average(code, x);
    if (lhs != coset_average_closed_form(code, x)) return false;
    oracle::Q sum = 0;
    const Ring& r = code.ring();
    for (std::size_t i = 0; i < code.size(); ++i) {
        const oracle::Vec c(code.word(i).begin(), code.word(i).end());
        sum += oracle::word_weight(table, oracle::add(r, x, c));
    }
    sum /= static_cast<long long>(code.size());
    oracle::Q closed = static_cast<long long>(code.support_size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!code.in_support(i)) closed += table[x[i]];
    }
    return lhs.raw() == sum && sum == closed;
}

inline Lemma1Result lemma1_exhaustive_z4(std::size_t max_length) {
    const WeightTablePtr t = hom_weight_table(build_ring("Z4"));
    const auto table = *oracle::homogeneous_weight_by_system(t->ring());
    Lemma1Result res;
    for (std::size_t n = 1; n <= max_length; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 4;
        for (const LinearCode& code : all_submodules(t, n)) {
            for (std::size_t idx = 0; idx < total; ++idx) {
                oracle::Vec x(n);
                std::size_t v = idx;
                for (Element& e : x) {
                    e = static_cast<Element>(v % 4);
                    v /= 4;
                }
                ++res.pairs;
                if (!lemma1_holds(code, table, x)) ++res.failures;
            }
        }
    }
    return res;
}

inline Lemma1Result lemma1_random(std::size_t count, std::uint64_t seed) {
    const char* rings[] = {"Z4", "Z8", "Z9", "Z6", "GF(4)", "GF(8)", "CHAIN(2)", "CHAIN(3)", "M2(GF(2))", "Z2xZ3"};
    std::map<std::string, std::pair<WeightTablePtr, std::vector<oracle::Q>>> tables;
    for (const char* s : rings) {
        const WeightTablePtr t = hom_weight_table(build_ring(s));
        tables[s] = {t, *oracle::homogeneous_weight_by_system(t->ring())};
    }
    std::mt19937_64 rng(seed);
    Lemma1Result res;
    for (std::size_t trial = 0; trial < count; ++trial) {
        const auto& [t, table] = tables[rings[rng() % std::size(rings)]];
        const std::size_t q = t->ring().size();
        const std::size_t n = 4 + rng() % 5;
        const std::size_t k = 1 + rng() % (q >= 9 ? 2 : 3);
        Matrix g(k, Word(n));
        for (Word& row : g) {
            for (Element& e : row) e = static_cast<Element>(rng() % 3 == 0 ? 0 : rng() % q);
        }
        // zero out a column now and then so supp(C) is proper
        if (rng() % 2) {
            const std::size_t col = rng() % n;
            for (Word& row : g) row[col] = 0;
        }
        const LinearCode code = build_code(t, n, g);
        oracle::Vec x(n);
        for (Element& e : x) e = static_cast<Element>(rng() % q);
        ++res.pairs;
        if (!lemma1_holds(code, table, x)) ++res.failures;
    }
    return res;
}

}  // namespace sweep
