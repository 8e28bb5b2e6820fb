// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations used by the test suites. Everything
// here works from the ring's operation tables and plain set closures; nothing
// touches characters, cyclotomic reduction or the LinearCode machinery.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobcode/ring.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using frobcode::Element;
using frobcode::Ring;
using Vec = std::vector<Element>;
using WordSet = std::set<Vec>;

inline std::set<Element> left_ideal(const Ring& r, Element x) {
    std::set<Element> out;
    for (Element a = 0; a < r.size(); ++a) out.insert(r.mul(a, x));
    return out;
}

/// Solves the H1/H2 system for gamma = 1 by exact Gaussian elimination:
///   w(0) = 0;  Rx = Ry  =>  w(x) = w(y);  sum_{y in Rx} w(y) = |Rx| for x != 0.
/// Returns nothing when the system is not uniquely solvable.
inline std::optional<std::vector<Q>> homogeneous_weight_by_system(const Ring& r) {
    const std::size_t n = r.size();
    std::vector<std::vector<Q>> rows;
    auto unit_row = [&](std::size_t i) {
        std::vector<Q> row(n + 1, Q(0));
        row[i] = 1;
        return row;
    };
    rows.push_back(unit_row(0));
    std::map<std::set<Element>, std::vector<Element>> by_ideal;
    for (Element x = 1; x < n; ++x) by_ideal[left_ideal(r, x)].push_back(x);
    for (const auto& [ideal, gens] : by_ideal) {
        for (std::size_t k = 1; k < gens.size(); ++k) {
            std::vector<Q> row(n + 1, Q(0));
            row[gens[0]] = 1;
            row[gens[k]] = -1;
            rows.push_back(row);
        }
        std::vector<Q> row(n + 1, Q(0));
        for (Element y : ideal) row[y] += 1;
        row[n] = Q(static_cast<long long>(ideal.size()));
        rows.push_back(row);
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        const Q inv = 1 / rows[rank][col];
        for (Q& v : rows[rank]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Q f = rows[i][col];
            for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][n] != 0) return std::nullopt;  // inconsistent
    }
    if (rank != n) return std::nullopt;  // underdetermined
    std::vector<Q> w(n);
    for (std::size_t i = 0; i < rank; ++i) w[pivot_col[i]] = rows[i][n];
    return w;
}

inline Vec add(const Ring& r, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.add(a[i], b[i]);
    return out;
}

inline Vec scale(const Ring& r, Element s, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.mul(s, a[i]);
    return out;
}

/// Left R-span of the rows by fixed-point closure.
inline WordSet span(const Ring& r, const std::vector<Vec>& rows, std::size_t length) {
    WordSet words{Vec(length, 0)};
    std::vector<Vec> frontier{Vec(length, 0)};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& w : frontier) {
            for (const Vec& g : rows) {
                for (Element s = 0; s < r.size(); ++s) {
                    Vec v = add(r, w, scale(r, s, g));
                    if (words.insert(v).second) next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return words;
}

inline WordSet left_multiples(const Ring& r, const Vec& c) {
    WordSet out;
    for (Element s = 0; s < r.size(); ++s) out.insert(scale(r, s, c));
    return out;
}

inline std::size_t hamming(const Vec& v) {
    std::size_t h = 0;
    for (Element e : v) h += e != 0;
    return h;
}

inline std::set<std::size_t> supp(const Vec& v) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) out.insert(i);
    }
    return out;
}

/// Sho(C, S) = {c in C : supp(c) inside S}, full length.
inline WordSet sho(const WordSet& code, const std::set<std::size_t>& s) {
    WordSet out;
    for (const Vec& c : code) {
        bool inside = true;
        for (std::size_t i : supp(c)) inside = inside && s.count(i);
        if (inside) out.insert(c);
    }
    return out;
}

/// Res(C, S) = projection onto the coordinates outside S.
inline WordSet res(const WordSet& code, const std::set<std::size_t>& s) {
    WordSet out;
    for (const Vec& c : code) {
        Vec p;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!s.count(i)) p.push_back(c[i]);
        }
        out.insert(p);
    }
    return out;
}

inline Q word_weight(const std::vector<Q>& table, const Vec& v) {
    Q s = 0;
    for (Element e : v) s += table[e];
    return s;
}

/// Minimum normalized weight over nonzero words; nothing for the zero code.
inline std::optional<Q> min_weight(const std::vector<Q>& table, const WordSet& code) {
    std::optional<Q> best;
    for (const Vec& c : code) {
        if (hamming(c) == 0) continue;
        const Q w = word_weight(table, c);
        if (!best || w < *best) best = w;
    }
    return best;
}

}  // namespace oracle
