// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/bounds.hpp"

#include <algorithm>
#include <array>

#include "frobcode/error.hpp"

namespace frobcode {

namespace {

constexpr std::array<std::pair<BoundKind, const char*>, 7> kNames{{
    {BoundKind::averaging, "averaging"},
    {BoundKind::plotkin_refined, "plotkin-refined"},
    {BoundKind::plotkin_minham, "plotkin-minham"},
    {BoundKind::plotkin_minimal_ideal, "plotkin-minimal-ideal"},
    {BoundKind::singleton_p, "singleton-P"},
    {BoundKind::singleton_q, "singleton-Q"},
    {BoundKind::singleton_weak, "singleton-weak"},
}};

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

BoundReport start(BoundKind kind, Relation relation, const LinearCode& code) {
    BoundReport r;
    r.kind = kind;
    r.relation = relation;
    r.preconditions.push_back({"code has a nonzero word", code.min_hom_norm().has_value()});
    return r;
}

void finish(BoundReport& r, Rational lhs, Rational rhs) {
    r.applicable = std::all_of(r.preconditions.begin(), r.preconditions.end(), [](const Precondition& p) { return p.holds; });
    if (!r.applicable) return;
    r.satisfied = r.relation == Relation::at_most ? lhs <= rhs : lhs >= rhs;
    r.sharp = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
}

bool all_hold(const BoundReport& r) {
    return std::all_of(r.preconditions.begin(), r.preconditions.end(), [](const Precondition& p) { return p.holds; });
}

// M <= size * (d^ - weight) / (d^ - n), shared by the three Plotkin-type bounds.
void finish_plotkin(BoundReport& r, const LinearCode& code, std::size_t size, std::size_t weight) {
    if (!all_hold(r)) return;
    const Rational d = *code.min_hom_norm();
    const Rational n = as_rational(code.length());
    finish(r, as_rational(code.size()), as_rational(size) * (d - as_rational(weight)) / (d - n));
}

// n - ceil((base-1)/base * d^) >= ceil_log(ratio, base).
void finish_singleton(BoundReport& r, const LinearCode& code, std::size_t base, const Rational& ratio) {
    if (!all_hold(r) || base < 2) {
        r.applicable = false;
        return;
    }
    const Rational d = *code.min_hom_norm();
    const Rational b = as_rational(base);
    const Rational lhs = as_rational(code.length()) - Rational((b - Rational(1)) / b * d).ceil();
    finish(r, lhs, Rational(ceil_log(ratio, BigInt(base))));
}

}  // namespace

const char* bound_name(BoundKind kind) noexcept {
    for (const auto& [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<BoundKind> bound_from_name(std::string_view name) noexcept {
    for (const auto& [k, n] : kNames) {
        if (name == n) return k;
    }
    return std::nullopt;
}

BigInt ceil_log(const Rational& value, const BigInt& base) {
    if (value.sign() <= 0 || base < 2) throw Error(Errc::internal, "ceil_log needs value > 0 and base >= 2");
    // power = base^t, kept as a rational so negative t stays exact
    BigInt t = 0;
    Rational power(1);
    const Rational b(base);
    if (power >= value) {
        while (power / b >= value) {
            power /= b;
            t -= 1;
        }
    } else {
        while (power < value) {
            power *= b;
            t += 1;
        }
    }
    return t;
}

std::size_t max_cyclic_size(const LinearCode& code, bool proper_support_only) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (proper_support_only && (code.hamming(i) == 0 || code.hamming(i) >= code.length())) continue;
        best = std::max(best, cyclic_size(code.ring(), code.word(i)));
    }
    return best;
}

BoundReport averaging_bound(const LinearCode& code) {
    BoundReport r = start(BoundKind::averaging, Relation::at_most, code);
    r.preconditions.push_back({"l(C) = n", code.support_size() == code.length()});
    if (!all_hold(r)) return r;
    const Rational m = as_rational(code.size());
    finish(r, (m - Rational(1)) / m * *code.min_hom_norm(), as_rational(code.length()));
    return r;
}

BoundReport plotkin_refined(const LinearCode& code, std::span<const Element> word) {
    BoundReport r = start(BoundKind::plotkin_refined, Relation::at_most, code);
    const auto d = code.min_hom_norm();
    const std::size_t weight = ell(word);
    const Rational n = as_rational(code.length());
    r.preconditions.push_back({"c is a codeword", code.contains(word)});
    r.preconditions.push_back({"n < d/gamma", d && n < *d});
    r.preconditions.push_back({"l(c) < d/gamma", d && as_rational(weight) < *d});
    r.word = Word(word.begin(), word.end());
    const std::size_t rc = cyclic_size(code.ring(), word);
    r.parameters.emplace_back("|Rc|", as_rational(rc));
    r.parameters.emplace_back("l(c)", as_rational(weight));
    finish_plotkin(r, code, rc, weight);
    return r;
}

BoundReport plotkin_minham(const LinearCode& code) {
    BoundReport r = start(BoundKind::plotkin_minham, Relation::at_most, code);
    const auto d = code.min_hom_norm();
    const std::size_t l = code.min_hamming().value_or(0);
    const Rational n = as_rational(code.length());
    r.preconditions.push_back({"l <= n", l <= code.length()});
    r.preconditions.push_back({"n <= d/gamma", d && n <= *d});
    r.preconditions.push_back({"n < d/gamma (nonzero divisor)", d && n < *d});
    r.parameters.emplace_back("|R|", as_rational(code.ring().size()));
    r.parameters.emplace_back("l", as_rational(l));
    finish_plotkin(r, code, code.ring().size(), l);
    return r;
}

BoundReport plotkin_minimal_ideal(const LinearCode& code) {
    BoundReport r = start(BoundKind::plotkin_minimal_ideal, Relation::at_most, code);
    const auto d = code.min_hom_norm();
    const std::size_t l = code.min_hamming().value_or(0);
    const Rational n = as_rational(code.length());
    std::size_t q = 0;
    for (const Ideal& ideal : minimal_left_ideals(code.ring())) q = std::max(q, ideal.size());
    r.preconditions.push_back({"l < n", l < code.length()});
    r.preconditions.push_back({"n <= d/gamma", d && n <= *d});
    r.preconditions.push_back({"n < d/gamma (nonzero divisor)", d && n < *d});
    r.parameters.emplace_back("Q", as_rational(q));
    r.parameters.emplace_back("l", as_rational(l));
    finish_plotkin(r, code, q, l);
    return r;
}

BoundReport singleton_p(const LinearCode& code) {
    BoundReport r = start(BoundKind::singleton_p, Relation::at_least, code);
    const auto d = code.min_hom_norm();
    const Rational n = as_rational(code.length());
    const std::size_t p = max_cyclic_size(code, true);
    r.preconditions.push_back({"n <= d/gamma", d && n <= *d});
    r.preconditions.push_back({"minimum Hamming weight < n", code.min_hamming() && *code.min_hamming() < code.length()});
    r.parameters.emplace_back("P", as_rational(p));
    r.parameters.emplace_back("|R|", as_rational(code.ring().size()));
    finish_singleton(r, code, p, as_rational(code.size()) / as_rational(code.ring().size()));
    return r;
}

BoundReport singleton_q(const LinearCode& code) {
    BoundReport r = start(BoundKind::singleton_q, Relation::at_least, code);
    const auto d = code.min_hom_norm();
    const Rational n = as_rational(code.length());
    const std::size_t q = max_cyclic_size(code, false);
    r.preconditions.push_back({"n < d/gamma", d && n < *d});
    r.parameters.emplace_back("Q", as_rational(q));
    finish_singleton(r, code, q, as_rational(code.size()) / as_rational(q == 0 ? 1 : q));
    return r;
}

BoundReport singleton_weak(const LinearCode& code) {
    BoundReport r = start(BoundKind::singleton_weak, Relation::at_least, code);
    const auto d = code.min_hom_norm();
    const Rational n = as_rational(code.length());
    const std::size_t size = code.ring().size();
    r.preconditions.push_back({"n <= d/gamma", d && n <= *d});
    r.parameters.emplace_back("|R|", as_rational(size));
    finish_singleton(r, code, size, as_rational(code.size()) / as_rational(size));
    return r;
}

std::vector<BoundReport> check_all(const LinearCode& code) {
    std::vector<BoundReport> out;
    out.push_back(averaging_bound(code));

    std::optional<BoundReport> best;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code.hamming(i) == 0) continue;
        BoundReport candidate = plotkin_refined(code, code.word(i));
        if (!best) {
            best = std::move(candidate);
            continue;
        }
        if (!candidate.applicable) continue;
        if (!best->applicable || *candidate.rhs < *best->rhs) best = std::move(candidate);
    }
    if (!best) {
        best = start(BoundKind::plotkin_refined, Relation::at_most, code);
        best->preconditions.push_back({"c is a codeword", false});
    }
    out.push_back(std::move(*best));

    out.push_back(plotkin_minham(code));
    out.push_back(plotkin_minimal_ideal(code));
    out.push_back(singleton_p(code));
    out.push_back(singleton_q(code));
    out.push_back(singleton_weak(code));
    return out;
}

bool any_violated(std::span<const BoundReport> reports) {
    return std::any_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.applicable && !r.satisfied; });
}

}  // namespace frobcode
