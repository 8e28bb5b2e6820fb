// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobcode/lincode.hpp"

namespace frobcode {

enum class BoundKind {
    averaging,
    plotkin_refined,
    plotkin_minham,
    plotkin_minimal_ideal,
    singleton_p,
    singleton_q,
    singleton_weak,
};

/// Wire names: "averaging", "plotkin-refined", ... "singleton-weak".
const char* bound_name(BoundKind kind) noexcept;
std::optional<BoundKind> bound_from_name(std::string_view name) noexcept;

/// Which way the checked inequality points: lhs <= rhs or lhs >= rhs.
enum class Relation { at_most, at_least };

struct Precondition {
    std::string description;
    bool holds = false;
    friend bool operator==(const Precondition&, const Precondition&) = default;
};

/// Outcome of evaluating one bound on one code. lhs/rhs are absent when the
/// bound is inapplicable and its sides are undefined (no d, zero divisor).
/// `satisfied` and `sharp` are false unless `applicable`.
struct BoundReport {
    BoundKind kind = BoundKind::averaging;
    std::vector<Precondition> preconditions;
    bool applicable = false;
    Relation relation = Relation::at_most;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    bool satisfied = false;
    bool sharp = false;
    /// Auxiliary values the bound was instantiated with (|Rc|, Q, P, ...).
    std::vector<std::pair<std::string, Rational>> parameters;
    /// Chosen codeword for per-word bounds.
    std::optional<Word> word;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Smallest integer t with base^t >= value (value > 0, base >= 2), exactly.
BigInt ceil_log(const Rational& value, const BigInt& base);

/// (M-1)/M * d/gamma <= n, meaningful when l(C) = n.
BoundReport averaging_bound(const LinearCode& code);
/// M <= |Rc| (d^ - l(c)) / (d^ - n) for a codeword c.
BoundReport plotkin_refined(const LinearCode& code, std::span<const Element> word);
/// M <= |R| (d^ - l) / (d^ - n) with l the minimum Hamming weight.
BoundReport plotkin_minham(const LinearCode& code);
/// M <= Q (d^ - l) / (d^ - n) with Q the largest minimal left ideal.
BoundReport plotkin_minimal_ideal(const LinearCode& code);
/// n - ceil((P-1)/P d^) >= ceil(log_P M - log_P |R|).
BoundReport singleton_p(const LinearCode& code);
/// n - ceil((Q-1)/Q d^) >= ceil(log_Q M - 1), Q = max |Rc|.
BoundReport singleton_q(const LinearCode& code);
/// n - ceil((|R|-1)/|R| d^) >= ceil(log_|R| M - 1).
BoundReport singleton_weak(const LinearCode& code);

/// Every bound; plotkin-refined is instantiated with the nonzero codeword of
/// smallest right-hand side (ties: earliest message).
std::vector<BoundReport> check_all(const LinearCode& code);

/// True iff some applicable report is not satisfied.
bool any_violated(std::span<const BoundReport> reports);

/// Largest |Rc| over codewords; with `proper_support_only`, over nonzero
/// codewords with l(c) < n. 0 when no word qualifies.
std::size_t max_cyclic_size(const LinearCode& code, bool proper_support_only);

}  // namespace frobcode
