// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frobcode/bounds.hpp"
#include "frobcode/families.hpp"

namespace frobcode {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// Reads a generator matrix: one row per line, whitespace-separated element
/// literals, `#` starts a comment. Throws Error(bad_literal | dimension_mismatch).
Matrix parse_generator_text(std::string_view text, const Ring& ring);
std::string format_generator_text(const Matrix& generators, const Ring& ring, std::size_t length);

struct CodeParameters {
    std::size_t n = 0;
    std::size_t M = 0;
    std::size_t ell_C = 0;
    std::optional<std::size_t> min_hamming;
    std::optional<Rational> d_over_gamma;

    static CodeParameters of(const LinearCode& code);
    friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

struct ChainStageRecord {
    CodeParameters parameters;
    std::optional<std::vector<std::string>> chosen;  // element labels
    std::optional<std::size_t> chosen_ell;
    std::optional<std::size_t> chosen_cyclic;
    friend bool operator==(const ChainStageRecord&, const ChainStageRecord&) = default;
};

/// Serializable residual-chain certificate.
struct ChainCertificate {
    std::vector<ChainStageRecord> stages;
    std::size_t r = 0;
    bool premise = false;
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<Rational> chain_rhs;

    static ChainCertificate of(const ResidualChain& chain);
    /// Whether a named check must hold; the final-stage ones always do.
    bool owed(const std::string& check) const;
    bool all_checks() const;
    friend bool operator==(const ChainCertificate&, const ChainCertificate&) = default;
};

/// Full analysis record emitted by the `family` commands.
struct Report {
    std::string tool = "frobcode";
    std::string version = kToolVersion;
    std::string ring;
    Rational gamma{1};
    CodeParameters parameters;
    std::vector<std::vector<std::string>> generators;
    std::vector<BoundReport> bounds;
    std::optional<ChainCertificate> chain;
    bool all_applicable_satisfied = true;
    std::vector<std::string> sharp;

    friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const LinearCode& code, bool with_chain);

Json to_json(const Rational& r);
Json to_json(const CodeParameters& p);
Json to_json(const BoundReport& b, const Ring& ring);
Json to_json(const std::vector<BoundReport>& bounds, const Ring& ring);
Json to_json(const ChainCertificate& c);
Json to_json(const Report& r);

/// Inverse of to_json; words are decoded through `ring` where needed.
CodeParameters code_parameters_from_json(const Json& j);
BoundReport bound_report_from_json(const Json& j, const Ring& ring);
ChainCertificate chain_certificate_from_json(const Json& j);
Report report_from_json(const Json& j);

}  // namespace frobcode
