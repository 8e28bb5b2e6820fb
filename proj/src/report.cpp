// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/report.hpp"

#include <algorithm>
#include <sstream>

#include "frobcode/error.hpp"

namespace frobcode {

namespace {

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<Rational>& v) { return v ? to_json(*v) : Json(nullptr); }

std::optional<std::size_t> optional_size(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::size_t>();
}

std::optional<Rational> optional_rational(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return Rational::parse(j.get<std::string>());
}

std::vector<std::string> labels_of(const Ring& ring, std::span<const Element> word) {
    std::vector<std::string> out;
    out.reserve(word.size());
    for (Element e : word) out.push_back(ring.label(e));
    return out;
}

const char* relation_text(Relation r) { return r == Relation::at_most ? "<=" : ">="; }

}  // namespace

Matrix parse_generator_text(std::string_view text, const Ring& ring) {
    Matrix rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        Word row;
        std::string literal;
        while (fields >> literal) {
            try {
                row.push_back(ring.parse_element(literal));
            } catch (const Error& e) {
                throw Error(Errc::bad_literal, "line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw Error(Errc::dimension_mismatch, "line " + std::to_string(line_no) + ": row has " +
                                                      std::to_string(row.size()) + " entries, expected " +
                                                      std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_generator_text(const Matrix& generators, const Ring& ring, std::size_t length) {
    std::ostringstream out;
    out << "# ring " << ring.name() << ", " << generators.size() << " x " << length << "\n";
    for (const Word& row : generators) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << ring.label(row[j]);
        out << "\n";
    }
    return out.str();
}

CodeParameters CodeParameters::of(const LinearCode& code) {
    return {code.length(), code.size(), code.support_size(), code.min_hamming(), code.min_hom_norm()};
}

ChainCertificate ChainCertificate::of(const ResidualChain& chain) {
    ChainCertificate c;
    for (const ChainStage& s : chain.stages) {
        ChainStageRecord rec{CodeParameters::of(s.code), std::nullopt, s.chosen_ell, s.chosen_cyclic};
        if (s.chosen) rec.chosen = labels_of(s.code.ring(), *s.chosen);
        c.stages.push_back(std::move(rec));
    }
    c.r = chain.steps();
    c.premise = chain.premise;
    c.checks = {
        {"sizes_divide", chain.sizes_divide},
        {"weights_descend", chain.weights_descend},
        {"product_formula", chain.product_formula},
        {"final_constant_weight", chain.final_constant_weight},
        {"final_size_bounded", chain.final_size_bounded},
        {"chain_inequality", chain.chain_inequality},
    };
    c.chain_rhs = chain.chain_rhs;
    return c;
}

bool ChainCertificate::all_checks() const {
    return std::all_of(checks.begin(), checks.end(), [this](const auto& c) { return c.second || !owed(c.first); });
}

bool ChainCertificate::owed(const std::string& check) const {
    return premise || check == "final_constant_weight" || check == "final_size_bounded";
}

Report make_report(const LinearCode& code, bool with_chain) {
    Report r;
    r.ring = code.ring().name();
    r.gamma = code.weights().gamma();
    r.parameters = CodeParameters::of(code);
    for (const Word& row : code.generators()) r.generators.push_back(labels_of(code.ring(), row));
    r.bounds = check_all(code);
    if (with_chain) r.chain = ChainCertificate::of(residual_chain(code));
    r.all_applicable_satisfied = !any_violated(r.bounds);
    for (const BoundReport& b : r.bounds) {
        if (b.applicable && b.sharp) r.sharp.emplace_back(bound_name(b.kind));
    }
    return r;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const CodeParameters& p) {
    Json j;
    j["n"] = p.n;
    j["M"] = p.M;
    j["ell_C"] = p.ell_C;
    j["min_hamming"] = optional_json(p.min_hamming);
    j["d_over_gamma"] = optional_json(p.d_over_gamma);
    return j;
}

Json to_json(const BoundReport& b, const Ring& ring) {
    Json j;
    j["bound"] = bound_name(b.kind);
    Json pre = Json::array();
    for (const Precondition& p : b.preconditions) pre.push_back({{"description", p.description}, {"holds", p.holds}});
    j["preconditions"] = pre;
    j["applicable"] = b.applicable;
    j["relation"] = relation_text(b.relation);
    j["lhs"] = optional_json(b.lhs);
    j["rhs"] = optional_json(b.rhs);
    j["satisfied"] = b.satisfied;
    j["sharp"] = b.sharp;
    Json params = Json::object();
    for (const auto& [name, value] : b.parameters) params[name] = to_json(value);
    j["parameters"] = params;
    j["word"] = b.word ? Json(labels_of(ring, *b.word)) : Json(nullptr);
    return j;
}

Json to_json(const std::vector<BoundReport>& bounds, const Ring& ring) {
    Json arr = Json::array();
    for (const BoundReport& b : bounds) arr.push_back(to_json(b, ring));
    return arr;
}

Json to_json(const ChainCertificate& c) {
    Json j;
    Json stages = Json::array();
    for (const ChainStageRecord& s : c.stages) {
        Json st = to_json(s.parameters);
        st["chosen"] = s.chosen ? Json(*s.chosen) : Json(nullptr);
        st["chosen_ell"] = optional_json(s.chosen_ell);
        st["chosen_cyclic_size"] = optional_json(s.chosen_cyclic);
        stages.push_back(st);
    }
    j["r"] = c.r;
    j["premise"] = c.premise;
    j["stages"] = stages;
    Json checks = Json::object();
    for (const auto& [name, ok] : c.checks) checks[name] = ok;
    j["checks"] = checks;
    j["chain_inequality_rhs"] = optional_json(c.chain_rhs);
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["tool"] = r.tool;
    j["version"] = r.version;
    j["ring"] = r.ring;
    j["gamma"] = to_json(r.gamma);
    j["parameters"] = to_json(r.parameters);
    j["generators"] = r.generators;
    const RingPtr ring = build_ring(r.ring);
    j["bounds"] = to_json(r.bounds, *ring);
    j["chain"] = r.chain ? to_json(*r.chain) : Json(nullptr);
    j["verdict"] = {{"all_applicable_satisfied", r.all_applicable_satisfied}, {"sharp", r.sharp}};
    return j;
}

CodeParameters code_parameters_from_json(const Json& j) {
    return {j.at("n").get<std::size_t>(), j.at("M").get<std::size_t>(), j.at("ell_C").get<std::size_t>(),
            optional_size(j.at("min_hamming")), optional_rational(j.at("d_over_gamma"))};
}

BoundReport bound_report_from_json(const Json& j, const Ring& ring) {
    BoundReport b;
    const auto kind = bound_from_name(j.at("bound").get<std::string>());
    if (!kind) throw Error(Errc::syntax, "unknown bound name " + j.at("bound").get<std::string>());
    b.kind = *kind;
    for (const Json& p : j.at("preconditions")) {
        b.preconditions.push_back({p.at("description").get<std::string>(), p.at("holds").get<bool>()});
    }
    b.applicable = j.at("applicable").get<bool>();
    b.relation = j.at("relation").get<std::string>() == "<=" ? Relation::at_most : Relation::at_least;
    b.lhs = optional_rational(j.at("lhs"));
    b.rhs = optional_rational(j.at("rhs"));
    b.satisfied = j.at("satisfied").get<bool>();
    b.sharp = j.at("sharp").get<bool>();
    for (const auto& [name, value] : j.at("parameters").items()) {
        b.parameters.emplace_back(name, Rational::parse(value.get<std::string>()));
    }
    if (!j.at("word").is_null()) {
        Word w;
        for (const Json& e : j.at("word")) w.push_back(ring.parse_element(e.get<std::string>()));
        b.word = std::move(w);
    }
    return b;
}

ChainCertificate chain_certificate_from_json(const Json& j) {
    ChainCertificate c;
    c.r = j.at("r").get<std::size_t>();
    c.premise = j.at("premise").get<bool>();
    for (const Json& s : j.at("stages")) {
        ChainStageRecord rec{code_parameters_from_json(s), std::nullopt, optional_size(s.at("chosen_ell")),
                             optional_size(s.at("chosen_cyclic_size"))};
        if (!s.at("chosen").is_null()) rec.chosen = s.at("chosen").get<std::vector<std::string>>();
        c.stages.push_back(std::move(rec));
    }
    for (const auto& [name, ok] : j.at("checks").items()) c.checks.emplace_back(name, ok.get<bool>());
    c.chain_rhs = optional_rational(j.at("chain_inequality_rhs"));
    return c;
}

Report report_from_json(const Json& j) {
    Report r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.ring = j.at("ring").get<std::string>();
    r.gamma = Rational::parse(j.at("gamma").get<std::string>());
    r.parameters = code_parameters_from_json(j.at("parameters"));
    r.generators = j.at("generators").get<std::vector<std::vector<std::string>>>();
    const RingPtr ring = build_ring(r.ring);
    for (const Json& b : j.at("bounds")) r.bounds.push_back(bound_report_from_json(b, *ring));
    if (!j.at("chain").is_null()) r.chain = chain_certificate_from_json(j.at("chain"));
    r.all_applicable_satisfied = j.at("verdict").at("all_applicable_satisfied").get<bool>();
    r.sharp = j.at("verdict").at("sharp").get<std::vector<std::string>>();
    return r;
}

}  // namespace frobcode
