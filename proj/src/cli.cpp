// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "frobcode/error.hpp"
#include "frobcode/report.hpp"

namespace frobcode {

namespace {

struct Options {
    std::string ring;
    std::string gen;
    std::string gamma = "1";
    std::string emit_gen;
    std::size_t m = 1;
    std::size_t random = 0;
    std::uint64_t seed = 0;
    bool json = false;
};

Rational resolve_gamma(const Options& o, const Ring& ring) {
    if (o.gamma == "preset") return preset_gamma(ring.spec());
    Rational g = Rational::parse(o.gamma);
    if (g.sign() <= 0) throw Error(Errc::invalid_spec, "--gamma must be positive");
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_spec, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinearCode load_code(const Options& o) {
    const RingPtr ring = build_ring(o.ring);
    const WeightTablePtr table = hom_weight_table(ring, resolve_gamma(o, *ring));
    const Matrix g = parse_generator_text(read_file(o.gen), *ring);
    return build_code(table, g);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_text(const std::optional<Rational>& r) { return r ? r->str() : "-"; }

int cmd_ring_info(const Options& o, std::ostream& out) {
    const RingPtr ring = build_ring(o.ring);
    const bool local = is_local(*ring);
    const std::vector<Element> rad = radical(*ring);
    const std::vector<Ideal> minimal = minimal_left_ideals(*ring);
    if (o.json) {
        Json j;
        j["ring"] = ring->name();
        j["size"] = ring->size();
        std::vector<std::string> units;
        for (Element u : ring->units()) units.push_back(ring->label(u));
        j["units"] = units;
        j["additive_exponent"] = ring->additive_exponent();
        j["commutative"] = ring->is_commutative();
        j["local"] = local;
        std::vector<std::string> rad_labels;
        for (Element x : rad) rad_labels.push_back(ring->label(x));
        j["radical"] = rad_labels;
        std::vector<std::size_t> sizes;
        for (const Ideal& i : minimal) sizes.push_back(i.size());
        j["minimal_left_ideal_sizes"] = sizes;
        Json chars = Json::object();
        for (Element x = 0; x < ring->size(); ++x) chars[ring->label(x)] = ring->char_exp(x);
        j["character_exponents"] = chars;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "ring: " << ring->name() << "\n"
        << "size: " << ring->size() << "\n"
        << "units: " << ring->units().size() << "\n"
        << "N: " << ring->additive_exponent() << "\n"
        << "commutative: " << yes_no(ring->is_commutative()) << "\n"
        << "local: " << yes_no(local) << "\n"
        << "radical size: " << rad.size() << "\n"
        << "minimal left ideals:";
    for (const Ideal& i : minimal) out << " " << i.size();
    out << "\n";
    return kExitOk;
}

int cmd_weight(const Options& o, std::ostream& out) {
    const RingPtr ring = build_ring(o.ring);
    const WeightTablePtr table = hom_weight_table(ring, resolve_gamma(o, *ring));
    if (o.json) {
        Json j;
        j["ring"] = ring->name();
        j["gamma"] = to_json(table->gamma());
        Json weights = Json::array();
        for (Element x = 0; x < ring->size(); ++x) {
            weights.push_back({{"element", ring->label(x)}, {"weight", to_json(table->weight(x))}});
        }
        j["weights"] = weights;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    for (Element x = 0; x < ring->size(); ++x) out << ring->label(x) << ": " << table->weight(x) << "\n";
    return kExitOk;
}

int cmd_code_analyze(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o);
    Json j = to_json(CodeParameters::of(code));
    j["gamma"] = to_json(code.weights().gamma());
    const auto d = code.min_hom_norm();
    j["d"] = d ? to_json(*d * code.weights().gamma()) : Json(nullptr);
    out << j.dump(2) << "\n";
    return kExitOk;
}

void print_bounds_text(const std::vector<BoundReport>& bounds, std::ostream& out) {
    for (const BoundReport& b : bounds) {
        out << std::left << std::setw(24) << bound_name(b.kind);
        if (!b.applicable) {
            out << "inapplicable (";
            bool first = true;
            for (const Precondition& p : b.preconditions) {
                if (p.holds) continue;
                out << (first ? "" : "; ") << p.description << " fails";
                first = false;
            }
            out << ")\n";
            continue;
        }
        out << opt_text(b.lhs) << (b.relation == Relation::at_most ? " <= " : " >= ") << opt_text(b.rhs)
            << (b.satisfied ? "  satisfied" : "  VIOLATED") << (b.sharp ? ", sharp" : "") << "\n";
    }
}

int cmd_bounds_check(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o);
    const std::vector<BoundReport> bounds = check_all(code);
    if (o.json) {
        out << to_json(bounds, code.ring()).dump(2) << "\n";
    } else {
        print_bounds_text(bounds, out);
    }
    return any_violated(bounds) ? kExitBoundViolated : kExitOk;
}

void print_chain_text(const ChainCertificate& c, std::ostream& out) {
    out << "r = " << c.r << "\n"
        << "premise n <= d/gamma: " << (c.premise ? "holds" : "fails") << "\n";
    for (std::size_t i = 0; i < c.stages.size(); ++i) {
        const ChainStageRecord& s = c.stages[i];
        out << "C_" << i << ": n=" << s.parameters.n << " M=" << s.parameters.M
            << " d/gamma=" << opt_text(s.parameters.d_over_gamma);
        if (s.chosen) {
            out << "  c=(";
            for (std::size_t j = 0; j < s.chosen->size(); ++j) out << (j ? "," : "") << (*s.chosen)[j];
            out << ") l=" << *s.chosen_ell << " |Rc|=" << *s.chosen_cyclic;
        }
        out << "\n";
    }
    for (const auto& [name, ok] : c.checks) {
        out << name << ": " << (ok ? "ok" : c.owed(name) ? "FAILED" : "fails (not owed)") << "\n";
    }
    if (c.chain_rhs) out << "chain inequality rhs: " << *c.chain_rhs << "\n";
}

int cmd_chain(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o);
    const ChainCertificate cert = ChainCertificate::of(residual_chain(code));
    if (o.json) {
        Json j;
        j["ring"] = code.ring().name();
        j["parameters"] = to_json(CodeParameters::of(code));
        j["chain"] = to_json(cert);
        out << j.dump(2) << "\n";
    } else {
        print_chain_text(cert, out);
    }
    return kExitOk;
}

int emit_family(const Options& o, const LinearCode& code, std::ostream& out) {
    if (!o.emit_gen.empty()) {
        std::ofstream f(o.emit_gen);
        if (!f) throw Error(Errc::invalid_spec, "cannot write " + o.emit_gen);
        f << format_generator_text(code.generators(), code.ring(), code.length());
    }
    const Report report = make_report(code, true);
    if (o.json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        const CodeParameters& p = report.parameters;
        out << "ring: " << report.ring << "\n"
            << "n=" << p.n << " M=" << p.M << " l(C)=" << p.ell_C
            << " min Hamming=" << (p.min_hamming ? std::to_string(*p.min_hamming) : "-")
            << " d/gamma=" << opt_text(p.d_over_gamma) << "\n";
        print_bounds_text(report.bounds, out);
        if (report.chain) print_chain_text(*report.chain, out);
    }
    return report.all_applicable_satisfied ? kExitOk : kExitBoundViolated;
}

int cmd_family_simplex(const Options& o, std::ostream& out) {
    const RingPtr ring = build_ring(o.ring);
    return emit_family(o, simplex(hom_weight_table(ring, resolve_gamma(o, *ring)), o.m), out);
}

int cmd_family_octacode(const Options& o, std::ostream& out) {
    const RingPtr ring = build_ring(RingSpec::zm(4));
    return emit_family(o, build_code(hom_weight_table(ring, resolve_gamma(o, *ring)), octacode_generator()), out);
}

int cmd_family_hjelmslev(const Options& o, std::ostream& out) {
    const RingPtr ring = build_ring(o.ring);
    return emit_family(o, hjelmslev_line(hom_weight_table(ring, resolve_gamma(o, *ring))), out);
}

struct CertifyCase {
    std::string label;
    LinearCode code;
};

std::vector<CertifyCase> certify_cases(const Options& o) {
    std::vector<CertifyCase> cases;
    const RingPtr z4 = build_ring(RingSpec::zm(4));
    const WeightTablePtr z4w = hom_weight_table(z4);
    const WeightTablePtr m2w = hom_weight_table(build_ring(RingSpec::mat(2, RingSpec::gf(2, 1))));
    cases.push_back({"octacode", build_code(z4w, octacode_generator())});
    cases.push_back({"simplex Z4 m=1", simplex(z4w, 1)});
    cases.push_back({"simplex Z4 m=2", simplex(z4w, 2)});
    cases.push_back({"simplex M2(GF(2)) m=1", simplex(m2w, 1)});
    for (const char* spec : {"Z4", "CHAIN(2)", "Z9", "CHAIN(3)"}) {
        cases.push_back({std::string("hjelmslev ") + spec, hjelmslev_line(hom_weight_table(build_ring(spec)))});
    }
    std::mt19937_64 rng(o.seed);
    for (std::size_t k = 0; k < o.random; ++k) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t rows = 1 + rng() % 2;
        Matrix g(rows, Word(n));
        for (Word& row : g) {
            for (Element& e : row) e = static_cast<Element>(rng() % 4);
        }
        cases.push_back({"random Z4 #" + std::to_string(k), build_code(z4w, n, g)});
    }
    return cases;
}

int cmd_certify(const Options& o, std::ostream& out) {
    bool ok = true;
    Json arr = Json::array();
    for (const CertifyCase& c : certify_cases(o)) {
        const Report report = make_report(c.code, true);
        const bool chain_ok = report.chain->all_checks();
        ok = ok && report.all_applicable_satisfied && chain_ok;
        if (o.json) {
            arr.push_back({{"case", c.label},
                           {"parameters", to_json(report.parameters)},
                           {"all_applicable_satisfied", report.all_applicable_satisfied},
                           {"chain_checks", chain_ok},
                           {"sharp", report.sharp}});
            continue;
        }
        out << (report.all_applicable_satisfied && chain_ok ? "ok    " : "FAIL  ") << c.label << "  n=" << report.parameters.n
            << " M=" << report.parameters.M << " d/gamma=" << opt_text(report.parameters.d_over_gamma);
        if (!report.sharp.empty()) {
            out << "  sharp:";
            for (const std::string& s : report.sharp) out << " " << s;
        }
        out << "\n";
    }
    if (o.json) out << arr.dump(2) << "\n";
    return ok ? kExitOk : kExitBoundViolated;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact homogeneous-weight analysis of linear codes over finite Frobenius rings", "frobcode"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;
    int (*action)(const Options&, std::ostream&) = nullptr;

    auto add_ring = [&](CLI::App* cmd) { cmd->add_option("--ring", o.ring, "ring spec, e.g. Z4, GF(2^3), M2(GF(2)), Z2xZ3, CHAIN(4)")->required(); };
    auto add_gamma = [&](CLI::App* cmd) { cmd->add_option("--gamma", o.gamma, "average weight gamma as p/q, or 'preset'"); };
    auto add_gen = [&](CLI::App* cmd) { cmd->add_option("--gen", o.gen, "generator matrix file")->required(); };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "machine-readable output"); };

    CLI::App* ring_cmd = app.add_subcommand("ring", "ring inspection");
    ring_cmd->require_subcommand(1);
    CLI::App* ring_info = ring_cmd->add_subcommand("info", "size, units, radical, minimal ideals");
    add_ring(ring_info);
    add_json(ring_info);
    ring_info->callback([&] { action = cmd_ring_info; });

    CLI::App* weight = app.add_subcommand("weight", "homogeneous weight table");
    add_ring(weight);
    add_gamma(weight);
    add_json(weight);
    weight->callback([&] { action = cmd_weight; });

    CLI::App* code_cmd = app.add_subcommand("code", "linear code utilities");
    code_cmd->require_subcommand(1);
    CLI::App* analyze = code_cmd->add_subcommand("analyze", "code parameters as JSON");
    add_ring(analyze);
    add_gen(analyze);
    add_gamma(analyze);
    analyze->callback([&] { action = cmd_code_analyze; });

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound evaluation");
    bounds_cmd->require_subcommand(1);
    CLI::App* check = bounds_cmd->add_subcommand("check", "evaluate every bound");
    add_ring(check);
    add_gen(check);
    add_gamma(check);
    add_json(check);
    check->callback([&] { action = cmd_bounds_check; });

    CLI::App* family = app.add_subcommand("family", "bound-meeting code families");
    family->require_subcommand(1);
    CLI::App* simplex_cmd = family->add_subcommand("simplex", "simplex code over R^m");
    add_ring(simplex_cmd);
    simplex_cmd->add_option("-m", o.m, "dimension m")->check(CLI::PositiveNumber);
    simplex_cmd->add_option("--emit-gen", o.emit_gen, "write the generator matrix to a file");
    add_gamma(simplex_cmd);
    add_json(simplex_cmd);
    simplex_cmd->callback([&] { action = cmd_family_simplex; });
    CLI::App* octa = family->add_subcommand("octacode", "the Z4 octacode");
    octa->add_option("--emit-gen", o.emit_gen, "write the generator matrix to a file");
    add_gamma(octa);
    add_json(octa);
    octa->callback([&] { action = cmd_family_octacode; });
    CLI::App* hjelm = family->add_subcommand("hjelmslev", "projective Hjelmslev line code over a length-2 chain ring");
    add_ring(hjelm);
    hjelm->add_option("--emit-gen", o.emit_gen, "write the generator matrix to a file");
    add_gamma(hjelm);
    add_json(hjelm);
    hjelm->callback([&] { action = cmd_family_hjelmslev; });

    CLI::App* chain = app.add_subcommand("chain", "residual-chain certificate");
    add_ring(chain);
    add_gen(chain);
    add_gamma(chain);
    add_json(chain);
    chain->callback([&] { action = cmd_chain; });

    CLI::App* certify = app.add_subcommand("certify", "batch check of every built-in family and optional random codes");
    certify->add_option("--random", o.random, "number of random Z4 codes to add");
    certify->add_option("--seed", o.seed, "seed for the random codes")->capture_default_str();
    add_json(certify);
    certify->callback([&] { action = cmd_certify; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        return action ? action(o, out) : kExitUsage;
    } catch (const Error& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace frobcode
