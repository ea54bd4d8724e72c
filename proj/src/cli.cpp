#include "orcol/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "orcol/census.hpp"
#include "orcol/criteria.hpp"
#include "orcol/errors.hpp"
#include "orcol/field.hpp"
#include "orcol/graph.hpp"
#include "orcol/polynomial.hpp"
#include "orcol/serialize.hpp"

namespace orcol::cli {

namespace {

struct RunConfig {
    std::string input = "-";
    std::string format = "auto";
    std::uint32_t k = 0;
    bool json = false;
    bool exit_verdict = false;
    bool verbose = false;
    std::string moduli;
    std::uint32_t p = 0;
    std::uint32_t t = 1;
    Caps caps;
    std::uint64_t max_points = default_max_points;
};

Multigraph load_graph(const RunConfig& cfg, std::istream& in) {
    std::string text;
    if (cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(cfg.input, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open " + cfg.input);
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    if (cfg.format == "edgelist") return parse_edge_list(text);
    if (cfg.format == "dimacs") return parse_dimacs(text);
    return parse_auto(text);
}

std::vector<std::uint64_t> parse_moduli(const std::string& list) {
    if (list.empty()) return default_profile_moduli;
    std::vector<std::uint64_t> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || value < 2)
            throw std::invalid_argument("-l expects a comma-separated list of integers >= 2, got '" + item + "'");
        out.push_back(value);
    }
    return out;
}

void add_graph_options(CLI::App* sub, RunConfig& cfg, bool needs_k) {
    sub->add_option("input", cfg.input, "Graph file, '-' for standard input")->capture_default_str();
    sub->add_option("--format", cfg.format, "Input format")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}))
        ->capture_default_str();
    auto* k = sub->add_option("-k", cfg.k, "Number of colors / modulus")->check(CLI::PositiveNumber);
    if (needs_k) k->required();
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--max-edges", cfg.caps.max_edges, "Orientation census edge cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-terms", cfg.caps.max_terms, "Polynomial term cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--threads", cfg.caps.threads, "Census worker threads (0 = all cores)")->capture_default_str();
    sub->add_flag("--verbose", cfg.verbose, "Timing on standard error");
}

int verdict_status(const RunConfig& cfg, bool colorable) {
    return cfg.exit_verdict && !colorable ? not_colorable : ok;
}

int analyze(const RunConfig& cfg, const Multigraph& g, std::ostream& out) {
    const auto moduli = parse_moduli(cfg.moduli);
    const std::uint32_t k = cfg.k;
    Verdict verdict;
    LProfile profile;
    std::optional<bool> parity;
    if (g.edge_count() <= cfg.caps.max_edges) {
        ClassTable t = build_class_table(g, k, {cfg.caps.max_edges, cfg.caps.threads});
        auto w = sufficient_witness(t);
        verdict = {w.has_value(), std::move(w), Engine::census};
        profile = necessary_profile(t, moduli);
        if (k % 2 == 1) parity = odd_k_parity(t);
    } else {
        ReducedPolynomial poly = reduced_graph_polynomial(g, k, cfg.caps.max_terms);
        auto w = sufficient_witness(poly);
        verdict = {w.has_value(), std::move(w), Engine::polynomial};
        profile = necessary_profile(poly, moduli);
        if (k % 2 == 1) parity = odd_k_parity(poly);
    }

    if (cfg.json) {
        json j = to_json(verdict);
        j["k"] = k;
        j["profile"] = to_json(profile);
        j["odd_k_parity"] = parity ? json(*parity) : json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << "k: " << k << '\n' << to_text(verdict) << to_text(profile);
        if (parity) out << "odd-k parity: " << (*parity ? "odd class found" : "all classes even") << '\n';
    }
    return verdict_status(cfg, verdict.colorable);
}

int classes(const RunConfig& cfg, const Multigraph& g, std::ostream& out) {
    ClassTable t = build_class_table(g, cfg.k, {cfg.caps.max_edges, cfg.caps.threads});
    if (cfg.json)
        out << to_json(t).dump(2) << '\n';
    else
        out << to_text(t);
    return ok;
}

int poly(const RunConfig& cfg, const Multigraph& g, std::ostream& out) {
    ReducedPolynomial p = reduced_graph_polynomial(g, cfg.k, cfg.caps.max_terms);
    if (cfg.json)
        out << to_json(p).dump(2) << '\n';
    else
        out << "# k=" << p.k << " variables=" << p.polynomial.variable_count() << " terms=" << p.polynomial.term_count()
            << '\n'
            << to_text(p.polynomial);
    return ok;
}

int oracle(const RunConfig& cfg, const Multigraph& g, std::ostream& out) {
    auto coloring = find_coloring(g, cfg.k);
    std::optional<std::uint64_t> count;
    try {
        count = count_colorings(g, cfg.k, cfg.caps.max_assignments);
    } catch (const CapExceeded&) {
    }
    if (cfg.json) {
        json j{{"k", cfg.k},
               {"colorable", coloring.has_value()},
               {"coloring", coloring ? json(*coloring) : json(nullptr)},
               {"count", count ? json(*count) : json(nullptr)}};
        out << j.dump(2) << '\n';
    } else {
        out << "k: " << cfg.k << '\n';
        out << "coloring: " << (coloring ? format_tuple(*coloring) : std::string("none")) << '\n';
        out << "count: " << (count ? std::to_string(*count) : std::string("skipped (k^n above bound)")) << '\n';
    }
    return verdict_status(cfg, coloring.has_value());
}

int field(const RunConfig& cfg, std::ostream& out) {
    FieldRef f = make_field(cfg.p, cfg.t);
    std::optional<std::uint32_t> k;
    if (cfg.k > 0) k = cfg.k;
    if (cfg.json)
        out << field_json(f, k).dump(2) << '\n';
    else
        out << field_text(f, k);
    return ok;
}

int verify(const RunConfig& cfg, const Multigraph& g, std::ostream& out) {
    CrossCheckReport r = cross_check(g, cfg.k, cfg.caps);
    if (cfg.json)
        out << to_json(r).dump(2) << '\n';
    else
        out << to_text(r);
    if (!r.ok()) return cross_check_failed;
    return verdict_status(cfg, r.verdict.colorable);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph k-colorability via orientation classes and the reduced graph polynomial", "orcol"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* analyze_cmd = app.add_subcommand("analyze", "Decisive verdict, l-profile and odd-k parity");
    add_graph_options(analyze_cmd, cfg, true);
    analyze_cmd->add_option("-l", cfg.moduli, "Comma-separated profile moduli (default 2,3,5,7,11,13)");
    analyze_cmd->add_flag("--exit-verdict", cfg.exit_verdict, "Exit 0 if colorable, 1 if not");

    auto* classes_cmd = app.add_subcommand("classes", "Orientation class table modulo k");
    add_graph_options(classes_cmd, cfg, true);

    auto* poly_cmd = app.add_subcommand("poly", "Graph polynomial with exponents reduced mod k");
    add_graph_options(poly_cmd, cfg, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "Backtracking coloring and exhaustive count");
    add_graph_options(oracle_cmd, cfg, true);
    oracle_cmd->add_flag("--exit-verdict", cfg.exit_verdict, "Exit 0 if colorable, 1 if not");

    auto* field_cmd = app.add_subcommand("field", "Inspect GF(p^t) and its k-element color set");
    field_cmd->add_option("-p", cfg.p, "Prime characteristic")->required();
    field_cmd->add_option("-t", cfg.t, "Extension degree")->check(CLI::PositiveNumber)->capture_default_str();
    field_cmd->add_option("-k", cfg.k, "Color count (must divide q - 1)")->check(CLI::PositiveNumber);
    field_cmd->add_flag("--json", cfg.json, "JSON output");
    field_cmd->add_flag("--verbose", cfg.verbose, "Timing on standard error");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check census, polynomial and oracle");
    add_graph_options(verify_cmd, cfg, true);
    verify_cmd->add_flag("--exit-verdict", cfg.exit_verdict, "Exit 0 if colorable, 1 if not");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const auto start = std::chrono::steady_clock::now();
    int status = ok;
    try {
        if (*field_cmd) {
            status = field(cfg, out);
        } else {
            Multigraph g = load_graph(cfg, in);
            if (*analyze_cmd) status = analyze(cfg, g, out);
            else if (*classes_cmd) status = classes(cfg, g, out);
            else if (*poly_cmd) status = poly(cfg, g, out);
            else if (*oracle_cmd) status = oracle(cfg, g, out);
            else status = verify(cfg, g, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return cap_exceeded;
    } catch (const std::overflow_error& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return cap_exceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    if (cfg.verbose) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed: " << ms << " ms\n";
    }
    return status;
}

}  // namespace orcol::cli
