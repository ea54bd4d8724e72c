#include "orcol/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace orcol {

std::string format_tuple(const std::vector<std::uint32_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const Witness& w) {
    std::ostringstream out;
    out << "class " << format_tuple(w.residues) << " coefficient " << w.coefficient;
    if (w.agree) out << " agree " << *w.agree << " disagree " << *w.disagree;
    return out.str();
}

json optional_witness(const std::optional<Witness>& w) { return w ? to_json(*w) : json(nullptr); }

std::vector<std::uint32_t> read_vector(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an integer array");
    return j.get<std::vector<std::uint32_t>>();
}

}  // namespace

std::string to_text(const ClassTable& t) {
    std::ostringstream out;
    out << "# k=" << t.k << " n=" << t.vertex_count << " m=" << t.edge_count
        << " orientations=" << t.orientation_count() << " classes=" << t.classes.size() << '\n';
    for (const auto& [key, c] : t.classes)
        out << format_tuple(key) << " agree=" << c.agree << " disagree=" << c.disagree
            << " difference=" << c.difference() << '\n';
    return out.str();
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [e, c] : p.terms()) {
        out << c << " *";
        for (std::size_t v = 0; v < e.size(); ++v) out << " x" << v + 1 << '^' << e[v];
        out << '\n';
    }
    return out.str();
}

std::string to_text(const Verdict& v) {
    std::ostringstream out;
    out << "colorable: " << yes_no(v.colorable) << '\n' << "engine: " << to_string(v.engine) << '\n';
    out << "witness: " << (v.witness ? witness_text(*v.witness) : "none") << '\n';
    return out.str();
}

std::string to_text(const LProfile& p) {
    std::ostringstream out;
    for (const auto& row : p.rows) {
        out << "profile l=" << row.l << " coprime=" << yes_no(row.coprime_to_k) << " satisfied=" << yes_no(row.satisfied);
        if (row.witness) out << ' ' << witness_text(*row.witness);
        out << '\n';
    }
    out << "necessary condition (coprime rows): " << (p.necessary_condition_holds() ? "holds" : "fails") << '\n';
    return out.str();
}

std::string to_text(const CrossCheckReport& r) {
    std::ostringstream out;
    out << "census = polynomial: " << (r.tables_equal ? "OK" : "FAIL") << "; verdict = oracle: "
        << (r.verdict_matches_oracle ? "OK" : "FAIL") << '\n';
    out << "colorable: " << yes_no(r.verdict.colorable) << '\n';
    out << "oracle: " << (r.coloring ? "coloring " + format_tuple(*r.coloring) : std::string("no coloring")) << '\n';
    for (const auto& mm : r.mismatches)
        out << "mismatch " << format_tuple(mm.residues) << " census=" << mm.census << " polynomial=" << mm.polynomial
            << '\n';
    return out.str();
}

std::string field_text(const FieldRef& f, std::optional<std::uint32_t> k) {
    std::ostringstream out;
    out << "GF(" << f->p << '^' << f->t << "), modulus = " << modulus_string(*f) << '\n';
    out << "q = " << f->q << '\n';
    const auto elements = ff_elements(f);
    out << "elements:";
    for (std::size_t i = 0; i < elements.size(); ++i) out << (i ? ", " : " ") << to_string(elements[i]);
    out << '\n';
    if (k) {
        out << "color set (k=" << *k << ", m=" << (f->q - 1) / *k << "): {";
        const auto colors = color_set(f, *k);
        for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? ", " : "") << to_string(colors[i]);
        out << "}\n";
    }
    if (f->q <= 16) {
        for (int pass = 0; pass < 2; ++pass) {
            out << (pass == 0 ? "addition" : "multiplication") << " table (by element index):\n";
            for (const auto& a : elements) {
                for (std::size_t j = 0; j < elements.size(); ++j) {
                    const auto r = pass == 0 ? ff_add(a, elements[j]) : ff_mul(a, elements[j]);
                    out << (j ? " " : "") << r.index();
                }
                out << '\n';
            }
        }
    }
    return out.str();
}

json to_json(const ClassTable& t) {
    json rows = json::array();
    for (const auto& [key, c] : t.classes)
        rows.push_back({{"class", key}, {"agree", c.agree}, {"disagree", c.disagree}, {"difference", c.difference()}});
    return {{"k", t.k},
            {"n", t.vertex_count},
            {"m", t.edge_count},
            {"orientations", t.orientation_count()},
            {"classes", rows}};
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", c}});
    return terms;
}

json to_json(const ReducedPolynomial& p) {
    return {{"k", p.k}, {"variables", p.polynomial.variable_count()}, {"terms", to_json(p.polynomial)}};
}

json to_json(const Witness& w) {
    json j{{"class", w.residues}, {"coefficient", w.coefficient}};
    if (w.agree) {
        j["agree"] = *w.agree;
        j["disagree"] = *w.disagree;
    }
    return j;
}

json to_json(const Verdict& v) {
    return {{"colorable", v.colorable}, {"engine", to_string(v.engine)}, {"witness", optional_witness(v.witness)}};
}

json to_json(const LProfile& p) {
    json rows = json::array();
    for (const auto& row : p.rows)
        rows.push_back({{"l", row.l},
                        {"coprime_to_k", row.coprime_to_k},
                        {"satisfied", row.satisfied},
                        {"witness", optional_witness(row.witness)}});
    return {{"k", p.k}, {"rows", rows}, {"necessary_condition_holds", p.necessary_condition_holds()}};
}

json to_json(const CrossCheckReport& r) {
    json mismatches = json::array();
    for (const auto& mm : r.mismatches)
        mismatches.push_back({{"class", mm.residues}, {"census", mm.census}, {"polynomial", mm.polynomial}});
    return {{"k", r.k},
            {"census_equals_polynomial", r.tables_equal},
            {"verdict_equals_oracle", r.verdict_matches_oracle},
            {"verdict", to_json(r.verdict)},
            {"oracle", {{"colorable", r.oracle_colorable}, {"coloring", r.coloring ? json(*r.coloring) : json(nullptr)}}},
            {"mismatches", mismatches}};
}

json field_json(const FieldRef& f, std::optional<std::uint32_t> k) {
    json modulus = json::array();
    for (std::size_t i = f->modulus.size(); i-- > 0;) modulus.push_back(f->modulus[i]);
    json elements = json::array();
    for (const auto& e : ff_elements(f)) elements.push_back(to_string(e));
    json j{{"p", f->p}, {"t", f->t}, {"q", f->q}, {"modulus", modulus}, {"elements", elements}};
    if (k) {
        json colors = json::array();
        for (const auto& c : color_set(f, *k)) colors.push_back(to_string(c));
        j["color_set"] = {{"k", *k}, {"m", (f->q - 1) / *k}, {"elements", colors}};
    }
    return j;
}

ClassTable class_table_from_json(const json& j) {
    try {
        ClassTable t;
        t.k = j.at("k").get<std::uint32_t>();
        t.vertex_count = j.at("n").get<std::size_t>();
        t.edge_count = j.at("m").get<std::size_t>();
        for (const auto& row : j.at("classes")) {
            SubclassCounts c{row.at("agree").get<std::uint64_t>(), row.at("disagree").get<std::uint64_t>()};
            t.classes.emplace(read_vector(row.at("class")), c);
        }
        return t;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad class table JSON: ") + e.what());
    }
}

Polynomial polynomial_from_json(const json& j, std::size_t variables) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    try {
        Polynomial p(variables);
        for (const auto& term : j) p.add_term(read_vector(term.at("exponents")), term.at("coefficient").get<std::int64_t>());
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
    }
}

ReducedPolynomial reduced_polynomial_from_json(const json& j) {
    try {
        return {j.at("k").get<std::uint32_t>(), polynomial_from_json(j.at("terms"), j.at("variables").get<std::size_t>())};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
    }
}

}  // namespace orcol
