#include "orcol/graph.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "orcol/errors.hpp"

namespace orcol {

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw std::invalid_argument("graph must have at least one vertex");
    for (const Edge& e : edges_) {
        if (e.tail >= n_ || e.head >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
}

Multigraph Multigraph::from_one_based(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
            throw std::invalid_argument("edge endpoint out of range");
        out.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    }
    return Multigraph(n, std::move(out));
}

bool Multigraph::has_loop() const noexcept {
    for (const Edge& e : edges_)
        if (e.is_loop()) return true;
    return false;
}

Orientation::Orientation(const Multigraph& g) : graph_(&g), flips_(g.edge_count(), false) {}

Orientation::Orientation(const Multigraph& g, std::uint64_t mask) : graph_(&g), flips_(g.edge_count(), false) {
    if (g.edge_count() > 64) throw std::invalid_argument("mask orientation needs m <= 64");
    for (std::size_t e = 0; e < flips_.size(); ++e) flips_[e] = (mask >> e) & 1u;
}

Orientation::Orientation(const Multigraph& g, std::vector<bool> flips) : graph_(&g), flips_(std::move(flips)) {
    if (flips_.size() != g.edge_count()) throw std::invalid_argument("flip vector length must equal edge count");
}

Vertex Orientation::source(std::size_t e) const {
    const Edge& ed = graph_->edge(e);
    return flips_[e] ? ed.head : ed.tail;
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Splits into whitespace-separated tokens per line; CR is whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) line.tokens.push_back(raw.substr(start, i - start));
        }
        lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

long long to_integer(std::string_view token, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

Edge to_edge(std::string_view a, std::string_view b, long long n, std::size_t line) {
    long long u = to_integer(a, line);
    long long v = to_integer(b, line);
    if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line, "endpoint out of range [1, " + std::to_string(n) + "]");
    return {static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
}

void check_header(long long n, long long m, std::size_t line) {
    if (n < 1) throw ParseError(line, "vertex count must be positive");
    if (m < 0) throw ParseError(line, "edge count must be nonnegative");
    if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line, "vertex count too large");
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
    std::optional<long long> n, m;
    std::vector<Edge> edges;
    std::size_t last_line = 0;
    for (const Line& line : tokenize(text)) {
        last_line = line.number;
        if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected two integers");
        if (!n) {
            n = to_integer(line.tokens[0], line.number);
            m = to_integer(line.tokens[1], line.number);
            check_header(*n, *m, line.number);
            continue;
        }
        if (static_cast<long long>(edges.size()) == *m)
            throw ParseError(line.number, "more edges than declared (" + std::to_string(*m) + ")");
        edges.push_back(to_edge(line.tokens[0], line.tokens[1], *n, line.number));
    }
    if (!n) throw ParseError(last_line, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != *m)
        throw ParseError(last_line, "expected " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
    return Multigraph(static_cast<std::size_t>(*n), std::move(edges));
}

Multigraph parse_dimacs(std::string_view text) {
    std::optional<long long> n, m;
    std::vector<Edge> edges;
    std::size_t last_line = 0;
    for (const Line& line : tokenize(text)) {
        last_line = line.number;
        if (line.tokens.empty() || line.tokens.front() == "c") continue;
        std::string_view kind = line.tokens.front();
        if (kind == "p") {
            if (n) throw ParseError(line.number, "duplicate 'p' line");
            if (line.tokens.size() != 4 || (line.tokens[1] != "edge" && line.tokens[1] != "col"))
                throw ParseError(line.number, "expected 'p edge <n> <m>'");
            n = to_integer(line.tokens[2], line.number);
            m = to_integer(line.tokens[3], line.number);
            check_header(*n, *m, line.number);
        } else if (kind == "e") {
            if (!n) throw ParseError(line.number, "'e' line before 'p' line");
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'e <u> <v>'");
            if (static_cast<long long>(edges.size()) == *m)
                throw ParseError(line.number, "more edges than declared (" + std::to_string(*m) + ")");
            edges.push_back(to_edge(line.tokens[1], line.tokens[2], *n, line.number));
        } else {
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!n) throw ParseError(last_line, "missing 'p edge' line");
    if (static_cast<long long>(edges.size()) != *m)
        throw ParseError(last_line, "expected " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
    return Multigraph(static_cast<std::size_t>(*n), std::move(edges));
}

Multigraph parse_auto(std::string_view text) {
    for (const Line& line : tokenize(text)) {
        if (line.tokens.empty()) continue;
        std::string_view first = line.tokens.front();
        if (first == "c" || first.starts_with('#')) continue;
        if (first == "p" || first == "e") return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

std::string to_canonical_text(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count();
    for (const Edge& e : g.edges()) out << '\n' << e.tail + 1 << ' ' << e.head + 1;
    return out.str();
}

}  // namespace orcol
