#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orcol {

using Vertex = std::uint32_t;

/// Stored edge (tail, head), 0-based. The stored direction is the reference
/// orientation of the edge; tail == head is a loop.
struct Edge {
    Vertex tail;
    Vertex head;

    bool is_loop() const noexcept { return tail == head; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with a fixed edge order. Loops and parallel edges
/// are allowed. Immutable once constructed.
class Multigraph {
public:
    /// Throws std::invalid_argument if n == 0 or an endpoint is >= n.
    Multigraph(std::size_t n, std::vector<Edge> edges);

    /// Builds from 1-based (u, v) pairs as they appear in external formats.
    static Multigraph from_one_based(std::size_t n, const std::vector<std::pair<int, int>>& edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }
    bool has_loop() const noexcept;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

/// Per-edge reversal flags relative to the reference orientation.
class Orientation {
public:
    /// All edges in their reference direction.
    explicit Orientation(const Multigraph& g);
    /// Bit e of `mask` reverses edge e. Requires m <= 64.
    Orientation(const Multigraph& g, std::uint64_t mask);
    /// Throws std::invalid_argument if flips.size() != m.
    Orientation(const Multigraph& g, std::vector<bool> flips);

    const Multigraph& graph() const noexcept { return *graph_; }
    const std::vector<bool>& flips() const noexcept { return flips_; }
    bool flipped(std::size_t e) const { return flips_.at(e); }

    /// Tail of edge e under this orientation.
    Vertex source(std::size_t e) const;

private:
    const Multigraph* graph_;
    std::vector<bool> flips_;
};

/// "n m" header then m lines "u v"; '#' starts a comment line.
Multigraph parse_edge_list(std::string_view text);

/// DIMACS .col subset: "c" comments, one "p edge n m", m lines "e u v".
Multigraph parse_dimacs(std::string_view text);

/// DIMACS when the first non-comment line starts with "p", otherwise edge list.
Multigraph parse_auto(std::string_view text);

/// Edge-list rendering; parse_edge_list inverts it exactly.
std::string to_canonical_text(const Multigraph& g);

}  // namespace orcol
