#include "orcol/census.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "orcol/errors.hpp"

namespace orcol {

std::uint64_t ClassTable::orientation_count() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [key, counts] : classes) total += counts.total();
    return total;
}

std::vector<std::uint32_t> out_degree_vector(const Orientation& o) {
    const Multigraph& g = o.graph();
    std::vector<std::uint32_t> degrees(g.vertex_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) ++degrees[o.source(e)];
    return degrees;
}

Parity flip_parity(const Orientation& o) {
    auto flipped = std::count(o.flips().begin(), o.flips().end(), true);
    return flipped % 2 == 0 ? Parity::even : Parity::odd;
}

ResidueVector residue_class(const Orientation& o, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("modulus k must be positive");
    ResidueVector r{out_degree_vector(o), k};
    for (auto& x : r.entries) x %= k;
    return r;
}

namespace {

constexpr std::uint64_t dense_limit = std::uint64_t{1} << 20;

// Mixed-radix code of a residue vector. Vertex v's residue is bounded by
// min(k, max possible out-degree + 1), so the code space is at most 2^(2m).
class ResidueCoder {
public:
    ResidueCoder(const Multigraph& g, std::uint32_t k) : weight_(g.vertex_count()), radix_(g.vertex_count()) {
        std::vector<std::uint64_t> reach(g.vertex_count(), 1);
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                ++reach[e.tail];
            } else {
                ++reach[e.tail];
                ++reach[e.head];
            }
        }
        std::uint64_t w = 1;
        for (std::size_t v = 0; v < radix_.size(); ++v) {
            radix_[v] = std::min<std::uint64_t>(k, reach[v]);
            weight_[v] = w;
            w *= radix_[v];
        }
        space_ = w;
    }

    std::uint64_t space() const noexcept { return space_; }
    std::uint64_t weight(std::size_t v) const noexcept { return weight_[v]; }

    std::vector<std::uint32_t> decode(std::uint64_t code) const {
        std::vector<std::uint32_t> out(radix_.size());
        for (std::size_t v = 0; v < radix_.size(); ++v)
            out[v] = static_cast<std::uint32_t>((code / weight_[v]) % radix_[v]);
        return out;
    }

private:
    std::vector<std::uint64_t> weight_;
    std::vector<std::uint64_t> radix_;
    std::uint64_t space_ = 1;
};

// Walks masks first..last-1 in increasing order, updating out-degrees only
// for the bits that change between consecutive masks.
template <class Tally>
void walk_masks(const Multigraph& g, std::uint32_t k, const ResidueCoder& coder, std::uint64_t first,
                std::uint64_t last, Tally&& tally) {
    if (first >= last) return;
    const auto& edges = g.edges();
    std::vector<std::uint32_t> residue(g.vertex_count(), 0);
    std::uint64_t code = 0;

    auto move_tail = [&](Vertex from, Vertex to) {
        std::uint32_t before = residue[from];
        residue[from] = before == 0 ? k - 1 : before - 1;
        code = code - before * coder.weight(from) + residue[from] * coder.weight(from);
        before = residue[to];
        residue[to] = before + 1 == k ? 0 : before + 1;
        code = code - before * coder.weight(to) + residue[to] * coder.weight(to);
    };

    for (std::size_t e = 0; e < edges.size(); ++e) {
        Vertex s = ((first >> e) & 1u) ? edges[e].head : edges[e].tail;
        residue[s] = (residue[s] + 1) % k;
    }
    for (std::size_t v = 0; v < residue.size(); ++v) code += residue[v] * coder.weight(v);
    bool odd = std::popcount(first) % 2 == 1;

    for (std::uint64_t mask = first;;) {
        tally(code, odd);
        if (++mask == last) break;
        std::uint64_t changed = mask ^ (mask - 1);
        odd ^= std::popcount(changed) % 2 == 1;
        while (changed) {
            std::size_t e = static_cast<std::size_t>(std::countr_zero(changed));
            changed &= changed - 1;
            const Edge& ed = edges[e];
            if (ed.is_loop() || k == 1) continue;
            if ((mask >> e) & 1u)
                move_tail(ed.tail, ed.head);
            else
                move_tail(ed.head, ed.tail);
        }
    }
}

ClassTable empty_table(const Multigraph& g, std::uint32_t k) {
    ClassTable t;
    t.k = k;
    t.vertex_count = g.vertex_count();
    t.edge_count = g.edge_count();
    return t;
}

}  // namespace

ClassTable tally_mask_range(const Multigraph& g, std::uint32_t k, std::uint64_t first, std::uint64_t last) {
    if (k == 0) throw std::invalid_argument("modulus k must be positive");
    if (g.edge_count() > 31) throw CapExceeded("orientation census supports at most 31 edges");
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    if (first > last || last > total) throw std::invalid_argument("mask range outside [0, 2^m)");

    ResidueCoder coder(g, k);
    ClassTable table = empty_table(g, k);

    if (coder.space() <= dense_limit && coder.space() <= 4 * (last - first + 1)) {
        std::vector<SubclassCounts> cells(coder.space());
        walk_masks(g, k, coder, first, last, [&](std::uint64_t code, bool odd) {
            auto& c = cells[code];
            odd ? ++c.disagree : ++c.agree;
        });
        for (std::uint64_t code = 0; code < cells.size(); ++code)
            if (cells[code].total() > 0) table.classes.emplace(coder.decode(code), cells[code]);
    } else {
        std::unordered_map<std::uint64_t, SubclassCounts> cells;
        walk_masks(g, k, coder, first, last, [&](std::uint64_t code, bool odd) {
            auto& c = cells[code];
            odd ? ++c.disagree : ++c.agree;
        });
        for (const auto& [code, counts] : cells) table.classes.emplace(coder.decode(code), counts);
    }
    return table;
}

void merge_into(ClassTable& target, const ClassTable& part) {
    if (target.k != part.k || target.vertex_count != part.vertex_count || target.edge_count != part.edge_count)
        throw std::invalid_argument("cannot merge class tables of different shape");
    for (const auto& [key, counts] : part.classes) {
        auto& cell = target.classes[key];
        cell.agree += counts.agree;
        cell.disagree += counts.disagree;
    }
}

ClassTable build_class_table(const Multigraph& g, std::uint32_t k, const CensusOptions& options) {
    if (k == 0) throw std::invalid_argument("modulus k must be positive");
    if (g.edge_count() > options.max_edges)
        throw CapExceeded("orientation census needs m <= " + std::to_string(options.max_edges) + " (graph has " +
                          std::to_string(g.edge_count()) + " edges)");
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
    if (threads <= 1) return tally_mask_range(g, k, 0, total);

    std::vector<ClassTable> parts(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < threads; ++i) {
            std::uint64_t first = total / threads * i;
            std::uint64_t last = i + 1 == threads ? total : total / threads * (i + 1);
            workers.emplace_back([&, i, first, last] { parts[i] = tally_mask_range(g, k, first, last); });
        }
    }
    ClassTable table = empty_table(g, k);
    for (const ClassTable& part : parts) merge_into(table, part);
    return table;
}

std::map<std::vector<std::uint32_t>, std::int64_t> census_coefficients(const ClassTable& t) {
    std::map<std::vector<std::uint32_t>, std::int64_t> out;
    for (const auto& [key, counts] : t.classes) out.emplace_hint(out.end(), key, counts.difference());
    return out;
}

}  // namespace orcol
