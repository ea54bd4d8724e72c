#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "orcol/graph.hpp"

namespace orcol {

/// Out-degrees reduced modulo k, one entry per vertex.
struct ResidueVector {
    std::vector<std::uint32_t> entries;
    std::uint32_t modulus = 1;

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    friend auto operator<=>(const ResidueVector& a, const ResidueVector& b) { return a.entries <=> b.entries; }
};

enum class Parity { even, odd };

/// Sizes of the two adjacent subclasses of one class: orientations that
/// differ from the reference by an even (agree) or odd (disagree) number of
/// reversals.
struct SubclassCounts {
    std::uint64_t agree = 0;
    std::uint64_t disagree = 0;

    std::uint64_t total() const noexcept { return agree + disagree; }
    std::int64_t difference() const noexcept {
        return static_cast<std::int64_t>(agree) - static_cast<std::int64_t>(disagree);
    }
    friend bool operator==(const SubclassCounts&, const SubclassCounts&) = default;
};

/// Census of all orientations by residue class modulo k. Keys are residue
/// entries; only nonempty classes are stored; iteration is lexicographic.
struct ClassTable {
    std::uint32_t k = 1;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::map<std::vector<std::uint32_t>, SubclassCounts> classes;

    std::uint64_t orientation_count() const noexcept;
    friend bool operator==(const ClassTable&, const ClassTable&) = default;
};

inline constexpr std::size_t default_max_edges = 24;

/// Loops count once toward their vertex under either orientation.
std::vector<std::uint32_t> out_degree_vector(const Orientation& o);

Parity flip_parity(const Orientation& o);

/// Throws std::invalid_argument if k == 0.
ResidueVector residue_class(const Orientation& o, std::uint32_t k);

struct CensusOptions {
    std::size_t max_edges = default_max_edges;
    /// Worker threads; 0 picks hardware concurrency. Output does not depend on it.
    unsigned threads = 1;
};

/// Exhaustive census over all 2^m flip masks. Throws CapExceeded when
/// m > options.max_edges.
ClassTable build_class_table(const Multigraph& g, std::uint32_t k, const CensusOptions& options = {});

/// Tallies masks in [first, last) only; merging the tables of a partition of
/// [0, 2^m) with merge_into gives build_class_table's result.
ClassTable tally_mask_range(const Multigraph& g, std::uint32_t k, std::uint64_t first, std::uint64_t last);

/// Additive merge; throws std::invalid_argument on mismatched k or shape.
void merge_into(ClassTable& target, const ClassTable& part);

/// agree - disagree for every stored class. Equals the coefficient of the
/// matching monomial in the graph polynomial with exponents reduced mod k.
std::map<std::vector<std::uint32_t>, std::int64_t> census_coefficients(const ClassTable& t);

}  // namespace orcol
