#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orcol/census.hpp"
#include "orcol/field.hpp"
#include "orcol/graph.hpp"
#include "orcol/polynomial.hpp"

namespace orcol {

enum class Engine { census, polynomial };

std::string to_string(Engine e);

/// A class whose adjacent subclasses have different sizes. agree/disagree
/// are only known when the census produced it.
struct Witness {
    std::vector<std::uint32_t> residues;
    std::int64_t coefficient = 0;
    std::optional<std::uint64_t> agree;
    std::optional<std::uint64_t> disagree;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool colorable = false;
    std::optional<Witness> witness;
    Engine engine = Engine::census;
};

struct LProfileRow {
    std::uint64_t l = 2;
    bool coprime_to_k = false;
    bool satisfied = false;
    std::optional<Witness> witness;
};

/// For each l: is there a class whose subclass sizes differ modulo l?
/// Row witnesses follow the same greatest-class rule as sufficient_witness.
/// Satisfaction of every row with l coprime to k is necessary for
/// k-colorability; the other rows are informational.
struct LProfile {
    std::uint32_t k = 1;
    std::vector<LProfileRow> rows;

    /// True when every coprime row is satisfied.
    bool necessary_condition_holds() const;
};

struct PrimePowerChoice {
    std::uint64_t p = 2;
    std::uint32_t t = 1;
    std::uint64_t q = 2;
    friend bool operator==(const PrimePowerChoice&, const PrimePowerChoice&) = default;
};

struct Caps {
    std::size_t max_edges = default_max_edges;
    std::uint64_t max_terms = default_max_terms;
    std::uint64_t max_assignments = std::uint64_t{1} << 24;
    unsigned threads = 1;
};

inline const std::vector<std::uint64_t> default_profile_moduli{2, 3, 5, 7, 11, 13};

/// Lexicographically greatest class with agree != disagree. For the usual
/// examples this is the class of the reference orientation.
std::optional<Witness> sufficient_witness(const ClassTable& t);
/// Lexicographically greatest nonzero coefficient.
std::optional<Witness> sufficient_witness(const ReducedPolynomial& p);

/// Throws std::invalid_argument for l < 2.
LProfile necessary_profile(const ClassTable& t, const std::vector<std::uint64_t>& ls = default_profile_moduli);
/// Same rows from the coefficients; agree - disagree = coefficient, so the
/// two overloads agree.
LProfile necessary_profile(const ReducedPolynomial& p, const std::vector<std::uint64_t>& ls = default_profile_moduli);

/// Some class holds an odd number of orientations. For odd k this decides
/// k-colorability. Throws std::invalid_argument for even k.
bool odd_k_parity(const ClassTable& t);
/// Class size and coefficient have the same parity, so this is the same test.
bool odd_k_parity(const ReducedPolynomial& p);

/// Colorable iff some class has agree != disagree, i.e. the reduced graph
/// polynomial has a nonzero integer coefficient. Uses the census when
/// m <= caps.max_edges, else the polynomial engine; CapExceeded if neither fits.
Verdict decide_colorable(const Multigraph& g, std::uint32_t k, const Caps& caps = {});

/// Smallest prime p dividing neither c nor k, and the least t >= 1 with
/// p^t = 1 (mod k). Throws std::invalid_argument for c == 0 or k == 0.
PrimePowerChoice select_prime_power(std::int64_t c, std::uint32_t k);

/// First proper coloring in vertex-then-color order, colors 0..k-1.
std::optional<std::vector<std::uint32_t>> find_coloring(const Multigraph& g, std::uint32_t k);

/// Exact count over all k^n assignments. CapExceeded when k^n > max_assignments.
std::uint64_t count_colorings(const Multigraph& g, std::uint32_t k,
                              std::uint64_t max_assignments = std::uint64_t{1} << 24);

struct CoefficientMismatch {
    std::vector<std::uint32_t> residues;
    std::int64_t census = 0;
    std::int64_t polynomial = 0;
};

struct CrossCheckReport {
    std::uint32_t k = 1;
    bool tables_equal = false;
    std::vector<CoefficientMismatch> mismatches;
    Verdict verdict;
    bool oracle_colorable = false;
    std::optional<std::vector<std::uint32_t>> coloring;
    bool verdict_matches_oracle = false;

    bool ok() const noexcept { return tables_equal && verdict_matches_oracle; }
};

/// Runs both coefficient engines and the backtracking oracle on g.
CrossCheckReport cross_check(const Multigraph& g, std::uint32_t k, const Caps& caps = {});

/// Class-by-class comparison; absent entries count as zero.
std::vector<CoefficientMismatch> compare_coefficients(const ClassTable& t, const ReducedPolynomial& p);

}  // namespace orcol
