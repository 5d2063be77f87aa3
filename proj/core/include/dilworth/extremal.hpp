#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dilworth/budget.hpp"
#include "dilworth/certificates.hpp"
#include "dilworth/exact_params.hpp"
#include "dilworth/products.hpp"
#include "dilworth/rational.hpp"

namespace dilworth {

/// Disjoint pair (A, B) of subsets of {1..t}. As a ternary sequence,
/// position i holds 1 if i+1 is in A, 2 if it is in B, 0 otherwise.
struct SetPair {
    std::vector<int> a;
    std::vector<int> b;

    static SetPair from_sequence(const Sequence& seq);
    Sequence to_sequence(int t) const;
    bool operator==(const SetPair&) const = default;
};

/// The cardinality levels of the Boolean lattice on t elements, each level
/// listing subsets as bitmasks (bit i stands for element i+1).
std::vector<std::vector<std::uint32_t>> antichain_cover(int t);

/// Each class is an antichain under inclusion and every subset is covered.
bool verify_antichain_cover(int t, const std::vector<std::vector<std::uint32_t>>& cover);

/// The level coloring of the t-th AND power of the single edge 0 -> 1
/// (color = number of ones).
Coloring antichain_coloring(int t);

/// A_i meets B_j and A_j meets B_i for all i != j. Throws InvalidInput if a
/// pair is not disjoint.
bool is_cross_intersecting(const std::vector<SetPair>& pairs);

/// Sum of 1 / binom(|A|+|B|, |A|); at most 1 for cross-intersecting families.
Rational bollobas_sum(const std::vector<SetPair>& pairs);

struct BollobasReport {
    int t = 0;
    /// Symmetric clique bound 2^t.
    std::uint64_t lower = 1;
    /// Colors used by the construction from an optimal acyclic cover of F.
    int constructive = 0;
    /// (t+1)^3 * 2^t.
    std::uint64_t constructive_cap = 0;
    bool constructive_proper = false;
    /// Exact chromatic number of the power when the solver finished.
    std::optional<int> exact;
    ColoringResult solved;
    bool solver_ran = false;
    /// Color classes of the best coloring available, as set-pair families.
    std::vector<std::vector<SetPair>> families;
    bool families_cross_intersecting = true;
    Rational max_bollobas_sum;
};

/// B(t) = chi of the t-th AND power of F. Runs the exact solver when
/// 3^t <= exact_limit.
BollobasReport bollobas_cover_bounds(int t, const Budget& budget = Budget(), std::uint64_t exact_limit = 8192);

/// Decodes each color class of a coloring of the F power into set pairs.
std::vector<std::vector<SetPair>> families_of(int t, const Coloring& coloring);

}  // namespace dilworth
