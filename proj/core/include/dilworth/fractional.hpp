#pragma once

#include <cstdint>
#include <vector>

#include "dilworth/budget.hpp"
#include "dilworth/digraph.hpp"
#include "dilworth/rational.hpp"

namespace dilworth {

/// Family of subsets of a ground set 0..ground-1. Every element must lie in
/// at least one set, otherwise the covering LP is infeasible.
class SetSystem {
public:
    SetSystem(int ground, std::vector<VertexSet> sets);

    int ground() const noexcept { return ground_; }
    const std::vector<VertexSet>& sets() const noexcept { return sets_; }
    std::size_t size() const noexcept { return sets_.size(); }
    /// Largest set size (mu of the hypergraph).
    int max_set_size() const;

private:
    int ground_;
    std::vector<VertexSet> sets_;
};

/// Optimal covering LP solution with its dual as an optimality witness.
struct LPSolution {
    Rational value;
    std::vector<Rational> weights;  ///< one per set
    std::vector<Rational> dual;     ///< one per ground element
    std::uint64_t pivots = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

/// All inclusion-maximal acyclic vertex sets, lexicographic. Throws
/// LimitExceeded (with the partial count) past `limit`, BudgetExhausted when
/// the budget runs out.
SetSystem maximal_acyclic_sets(const Digraph& g, std::uint64_t limit = kDefaultEnumerationLimit,
                               const Budget& budget = Budget::unlimited());

/// All maximal independent sets of the underlying undirected graph,
/// lexicographic.
SetSystem maximal_independent_sets(const Digraph& g, std::uint64_t limit = kDefaultEnumerationLimit,
                                   const Budget& budget = Budget::unlimited());

/// min sum w_S s.t. sum_{S containing v} w_S >= 1, w >= 0, solved exactly by
/// two-phase revised simplex (Dantzig pricing, Bland after a run of
/// degenerate pivots).
LPSolution fractional_cover_number(const SetSystem& sys, const Budget& budget = Budget::unlimited());

/// Re-checks primal feasibility, dual feasibility and equal objective values.
bool verify_lp_solution(const SetSystem& sys, const LPSolution& sol);

LPSolution fractional_dichromatic(const Digraph& g, std::uint64_t limit = kDefaultEnumerationLimit,
                                  const Budget& budget = Budget::unlimited());
LPSolution fractional_chromatic(const Digraph& g, std::uint64_t limit = kDefaultEnumerationLimit,
                                const Budget& budget = Budget::unlimited());

}  // namespace dilworth
