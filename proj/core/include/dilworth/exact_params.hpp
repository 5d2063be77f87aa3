#pragma once

#include <cstdint>
#include <string>

#include "dilworth/budget.hpp"
#include "dilworth/certificates.hpp"
#include "dilworth/digraph.hpp"

namespace dilworth {

/// Result of an exact solver. `value` is the best certified value found;
/// [lower, upper] brackets the true optimum and collapses when `optimal`.
/// `proof` summarizes how optimality (or the bracket) was established.
template <typename Certificate>
struct Solved {
    int value = 0;
    int lower = 0;
    int upper = 0;
    bool optimal = false;
    Certificate certificate;
    std::uint64_t nodes = 0;
    std::string proof;
};

using SubsetResult = Solved<SubsetCertificate>;
using ColoringResult = Solved<Coloring>;
using CoverResult = Solved<AcyclicCover>;

struct SolverOptions {
    /// Vertex cap for the exact solvers.
    int vertex_limit = 1024;
    /// Cap on maximal acyclic sets enumerated for the set-cover route.
    std::uint64_t enumeration_limit = 1'000'000;
    /// Largest set system handed to the LP for the dichromatic lower bound.
    std::uint64_t lp_set_limit = 20'000;
};

SubsetResult independence_number(const Digraph& g, const Budget& budget = Budget(), const SolverOptions& opts = {});
SubsetResult symmetric_clique_number(const Digraph& g, const Budget& budget = Budget(), const SolverOptions& opts = {});
SubsetResult transitive_clique_number(const Digraph& g, const Budget& budget = Budget(), const SolverOptions& opts = {});
SubsetResult acyclicity_number(const Digraph& g, const Budget& budget = Budget(), const SolverOptions& opts = {});

/// DSATUR branch and bound on the underlying undirected graph.
ColoringResult chromatic_number(const Digraph& g, const Budget& budget = Budget(), const SolverOptions& opts = {});

/// Set cover over maximal acyclic sets with an LP lower bound; falls back
/// to direct class-assignment branch and bound when enumeration overflows.
CoverResult dichromatic_number(const Digraph& g, const Budget& budget = Budget(), const SolverOptions& opts = {});

/// The direct class-assignment route alone (used as fallback and as a
/// cross-check of the set-cover route).
CoverResult dichromatic_number_direct(const Digraph& g, const Budget& budget = Budget());

/// Maximum clique of an undirected graph given by symmetric rows.
SubsetResult max_clique(const std::vector<VertexSet>& rows, const Budget& budget);

/// Colors each vertex of and_power(g, t) by (sequence of cover classes,
/// type). Throws UnverifiedCertificate if the cover does not verify.
Coloring constructive_power_coloring(const Digraph& g, const AcyclicCover& cover, int t);

}  // namespace dilworth
