#pragma once

#include <string>

#include "dilworth/digraph.hpp"

namespace dilworth {

/// Named digraph families used throughout the toolkit.
enum class FamilyKind {
    cycle,                  ///< cyclically oriented C_k, edges (i, i+1 mod k)
    cycle_complement,       ///< S_k, the complement of C_k
    tournament,             ///< rotational tournament T_m, m odd
    alt_cycle,              ///< A_5
    alt_cycle_complement,   ///< complement of A_5
    single_edge,            ///< L: 2 vertices, edge (0,1)
    bollobas,               ///< F on {0,1,2}
    complete,               ///< symmetric K_n
    empty,                  ///< E_n
    transitive_tournament,  ///< edges (i,j) for all i<j
    undirected_cycle,       ///< symmetric C_k
};

struct GraphFamily {
    FamilyKind kind;
    int param = 0;
};

/// Throws InvalidInput for an invalid parameter (even m for T_m, k < 3 for cycles).
Digraph generate(const GraphFamily& family);

/// Parses the short names used on the command line: C, S, T, A5, A5c, L, F,
/// K, E, TT, U. The parameter is ignored for fixed-size families.
GraphFamily parse_family(const std::string& name, int param);

std::string family_name(const GraphFamily& family);

}  // namespace dilworth
