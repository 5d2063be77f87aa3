#include "dilworth/families.hpp"

#include "dilworth/errors.hpp"

namespace dilworth {

namespace {

Digraph cycle(int k) {
    if (k < 3) {
        throw InvalidInput("cycles need k >= 3, got " + std::to_string(k));
    }
    Digraph::Builder b(k);
    for (int i = 0; i < k; ++i) {
        b.add_edge(i, (i + 1) % k);
    }
    return std::move(b).build();
}

Digraph rotational_tournament(int m) {
    if (m < 1 || m % 2 == 0) {
        throw InvalidInput("T_m needs odd m >= 1, got " + std::to_string(m));
    }
    Digraph::Builder b(m);
    for (int i = 0; i < m; ++i) {
        for (int r = 1; r <= (m - 1) / 2; ++r) {
            b.add_edge(i, (i + r) % m);
        }
    }
    return std::move(b).build();
}

// The 5-cycle 0-1-2-3-4-0 oriented so that 3 is the only vertex of
// outdegree 1, its out-neighbour is 2, 1 and 4 are sources of two edges
// and 0, 2 are sinks.
Digraph alt_cycle() { return build_digraph(5, {{1, 0}, {1, 2}, {3, 2}, {4, 0}, {4, 3}}); }

Digraph complete(int n) {
    if (n < 1) {
        throw InvalidInput("K_n needs n >= 1");
    }
    return complement(Digraph(n));
}

}  // namespace

Digraph generate(const GraphFamily& family) {
    const int p = family.param;
    switch (family.kind) {
        case FamilyKind::cycle:
            return cycle(p);
        case FamilyKind::cycle_complement:
            return complement(cycle(p));
        case FamilyKind::tournament:
            return rotational_tournament(p);
        case FamilyKind::alt_cycle:
            return alt_cycle();
        case FamilyKind::alt_cycle_complement:
            return complement(alt_cycle());
        case FamilyKind::single_edge:
            return build_digraph(2, {{0, 1}});
        case FamilyKind::bollobas:
            return build_digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}});
        case FamilyKind::complete:
            return complete(p);
        case FamilyKind::empty:
            if (p < 1) {
                throw InvalidInput("E_n needs n >= 1");
            }
            return Digraph(p);
        case FamilyKind::transitive_tournament: {
            if (p < 1) {
                throw InvalidInput("transitive tournament needs n >= 1");
            }
            Digraph::Builder b(p);
            for (int i = 0; i < p; ++i) {
                for (int j = i + 1; j < p; ++j) {
                    b.add_edge(i, j);
                }
            }
            return std::move(b).build();
        }
        case FamilyKind::undirected_cycle:
            return symmetrize(cycle(p));
    }
    throw InvalidInput("unknown graph family");
}

GraphFamily parse_family(const std::string& name, int param) {
    if (name == "C") return {FamilyKind::cycle, param};
    if (name == "S") return {FamilyKind::cycle_complement, param};
    if (name == "T") return {FamilyKind::tournament, param};
    if (name == "A5") return {FamilyKind::alt_cycle, 5};
    if (name == "A5c") return {FamilyKind::alt_cycle_complement, 5};
    if (name == "L") return {FamilyKind::single_edge, 2};
    if (name == "F") return {FamilyKind::bollobas, 3};
    if (name == "K") return {FamilyKind::complete, param};
    if (name == "E") return {FamilyKind::empty, param};
    if (name == "TT") return {FamilyKind::transitive_tournament, param};
    if (name == "U") return {FamilyKind::undirected_cycle, param};
    throw InvalidInput("unknown family '" + name + "' (expected C, S, T, A5, A5c, L, F, K, E, TT, U)");
}

std::string family_name(const GraphFamily& family) {
    const std::string p = std::to_string(family.param);
    switch (family.kind) {
        case FamilyKind::cycle: return "C" + p;
        case FamilyKind::cycle_complement: return "S" + p;
        case FamilyKind::tournament: return "T" + p;
        case FamilyKind::alt_cycle: return "A5";
        case FamilyKind::alt_cycle_complement: return "A5c";
        case FamilyKind::single_edge: return "L";
        case FamilyKind::bollobas: return "F";
        case FamilyKind::complete: return "K" + p;
        case FamilyKind::empty: return "E" + p;
        case FamilyKind::transitive_tournament: return "TT" + p;
        case FamilyKind::undirected_cycle: return "U" + p;
    }
    return "?";
}

}  // namespace dilworth
