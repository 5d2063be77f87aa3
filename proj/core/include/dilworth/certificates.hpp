#pragma once

#include <string>
#include <vector>

#include "dilworth/digraph.hpp"

namespace dilworth {

/// Proper coloring of the underlying undirected graph.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    /// Number of distinct colors actually present.
    int distinct() const;
    /// Vertices grouped by color, colors in increasing order.
    std::vector<std::vector<int>> classes() const;
    static Coloring from_classes(int n, const std::vector<std::vector<int>>& classes);
};

/// Cover of V by acyclic classes, each with a witnessing topological order
/// (every edge inside a class goes from an earlier to a later vertex).
struct AcyclicCover {
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> orders;

    int size() const { return static_cast<int>(classes.size()); }
    /// Builds orders by Kahn elimination; throws UnverifiedCertificate if a
    /// class is cyclic.
    static AcyclicCover from_classes(const Digraph& g, const std::vector<std::vector<int>>& classes);
};

enum class SubsetKind { independent, symmetric_clique, transitive_clique, acyclic };

std::string to_string(SubsetKind kind);
SubsetKind parse_subset_kind(const std::string& name);

struct SubsetCertificate {
    SubsetKind kind = SubsetKind::independent;
    std::vector<int> vertices;
    /// Required for transitive cliques (every forward pair is an edge) and
    /// acyclic sets (no edge goes backward); ignored otherwise.
    std::vector<int> order;
};

/// Outcome of a logical check. Structural problems throw MalformedCertificate
/// instead.
struct Verdict {
    bool ok = true;
    std::string violation;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

Verdict verify_certificate(const Digraph& g, const Coloring& c);
Verdict verify_certificate(const Digraph& g, const AcyclicCover& c);
Verdict verify_certificate(const Digraph& g, const SubsetCertificate& c);

}  // namespace dilworth
