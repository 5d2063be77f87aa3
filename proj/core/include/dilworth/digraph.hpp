#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dilworth/vertex_set.hpp"

namespace dilworth {

using Edge = std::pair<int, int>;

/// Loop-free directed graph on vertices 0..n-1 with bit-row adjacency.
/// Out-rows and in-rows are both kept so that predecessor queries are as
/// cheap as successor queries. Immutable once built.
class Digraph {
public:
    class Builder {
    public:
        explicit Builder(int n);

        /// Throws InvalidInput on a self-loop or an out-of-range endpoint.
        Builder& add_edge(int u, int v);
        /// No validation; for generators that construct edges by rule.
        void add_edge_unchecked(int u, int v) {
            out_[static_cast<std::size_t>(u)].set(v);
            in_[static_cast<std::size_t>(v)].set(u);
        }
        void set_out_row(int u, const VertexSet& row);

        Digraph build() &&;

    private:
        int n_;
        std::vector<VertexSet> out_;
        std::vector<VertexSet> in_;
    };

    Digraph() : Digraph(0) {}
    explicit Digraph(int n);

    int n() const noexcept { return n_; }
    bool has_edge(int u, int v) const noexcept { return out_[static_cast<std::size_t>(u)].test(v); }
    /// Edge in at least one direction.
    bool adjacent(int u, int v) const noexcept { return has_edge(u, v) || has_edge(v, u); }
    /// Edge in both directions.
    bool bidirected(int u, int v) const noexcept { return has_edge(u, v) && has_edge(v, u); }

    const VertexSet& out(int u) const noexcept { return out_[static_cast<std::size_t>(u)]; }
    const VertexSet& in(int v) const noexcept { return in_[static_cast<std::size_t>(v)]; }

    int out_degree(int u) const noexcept { return out(u).count(); }
    int in_degree(int v) const noexcept { return in(v).count(); }
    int max_out_degree() const noexcept;
    int max_in_degree() const noexcept;

    std::size_t edge_count() const noexcept;
    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    /// Every edge has its reverse.
    bool is_symmetric() const noexcept;
    /// No edge has its reverse.
    bool is_oriented() const noexcept;

    /// Undirected neighbourhood rows (out | in).
    std::vector<VertexSet> undirected_rows() const;
    /// Rows of the bidirected-edge graph (out & in).
    std::vector<VertexSet> bidirected_rows() const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// Digraph with exactly the given edges; duplicates collapse.
Digraph build_digraph(int n, const std::vector<Edge>& edges);

enum class Transform { complement, reverse, symmetrize };

Digraph transform(const Digraph& g, Transform kind);
inline Digraph complement(const Digraph& g) { return transform(g, Transform::complement); }
inline Digraph reverse(const Digraph& g) { return transform(g, Transform::reverse); }
inline Digraph symmetrize(const Digraph& g) { return transform(g, Transform::symmetrize); }

/// Edge-wise union of two digraphs on the same vertex count.
Digraph graph_union(const Digraph& a, const Digraph& b);

/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices);

/// Relabel: vertex v of g becomes perm[v].
Digraph relabel(const Digraph& g, const std::vector<int>& perm);

// --- acyclicity ---------------------------------------------------------

/// True iff `set` induces no directed cycle (a bidirected edge is a 2-cycle).
bool is_acyclic_set(const Digraph& g, const VertexSet& set);

/// Kahn elimination on the induced subgraph, smallest available index first.
/// Empty optional iff the set contains a cycle.
std::optional<std::vector<int>> topological_order(const Digraph& g, const VertexSet& set);

/// Given acyclic `set` not containing v, whether set + v is still acyclic.
bool stays_acyclic(const Digraph& g, const VertexSet& set, int v);

// --- closure graphs -----------------------------------------------------

/// Symmetric digraph joining a,b when (a,b) or (b,a) is an edge or a and b
/// share an out-neighbour.
Digraph closure_graph(const Digraph& g);

/// For symmetric g: one new sink per undirected edge {a,b} (a<b, lexicographic
/// order, indices n, n+1, ...) receiving (a,sink) and (b,sink); original
/// edges dropped. The closure restricted to 0..n-1 equals g.
Digraph closure_gadget(const Digraph& g);

enum class Realizability { yes, no, unknown };

struct RealizabilityResult {
    Realizability answer = Realizability::unknown;
    std::optional<Digraph> witness;
    std::string reason;
};

/// Whether some digraph F has closure_graph(F) == g.
RealizabilityResult is_closure_realizable(const Digraph& g, int exhaustive_limit = 5);

/// Exhaustive search over every digraph whose edges lie on edges of g.
/// Decides for any input; cost grows as 4^|E(g)|.
RealizabilityResult closure_realizable_bruteforce(const Digraph& g);

bool is_bipartite(const Digraph& g);

// --- automorphisms ------------------------------------------------------

inline constexpr int kDefaultTransitivityLimit = 12;
inline constexpr int kDefaultIsomorphismLimit = 8;

/// Automorphism group acts transitively on vertices. Throws LimitExceeded
/// when n exceeds `limit`.
bool is_vertex_transitive(const Digraph& g, int limit = kDefaultTransitivityLimit);

/// A bijection perm with a->perm[a] mapping edges of a onto edges of b.
std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b,
                                                 int limit = kDefaultIsomorphismLimit);

inline bool is_isomorphic(const Digraph& a, const Digraph& b, int limit = kDefaultIsomorphismLimit) {
    return find_isomorphism(a, b, limit).has_value();
}

}  // namespace dilworth
