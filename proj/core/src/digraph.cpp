#include "dilworth/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dilworth/errors.hpp"

namespace dilworth {

Digraph::Builder::Builder(int n) : n_(n) {
    if (n < 0) {
        throw InvalidInput("vertex count must be non-negative, got " + std::to_string(n));
    }
    out_.assign(static_cast<std::size_t>(n), VertexSet(n));
    in_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Digraph::Builder& Digraph::Builder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (u == v) {
        throw InvalidInput("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                           ") is not allowed");
    }
    add_edge_unchecked(u, v);
    return *this;
}

void Digraph::Builder::set_out_row(int u, const VertexSet& row) {
    row.for_each([&](int v) { add_edge_unchecked(u, v); });
}

Digraph Digraph::Builder::build() && {
    for (int v = 0; v < n_; ++v) {
        if (out_[static_cast<std::size_t>(v)].test(v)) {
            throw InvalidInput("self-loop at vertex " + std::to_string(v));
        }
    }
    Digraph g(0);
    g.n_ = n_;
    g.out_ = std::move(out_);
    g.in_ = std::move(in_);
    return g;
}

Digraph::Digraph(int n)
    : n_(n),
      out_(static_cast<std::size_t>(n), VertexSet(n)),
      in_(static_cast<std::size_t>(n), VertexSet(n)) {}

int Digraph::max_out_degree() const noexcept {
    int d = 0;
    for (int u = 0; u < n_; ++u) {
        d = std::max(d, out_degree(u));
    }
    return d;
}

int Digraph::max_in_degree() const noexcept {
    int d = 0;
    for (int v = 0; v < n_; ++v) {
        d = std::max(d, in_degree(v));
    }
    return d;
}

std::size_t Digraph::edge_count() const noexcept {
    std::size_t m = 0;
    for (const auto& row : out_) {
        m += static_cast<std::size_t>(row.count());
    }
    return m;
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u) {
        out(u).for_each([&](int v) { es.emplace_back(u, v); });
    }
    return es;
}

bool Digraph::is_symmetric() const noexcept { return out_ == in_; }

bool Digraph::is_oriented() const noexcept {
    for (int u = 0; u < n_; ++u) {
        if (out(u).intersects(in(u))) {
            return false;
        }
    }
    return true;
}

std::vector<VertexSet> Digraph::undirected_rows() const {
    std::vector<VertexSet> rows(out_);
    for (int u = 0; u < n_; ++u) {
        rows[static_cast<std::size_t>(u)] |= in(u);
    }
    return rows;
}

std::vector<VertexSet> Digraph::bidirected_rows() const {
    std::vector<VertexSet> rows(out_);
    for (int u = 0; u < n_; ++u) {
        rows[static_cast<std::size_t>(u)] &= in(u);
    }
    return rows;
}

Digraph build_digraph(int n, const std::vector<Edge>& edges) {
    Digraph::Builder b(n);
    for (const auto& [u, v] : edges) {
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

Digraph transform(const Digraph& g, Transform kind) {
    const int n = g.n();
    Digraph::Builder b(n);
    for (int u = 0; u < n; ++u) {
        VertexSet row(n);
        switch (kind) {
            case Transform::complement:
                row = g.out(u).complement();
                row.reset(u);
                break;
            case Transform::reverse:
                row = g.in(u);
                break;
            case Transform::symmetrize:
                row = g.out(u) | g.in(u);
                break;
        }
        b.set_out_row(u, row);
    }
    return std::move(b).build();
}

Digraph graph_union(const Digraph& a, const Digraph& b) {
    if (a.n() != b.n()) {
        throw InvalidInput("union needs equal vertex counts, got " + std::to_string(a.n()) +
                           " and " + std::to_string(b.n()));
    }
    Digraph::Builder out(a.n());
    for (int u = 0; u < a.n(); ++u) {
        out.set_out_row(u, a.out(u) | b.out(u));
    }
    return std::move(out).build();
}

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    Digraph::Builder b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i != j && g.has_edge(vertices[static_cast<std::size_t>(i)],
                                     vertices[static_cast<std::size_t>(j)])) {
                b.add_edge_unchecked(i, j);
            }
        }
    }
    return std::move(b).build();
}

Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n()) {
        throw InvalidInput("relabelling has wrong length");
    }
    Digraph::Builder b(g.n());
    for (const auto& [u, v] : g.edges()) {
        b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return std::move(b).build();
}

// --- acyclicity ---------------------------------------------------------

std::optional<std::vector<int>> topological_order(const Digraph& g, const VertexSet& set) {
    std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);
    set.for_each([&](int v) { indeg[static_cast<std::size_t>(v)] = g.in(v).intersection_count(set); });

    VertexSet ready(g.n());
    set.for_each([&](int v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) {
            ready.set(v);
        }
    });

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(set.count()));
    while (true) {
        int v = ready.first();
        if (v < 0) {
            break;
        }
        ready.reset(v);
        order.push_back(v);
        (g.out(v) & set).for_each([&](int w) {
            if (--indeg[static_cast<std::size_t>(w)] == 0) {
                ready.set(w);
            }
        });
    }
    if (static_cast<int>(order.size()) != set.count()) {
        return std::nullopt;
    }
    return order;
}

bool is_acyclic_set(const Digraph& g, const VertexSet& set) {
    return topological_order(g, set).has_value();
}

bool stays_acyclic(const Digraph& g, const VertexSet& set, int v) {
    // A new cycle must pass through v: some out-neighbour of v inside the
    // set reaches some in-neighbour of v inside the set.
    const VertexSet targets = g.in(v) & set;
    if (targets.empty()) {
        return true;
    }
    VertexSet frontier = g.out(v) & set;
    VertexSet seen = frontier;
    while (frontier.any()) {
        if (frontier.intersects(targets)) {
            return false;
        }
        VertexSet next(g.n());
        frontier.for_each([&](int u) { next |= g.out(u); });
        next &= set;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return true;
}

// --- closure graphs -----------------------------------------------------

Digraph closure_graph(const Digraph& g) {
    const int n = g.n();
    Digraph::Builder b(n);
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c) || g.out(a).intersects(g.out(c))) {
                b.add_edge_unchecked(a, c);
                b.add_edge_unchecked(c, a);
            }
        }
    }
    return std::move(b).build();
}

Digraph closure_gadget(const Digraph& g) {
    if (!g.is_symmetric()) {
        throw InvalidInput("closure_gadget needs a symmetric digraph");
    }
    std::vector<Edge> undirected;
    for (const auto& [u, v] : g.edges()) {
        if (u < v) {
            undirected.emplace_back(u, v);
        }
    }
    const int n = g.n();
    Digraph::Builder b(n + static_cast<int>(undirected.size()));
    for (std::size_t i = 0; i < undirected.size(); ++i) {
        const int sink = n + static_cast<int>(i);
        b.add_edge_unchecked(undirected[i].first, sink);
        b.add_edge_unchecked(undirected[i].second, sink);
    }
    return std::move(b).build();
}

bool is_bipartite(const Digraph& g) {
    const int n = g.n();
    const auto rows = g.undirected_rows();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool ok = true;
            rows[static_cast<std::size_t>(u)].for_each([&](int w) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    ok = false;
                }
            });
            if (!ok) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<Edge> undirected_edges(const Digraph& g) {
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges()) {
        if (u < v) {
            es.emplace_back(u, v);
        }
    }
    return es;
}

// Per undirected edge: 0 = absent, 1 = u->v, 2 = v->u, 3 = both.
Digraph digraph_from_states(int n, const std::vector<Edge>& es, const std::vector<int>& state) {
    Digraph::Builder b(n);
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto [u, v] = es[i];
        if (state[i] & 1) {
            b.add_edge_unchecked(u, v);
        }
        if (state[i] & 2) {
            b.add_edge_unchecked(v, u);
        }
    }
    return std::move(b).build();
}

}  // namespace

RealizabilityResult closure_realizable_bruteforce(const Digraph& g) {
    RealizabilityResult r;
    if (!g.is_symmetric()) {
        r.answer = Realizability::no;
        r.reason = "closure graphs are symmetric";
        return r;
    }
    // Any edge (a,b) of F puts {a,b} into cl(F), so F lives on the edges of g.
    const auto es = undirected_edges(g);
    std::vector<int> state(es.size(), 0);
    while (true) {
        Digraph f = digraph_from_states(g.n(), es, state);
        if (closure_graph(f) == g) {
            r.answer = Realizability::yes;
            r.witness = std::move(f);
            r.reason = "exhaustive search found a witness";
            return r;
        }
        std::size_t i = 0;
        while (i < state.size() && state[i] == 3) {
            state[i++] = 0;
        }
        if (i == state.size()) {
            break;
        }
        ++state[i];
    }
    r.answer = Realizability::no;
    r.reason = "exhaustive search over all digraphs supported on E(G) found none";
    return r;
}

namespace {

// Bipartite targets are triangle-free, so every edge of g must be an
// adjacency of F and no vertex may receive two edges.
RealizabilityResult bipartite_orientation_search(const Digraph& g) {
    const auto es = undirected_edges(g);
    std::vector<int> state(es.size(), 0);
    std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == es.size()) {
            return true;
        }
        const auto [u, v] = es[i];
        for (int s = 1; s <= 3; ++s) {
            const int du = (s & 2) ? 1 : 0;
            const int dv = (s & 1) ? 1 : 0;
            if (indeg[static_cast<std::size_t>(u)] + du > 1 ||
                indeg[static_cast<std::size_t>(v)] + dv > 1) {
                continue;
            }
            indeg[static_cast<std::size_t>(u)] += du;
            indeg[static_cast<std::size_t>(v)] += dv;
            state[i] = s;
            if (rec(i + 1)) {
                return true;
            }
            indeg[static_cast<std::size_t>(u)] -= du;
            indeg[static_cast<std::size_t>(v)] -= dv;
        }
        state[i] = 0;
        return false;
    };

    RealizabilityResult r;
    if (rec(0)) {
        Digraph f = digraph_from_states(g.n(), es, state);
        if (!(closure_graph(f) == g)) {
            throw InternalError("bipartite orientation witness does not reproduce the target");
        }
        r.answer = Realizability::yes;
        r.witness = std::move(f);
        r.reason = "orientation with all in-degrees at most 1";
    } else {
        r.answer = Realizability::no;
        r.reason = "bipartite: every orientation has a vertex of in-degree 2";
    }
    return r;
}

}  // namespace

RealizabilityResult is_closure_realizable(const Digraph& g, int exhaustive_limit) {
    RealizabilityResult r;
    if (!g.is_symmetric()) {
        r.answer = Realizability::no;
        r.reason = "closure graphs are symmetric";
        return r;
    }
    if (is_bipartite(g)) {
        const std::size_t m = g.edge_count() / 2;
        if (m >= static_cast<std::size_t>(g.n()) + 1) {
            r.answer = Realizability::no;
            r.reason = "bipartite with |E| >= |V|+1";
            return r;
        }
        return bipartite_orientation_search(g);
    }
    if (g.n() <= exhaustive_limit) {
        return closure_realizable_bruteforce(g);
    }
    r.answer = Realizability::unknown;
    r.reason = "not bipartite and beyond the exhaustive search horizon";
    return r;
}

// --- automorphisms ------------------------------------------------------

namespace {

class IsoSearch {
public:
    IsoSearch(const Digraph& a, const Digraph& b) : a_(a), b_(b), n_(a.n()) {
        map_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
        // Most constrained (highest total degree) first, index tie-break.
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return a_.out_degree(x) + a_.in_degree(x) > a_.out_degree(y) + a_.in_degree(y);
        });
    }

    std::optional<std::vector<int>> run(int forced_src, int forced_dst) {
        if (forced_src >= 0) {
            if (!compatible(forced_src, forced_dst)) {
                return std::nullopt;
            }
            auto it = std::find(order_.begin(), order_.end(), forced_src);
            std::rotate(order_.begin(), it, it + 1);
        }
        forced_src_ = forced_src;
        forced_dst_ = forced_dst;
        if (rec(0)) {
            return map_;
        }
        return std::nullopt;
    }

private:
    bool compatible(int u, int x) const {
        return a_.out_degree(u) == b_.out_degree(x) && a_.in_degree(u) == b_.in_degree(x);
    }

    bool consistent(int u, int x) const {
        for (int w = 0; w < n_; ++w) {
            const int y = map_[static_cast<std::size_t>(w)];
            if (y < 0) {
                continue;
            }
            if (a_.has_edge(u, w) != b_.has_edge(x, y) || a_.has_edge(w, u) != b_.has_edge(y, x)) {
                return false;
            }
        }
        return true;
    }

    bool rec(std::size_t depth) {
        if (depth == order_.size()) {
            return true;
        }
        const int u = order_[depth];
        for (int x = 0; x < n_; ++x) {
            if (depth == 0 && forced_src_ >= 0 && x != forced_dst_) {
                continue;
            }
            if (used_[static_cast<std::size_t>(x)] || !compatible(u, x) || !consistent(u, x)) {
                continue;
            }
            map_[static_cast<std::size_t>(u)] = x;
            used_[static_cast<std::size_t>(x)] = true;
            if (rec(depth + 1)) {
                return true;
            }
            map_[static_cast<std::size_t>(u)] = -1;
            used_[static_cast<std::size_t>(x)] = false;
        }
        return false;
    }

    const Digraph& a_;
    const Digraph& b_;
    int n_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
    int forced_src_ = -1;
    int forced_dst_ = -1;
};

}  // namespace

bool is_vertex_transitive(const Digraph& g, int limit) {
    if (g.n() > limit) {
        throw LimitExceeded("vertex-transitivity backtracking beyond the configured vertex limit",
                            static_cast<std::uint64_t>(g.n()), static_cast<std::uint64_t>(limit));
    }
    // Orbit of vertex 0 must be everything.
    VertexSet orbit(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (orbit.test(v)) {
            continue;
        }
        auto perm = IsoSearch(g, g).run(0, v);
        if (!perm) {
            return false;
        }
        // Powers of the automorphism map 0 to further orbit members.
        int x = 0;
        do {
            orbit.set(x);
            x = (*perm)[static_cast<std::size_t>(x)];
        } while (x != 0);
    }
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b, int limit) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    if (a.n() > limit) {
        throw LimitExceeded("isomorphism brute force beyond the configured vertex limit",
                            static_cast<std::uint64_t>(a.n()), static_cast<std::uint64_t>(limit));
    }
    return IsoSearch(a, b).run(-1, -1);
}

}  // namespace dilworth
