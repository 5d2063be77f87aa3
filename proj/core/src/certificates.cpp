#include "dilworth/certificates.hpp"

#include <algorithm>
#include <map>

#include "dilworth/errors.hpp"

namespace dilworth {

namespace {

std::string pair_str(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

void check_vertex(const Digraph& g, int v, const char* where) {
    if (v < 0 || v >= g.n()) {
        throw MalformedCertificate(std::string(where) + ": vertex " + std::to_string(v) + " outside 0.." +
                                   std::to_string(g.n() - 1));
    }
}

void check_distinct(const Digraph& g, const std::vector<int>& vs, const char* where) {
    VertexSet seen(g.n());
    for (int v : vs) {
        check_vertex(g, v, where);
        if (seen.test(v)) {
            throw MalformedCertificate(std::string(where) + ": vertex " + std::to_string(v) + " repeated");
        }
        seen.set(v);
    }
}

}  // namespace

int Coloring::distinct() const {
    std::vector<int> sorted(colors);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::map<int, std::vector<int>> by_color;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        by_color[colors[v]].push_back(static_cast<int>(v));
    }
    std::vector<std::vector<int>> out;
    for (auto& [c, vs] : by_color) {
        out.push_back(std::move(vs));
    }
    return out;
}

Coloring Coloring::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(n), -1);
    c.k = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (int v : classes[i]) {
            if (v < 0 || v >= n) {
                throw MalformedCertificate("color class member " + std::to_string(v) + " out of range");
            }
            if (c.colors[static_cast<std::size_t>(v)] >= 0) {
                throw MalformedCertificate("vertex " + std::to_string(v) + " appears in two color classes");
            }
            c.colors[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (c.colors[static_cast<std::size_t>(v)] < 0) {
            throw MalformedCertificate("vertex " + std::to_string(v) + " has no color");
        }
    }
    return c;
}

AcyclicCover AcyclicCover::from_classes(const Digraph& g, const std::vector<std::vector<int>>& classes) {
    AcyclicCover cover;
    cover.classes = classes;
    for (const auto& cls : classes) {
        check_distinct(g, cls, "acyclic cover class");
        auto order = topological_order(g, VertexSet::of(g.n(), cls));
        if (!order) {
            throw UnverifiedCertificate("class is not acyclic");
        }
        cover.orders.push_back(std::move(*order));
    }
    return cover;
}

std::string to_string(SubsetKind kind) {
    switch (kind) {
        case SubsetKind::independent: return "independent";
        case SubsetKind::symmetric_clique: return "symmetric_clique";
        case SubsetKind::transitive_clique: return "transitive_clique";
        case SubsetKind::acyclic: return "acyclic";
    }
    return "?";
}

SubsetKind parse_subset_kind(const std::string& name) {
    if (name == "independent") return SubsetKind::independent;
    if (name == "symmetric_clique") return SubsetKind::symmetric_clique;
    if (name == "transitive_clique") return SubsetKind::transitive_clique;
    if (name == "acyclic") return SubsetKind::acyclic;
    throw MalformedCertificate("unknown subset certificate kind '" + name + "'");
}

Verdict verify_certificate(const Digraph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.n()) {
        throw MalformedCertificate("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                                   std::to_string(g.n()) + " vertices");
    }
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        if (c.colors[v] < 0 || c.colors[v] >= c.k) {
            throw MalformedCertificate("vertex " + std::to_string(v) + " has color " + std::to_string(c.colors[v]) +
                                       " outside 0.." + std::to_string(c.k - 1));
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) {
            return Verdict::fail("edge " + pair_str(u, v) + " joins two vertices of color " +
                                 std::to_string(c.colors[static_cast<std::size_t>(u)]));
        }
    }
    return Verdict::pass();
}

Verdict verify_certificate(const Digraph& g, const AcyclicCover& c) {
    if (c.orders.size() != c.classes.size()) {
        throw MalformedCertificate("acyclic cover has " + std::to_string(c.classes.size()) + " classes but " +
                                   std::to_string(c.orders.size()) + " orders");
    }
    VertexSet covered(g.n());
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        check_distinct(g, c.classes[i], "acyclic cover class");
        check_distinct(g, c.orders[i], "acyclic cover order");
        auto sorted_class = c.classes[i];
        auto sorted_order = c.orders[i];
        std::sort(sorted_class.begin(), sorted_class.end());
        std::sort(sorted_order.begin(), sorted_order.end());
        if (sorted_class != sorted_order) {
            throw MalformedCertificate("order of class " + std::to_string(i) + " is not a permutation of the class");
        }
        for (std::size_t p = 0; p < c.orders[i].size(); ++p) {
            pos[static_cast<std::size_t>(c.orders[i][p])] = static_cast<int>(p);
        }
        for (std::size_t a = 0; a < c.orders[i].size(); ++a) {
            for (std::size_t b = a + 1; b < c.orders[i].size(); ++b) {
                const int early = c.orders[i][a];
                const int late = c.orders[i][b];
                if (g.has_edge(late, early)) {
                    return Verdict::fail("class " + std::to_string(i) + ": edge " + pair_str(late, early) +
                                         " goes backward in the order");
                }
            }
        }
        for (int v : c.classes[i]) {
            covered.set(v);
        }
    }
    if (covered.count() != g.n()) {
        const int missing = (covered.complement()).first();
        return Verdict::fail("vertex " + std::to_string(missing) + " is not covered");
    }
    return Verdict::pass();
}

Verdict verify_certificate(const Digraph& g, const SubsetCertificate& c) {
    check_distinct(g, c.vertices, "subset certificate");
    const auto& vs = c.vertices;
    switch (c.kind) {
        case SubsetKind::independent:
            for (std::size_t a = 0; a < vs.size(); ++a) {
                for (std::size_t b = a + 1; b < vs.size(); ++b) {
                    if (g.adjacent(vs[a], vs[b])) {
                        const int u = g.has_edge(vs[a], vs[b]) ? vs[a] : vs[b];
                        const int w = u == vs[a] ? vs[b] : vs[a];
                        return Verdict::fail("edge " + pair_str(u, w) + " inside the independent set");
                    }
                }
            }
            return Verdict::pass();
        case SubsetKind::symmetric_clique:
            for (std::size_t a = 0; a < vs.size(); ++a) {
                for (std::size_t b = 0; b < vs.size(); ++b) {
                    if (a != b && !g.has_edge(vs[a], vs[b])) {
                        return Verdict::fail("edge " + pair_str(vs[a], vs[b]) + " missing from the symmetric clique");
                    }
                }
            }
            return Verdict::pass();
        case SubsetKind::transitive_clique:
        case SubsetKind::acyclic: {
            check_distinct(g, c.order, "subset certificate order");
            auto s1 = vs;
            auto s2 = c.order;
            std::sort(s1.begin(), s1.end());
            std::sort(s2.begin(), s2.end());
            if (s1 != s2) {
                throw MalformedCertificate("subset order is not a permutation of the vertices");
            }
            for (std::size_t a = 0; a < c.order.size(); ++a) {
                for (std::size_t b = a + 1; b < c.order.size(); ++b) {
                    const int early = c.order[a];
                    const int late = c.order[b];
                    if (c.kind == SubsetKind::transitive_clique && !g.has_edge(early, late)) {
                        return Verdict::fail("forward edge " + pair_str(early, late) + " missing");
                    }
                    if (c.kind == SubsetKind::acyclic && g.has_edge(late, early)) {
                        return Verdict::fail("edge " + pair_str(late, early) + " goes backward in the order");
                    }
                }
            }
            return Verdict::pass();
        }
    }
    return Verdict::pass();
}

}  // namespace dilworth
