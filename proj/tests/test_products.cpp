#include <gtest/gtest.h>

#include <random>

#include "dilworth/digraph.hpp"
#include "dilworth/errors.hpp"
#include "dilworth/families.hpp"
#include "dilworth/products.hpp"
#include "oracles.hpp"

using namespace dilworth;

namespace {

Digraph fam(FamilyKind kind, int param = 0) { return generate({kind, param}); }

// Every digraph on n vertices, by edge mask over the ordered pairs.
std::vector<Digraph> all_digraphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v) {
                pairs.emplace_back(u, v);
            }
        }
    }
    std::vector<Digraph> out;
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (m >> i & 1) {
                edges.push_back(pairs[i]);
            }
        }
        out.push_back(build_digraph(n, edges));
    }
    return out;
}

}  // namespace

TEST(PowerIndex, RoundTripAndOrder) {
    const PowerIndex idx(3, 4);
    EXPECT_EQ(idx.size(), 81u);
    for (std::uint64_t v = 0; v < idx.size(); ++v) {
        EXPECT_EQ(idx.encode(idx.decode(v)), v);
    }
    EXPECT_EQ(idx.encode({1, 0, 0, 0}), 27u);
    EXPECT_EQ(idx.encode({0, 0, 0, 2}), 2u);
    EXPECT_THROW(idx.encode({0, 3, 0, 0}), InvalidInput);
    EXPECT_THROW(idx.encode({0, 0}), InvalidInput);
}

TEST(AndProduct, SingleEdgeSquared) {
    const Digraph l = fam(FamilyKind::single_edge);
    const Digraph p = and_product(l, l);
    EXPECT_EQ(p.n(), 4);
    EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
    EXPECT_EQ(and_power(l, 2), p);
}

TEST(AndProduct, TrivialFactors) {
    const Digraph e2 = fam(FamilyKind::empty, 2);
    EXPECT_EQ(and_product(e2, e2), fam(FamilyKind::empty, 4));
    const Digraph c3 = fam(FamilyKind::cycle, 3);
    EXPECT_EQ(and_product(c3, fam(FamilyKind::empty, 1)), c3);
    EXPECT_EQ(and_power(c3, 1), c3);
    EXPECT_EQ(and_power(fam(FamilyKind::alt_cycle_complement), 2).n(), 25);
}

TEST(OrProduct, Examples) {
    const Digraph l = fam(FamilyKind::single_edge);
    const Digraph p = or_product(l, l);
    EXPECT_EQ(p.n(), 4);
    EXPECT_TRUE(p.has_edge(0, 1));
    EXPECT_FALSE(p.has_edge(1, 0));
    const Digraph k1 = fam(FamilyKind::empty, 1);
    EXPECT_EQ(or_product(k1, k1).n(), 1);
    EXPECT_EQ(or_product(k1, k1).edge_count(), 0u);
    const Digraph c3 = fam(FamilyKind::cycle, 3);
    EXPECT_EQ(complement(or_product(c3, c3)), and_product(complement(c3), complement(c3)));
}

TEST(Products, ComplementPowerDualityExhaustive) {
    for (int n = 1; n <= 4; ++n) {
        const auto graphs = all_digraphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            // n = 4 has 4096 graphs; every third one keeps the run short
            // while still touching every edge pattern class.
            if (n == 4 && i % 3 != 0) {
                continue;
            }
            const Digraph& g = graphs[i];
            for (int t = 1; t <= 3; ++t) {
                ASSERT_EQ(complement(or_power(g, t)), and_power(complement(g), t)) << "n=" << n << " t=" << t;
            }
        }
    }
}

TEST(Products, AndCommutesAndAssociatesUpToRelabel) {
    std::mt19937 rng(21);
    for (int i = 0; i < 30; ++i) {
        const Digraph f = oracle::random_digraph(1 + i % 4, 0.4, rng);
        const Digraph g = oracle::random_digraph(1 + (i / 4) % 4, 0.4, rng);
        const Digraph h = oracle::random_digraph(2, 0.5, rng);
        const int nf = f.n();
        const int ng = g.n();
        std::vector<int> swap(static_cast<std::size_t>(nf * ng));
        for (int a = 0; a < nf; ++a) {
            for (int b = 0; b < ng; ++b) {
                swap[static_cast<std::size_t>(a * ng + b)] = b * nf + a;
            }
        }
        EXPECT_EQ(relabel(and_product(f, g), swap), and_product(g, f));
        EXPECT_EQ(relabel(or_product(f, g), swap), or_product(g, f));
        // Row-major indexing makes (f g) h and f (g h) literally equal.
        EXPECT_EQ(and_product(and_product(f, g), h), and_product(f, and_product(g, h)));
    }
}

TEST(Products, OutClosureSizesMultiply) {
    std::mt19937 rng(22);
    for (int i = 0; i < 20; ++i) {
        const Digraph g = oracle::random_digraph(2 + i % 3, 0.4, rng);
        for (int t = 1; t <= 3; ++t) {
            const Digraph p = and_power(g, t);
            const PowerIndex idx(g.n(), t);
            for (std::uint64_t x = 0; x < idx.size(); ++x) {
                int expected = 1;
                for (int letter : idx.decode(x)) {
                    expected *= 1 + g.out_degree(letter);
                }
                ASSERT_EQ(p.out_degree(static_cast<int>(x)) + 1, expected);
            }
        }
    }
}

TEST(Products, OracleMatchesMaterialized) {
    std::mt19937 rng(23);
    for (int i = 0; i < 10; ++i) {
        const Digraph g = oracle::random_digraph(3, 0.5, rng);
        for (ProductOp op : {ProductOp::and_op, ProductOp::or_op}) {
            const Digraph p = power(g, 3, op);
            const PowerOracle o(g, 3, op);
            for (int x = 0; x < p.n(); ++x) {
                for (int y = 0; y < p.n(); ++y) {
                    ASSERT_EQ(o.has_edge(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)),
                              p.has_edge(x, y));
                }
            }
        }
    }
}

TEST(Products, VertexLimit) {
    EXPECT_THROW(and_power(fam(FamilyKind::tournament, 5), 8), LimitExceeded);
    EXPECT_THROW(and_power(fam(FamilyKind::cycle, 3), 3, 26), LimitExceeded);
    EXPECT_EQ(and_power(fam(FamilyKind::cycle, 3), 3, 27).n(), 27);
}

TEST(TypeClass, Examples) {
    const Digraph c3 = fam(FamilyKind::cycle, 3);
    const auto perm = type_class_subgraph(c3, 3, TypeVector{{1, 1, 1}});
    EXPECT_EQ(perm.graph.n(), 6);
    EXPECT_EQ(perm.vertices.size(), 6u);
    EXPECT_TRUE(std::is_sorted(perm.vertices.begin(), perm.vertices.end()));
    EXPECT_TRUE(is_vertex_transitive(perm.graph));
    EXPECT_EQ(type_class_subgraph(fam(FamilyKind::single_edge), 4, TypeVector{{2, 2}}).graph.n(), 6);
    EXPECT_THROW(type_class_subgraph(c3, 3, TypeVector{{1, 1}}), InvalidInput);
    EXPECT_THROW(type_class_subgraph(c3, 3, TypeVector{{1, 1, 2}}), InvalidInput);
}

TEST(TypeClass, PartitionPower) {
    for (int n = 1; n <= 4; ++n) {
        for (int t = 1; t <= 4; ++t) {
            std::uint64_t total = 0;
            for (const auto& tv : all_types(n, t)) {
                EXPECT_EQ(tv.total(), t);
                total += type_class_size(tv);
            }
            std::uint64_t expected = 1;
            for (int i = 0; i < t; ++i) {
                expected *= static_cast<std::uint64_t>(n);
            }
            EXPECT_EQ(total, expected);
        }
    }
}

TEST(TypeClass, VertexTransitiveExhaustive) {
    for (int n = 1; n <= 3; ++n) {
        for (const Digraph& g : all_digraphs(n)) {
            for (int t = 1; t <= 4; ++t) {
                for (const auto& tv : all_types(n, t)) {
                    const auto cls = type_class_subgraph(g, t, tv);
                    ASSERT_EQ(cls.graph.n(), static_cast<int>(type_class_size(tv)));
                    ASSERT_TRUE(is_vertex_transitive(cls.graph));
                }
            }
        }
    }
}

TEST(Compound, Examples) {
    const Digraph l = fam(FamilyKind::single_edge);
    const Digraph lr = reverse(l);
    EXPECT_EQ(compound_union_power({l, lr}, 1), fam(FamilyKind::complete, 2));
    const Digraph t5 = fam(FamilyKind::tournament, 5);
    EXPECT_EQ(compound_union_power({t5}, 2), and_power(t5, 2));

    const Digraph u = compound_union_power({l, lr}, 2);
    const PowerIndex idx(2, 2);
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            const auto a = idx.decode(static_cast<std::uint64_t>(x));
            const auto b = idx.decode(static_cast<std::uint64_t>(y));
            const bool le = a[0] <= b[0] && a[1] <= b[1];
            const bool ge = a[0] >= b[0] && a[1] >= b[1];
            EXPECT_EQ(u.has_edge(x, y), x != y && (le || ge));
        }
    }
    EXPECT_THROW(compound_union_power({l, fam(FamilyKind::cycle, 3)}, 1), InvalidInput);
}

TEST(PowerHeader, Fields) {
    const auto h = power_header(5, 2, ProductOp::and_op);
    EXPECT_EQ(h["base_n"], 5);
    EXPECT_EQ(h["t"], 2);
    EXPECT_EQ(h["op"], "and");
}
