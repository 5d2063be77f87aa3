#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dilworth/errors.hpp"
#include "dilworth/exact_params.hpp"
#include "dilworth/families.hpp"
#include "dilworth/fractional.hpp"
#include "dilworth/products.hpp"
#include "oracles.hpp"

using namespace dilworth;

namespace {

Digraph fam(FamilyKind kind, int param = 0) { return generate({kind, param}); }

std::vector<oracle::Mask> masks(const SetSystem& sys) {
    std::vector<oracle::Mask> out;
    for (const auto& s : sys.sets()) {
        oracle::Mask m = 0;
        s.for_each([&](int v) { m |= oracle::Mask{1} << v; });
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(MaximalSets, Examples) {
    EXPECT_EQ(masks(maximal_acyclic_sets(fam(FamilyKind::cycle, 3))), (std::vector<oracle::Mask>{3, 5, 6}));
    EXPECT_EQ(masks(maximal_acyclic_sets(fam(FamilyKind::complete, 3))), (std::vector<oracle::Mask>{1, 2, 4}));
    const auto t5 = maximal_acyclic_sets(fam(FamilyKind::tournament, 5));
    EXPECT_EQ(masks(t5), sorted(oracle::maximal_acyclic(oracle::Adj(fam(FamilyKind::tournament, 5)))));
    for (const auto& s : t5.sets()) {
        EXPECT_EQ(s.count(), 3);
    }
    EXPECT_EQ(maximal_independent_sets(fam(FamilyKind::undirected_cycle, 5)).size(), 5u);
    EXPECT_EQ(masks(maximal_independent_sets(fam(FamilyKind::empty, 3))), (std::vector<oracle::Mask>{7}));
    EXPECT_EQ(masks(maximal_independent_sets(fam(FamilyKind::bollobas))), (std::vector<oracle::Mask>{1, 2, 4}));
}

TEST(MaximalSets, MatchBruteForce) {
    std::mt19937 rng(41);
    for (int i = 0; i < 100; ++i) {
        const Digraph g = oracle::random_digraph(1 + i % 9, 0.2 + 0.1 * (i % 6), rng);
        const oracle::Adj a(g);
        ASSERT_EQ(masks(maximal_acyclic_sets(g)), sorted(oracle::maximal_acyclic(a)));
        ASSERT_EQ(masks(maximal_independent_sets(g)), sorted(oracle::maximal_independent(a)));
        const auto sys = maximal_acyclic_sets(g);
        EXPECT_TRUE(std::is_sorted(sys.sets().begin(), sys.sets().end(), VertexSet::lex_less));
    }
}

TEST(MaximalSets, EnumerationLimit) {
    try {
        maximal_acyclic_sets(and_power(fam(FamilyKind::tournament, 5), 2), 100);
        FAIL() << "expected overflow";
    } catch (const LimitExceeded& e) {
        EXPECT_EQ(e.limit(), 100u);
        EXPECT_GT(e.required(), 100u);
    }
}

TEST(SetSystem, RejectsUncoveredElement) {
    EXPECT_THROW(SetSystem(3, {VertexSet(3, {0, 1})}), InvalidInput);
    EXPECT_THROW(SetSystem(3, {VertexSet(4, {0, 1, 2})}), InvalidInput);
}

TEST(CoverLp, Examples) {
    const SetSystem tri(3, {VertexSet(3, {0, 1}), VertexSet(3, {0, 2}), VertexSet(3, {1, 2})});
    const auto sol = fractional_cover_number(tri);
    EXPECT_EQ(sol.value, Rational(3, 2));
    for (const auto& w : sol.weights) {
        EXPECT_EQ(w, Rational(1, 2));
    }
    EXPECT_TRUE(verify_lp_solution(tri, sol));

    std::vector<VertexSet> singles;
    for (int v = 0; v < 6; ++v) {
        singles.push_back(VertexSet(6, {v}));
    }
    EXPECT_EQ(fractional_cover_number(SetSystem(6, singles)).value, Rational(6));
    EXPECT_EQ(fractional_cover_number(SetSystem(6, {VertexSet::full(6)})).value, Rational(1));
}

TEST(CoverLp, VerifierRejectsTampering) {
    const SetSystem tri(3, {VertexSet(3, {0, 1}), VertexSet(3, {0, 2}), VertexSet(3, {1, 2})});
    auto sol = fractional_cover_number(tri);
    auto low = sol;
    low.weights[0] = Rational(1, 4);
    EXPECT_FALSE(verify_lp_solution(tri, low));
    auto dual = sol;
    dual.dual[0] = Rational(1);
    EXPECT_FALSE(verify_lp_solution(tri, dual));
    auto value = sol;
    value.value = Rational(7, 5);
    EXPECT_FALSE(verify_lp_solution(tri, value));
}

TEST(Fractional, PublishedValues) {
    EXPECT_EQ(fractional_dichromatic(fam(FamilyKind::alt_cycle_complement)).value, Rational(5, 2));
    EXPECT_EQ(fractional_dichromatic(fam(FamilyKind::tournament, 5)).value, Rational(5, 3));
    for (int k = 3; k <= 7; ++k) {
        EXPECT_EQ(fractional_dichromatic(fam(FamilyKind::cycle, k)).value, Rational(k, k - 1));
    }
    EXPECT_EQ(fractional_chromatic(fam(FamilyKind::undirected_cycle, 5)).value, Rational(5, 2));
    EXPECT_EQ(fractional_chromatic(fam(FamilyKind::undirected_cycle, 7)).value, Rational(7, 3));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(fractional_chromatic(fam(FamilyKind::complete, n)).value, Rational(n));
    }
}

TEST(Fractional, LargeSystems) {
    const auto sys = maximal_acyclic_sets(and_power(fam(FamilyKind::tournament, 5), 2));
    const auto sol = fractional_cover_number(sys);
    EXPECT_EQ(sol.value, Rational(25, 9));
    EXPECT_EQ(fractional_dichromatic(and_power(fam(FamilyKind::alt_cycle_complement), 2)).value, Rational(23, 4));
}

// Solver LP values against vertex enumeration of the packing polytope.
TEST(Fractional, OracleEquivalence) {
    std::mt19937 rng(42);
    for (int i = 0; i < 80; ++i) {
        const Digraph g = oracle::random_digraph(1 + i % 8, 0.2 + 0.15 * (i % 5), rng);
        const oracle::Adj a(g);
        const auto d = fractional_dichromatic(g);
        const auto c = fractional_chromatic(g);
        ASSERT_TRUE(verify_lp_solution(maximal_acyclic_sets(g), d));
        ASSERT_TRUE(verify_lp_solution(maximal_independent_sets(g), c));
        ASSERT_EQ(d.value, oracle::chidir_f(a)) << i;
        ASSERT_EQ(c.value, oracle::chi_f(a)) << i;
    }
}

// Restricting the LP to maximal sets changes nothing.
TEST(Fractional, MaximalRestrictionIsExact) {
    std::mt19937 rng(43);
    for (int i = 0; i < 25; ++i) {
        const Digraph g = oracle::random_digraph(1 + i % 6, 0.5, rng);
        const oracle::Adj a(g);
        std::vector<oracle::Mask> all;
        for (oracle::Mask s = 1; s < (oracle::Mask{1} << g.n()); ++s) {
            if (oracle::acyclic(a, s)) {
                all.push_back(s);
            }
        }
        std::vector<VertexSet> sets;
        for (oracle::Mask s : all) {
            VertexSet v(g.n());
            for (int x = 0; x < g.n(); ++x) {
                if (s >> x & 1) {
                    v.set(x);
                }
            }
            sets.push_back(v);
        }
        EXPECT_EQ(fractional_cover_number(SetSystem(g.n(), sets)).value, fractional_dichromatic(g).value);
    }
}

TEST(Fractional, BoundedByIntegral) {
    std::mt19937 rng(44);
    for (int i = 0; i < 40; ++i) {
        const Digraph g = oracle::random_digraph(1 + i % 9, 0.5, rng);
        const auto lp = fractional_dichromatic(g);
        const auto cd = dichromatic_number(g, Budget(30));
        const auto a = acyclicity_number(g, Budget(30));
        ASSERT_TRUE(cd.optimal && a.optimal);
        EXPECT_LE(lp.value, Rational(cd.value));
        // Rounding bound with log base 2.
        EXPECT_LE(cd.value, lp.value.to_double() * (1 + std::log2(a.value)) + 1e-9);
    }
}

TEST(Fractional, VertexTransitiveFormula) {
    std::vector<Digraph> graphs;
    for (int k = 3; k <= 7; ++k) {
        graphs.push_back(fam(FamilyKind::cycle, k));
        graphs.push_back(fam(FamilyKind::cycle_complement, k));
    }
    for (int m : {1, 3, 5, 7, 9}) {
        graphs.push_back(fam(FamilyKind::tournament, m));
    }
    for (int n = 1; n <= 6; ++n) {
        graphs.push_back(fam(FamilyKind::complete, n));
    }
    for (const auto& g : graphs) {
        ASSERT_TRUE(is_vertex_transitive(g));
        const auto a = acyclicity_number(g, Budget(30));
        ASSERT_TRUE(a.optimal);
        EXPECT_EQ(fractional_dichromatic(g).value, Rational(g.n(), a.value));
    }
}
