#include "dilworth/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "dilworth/errors.hpp"
#include "dilworth/families.hpp"
#include "dilworth/fractional.hpp"
#include "dilworth/graph_io.hpp"

namespace dilworth {

RootValue RootValue::of(const Rational& radicand, int root) {
    if (radicand.sign() <= 0) {
        throw InvalidInput("root value needs a positive radicand, got " + radicand.str());
    }
    if (root < 1) {
        throw InvalidInput("root index must be at least 1");
    }
    return RootValue{radicand, root};
}

double RootValue::value() const { return std::exp2(log2()); }

std::string RootValue::str() const {
    if (root == 1) {
        return radicand.str();
    }
    const std::string base = radicand.str();
    const bool bare = base.find('/') == std::string::npos && base[0] != '-';
    return (bare ? base : "(" + base + ")") + "^(1/" + std::to_string(root) + ")";
}

bool operator==(const RootValue& a, const RootValue& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const RootValue& a, const RootValue& b) {
    // a^(1/p) vs b^(1/q)  <=>  a^q vs b^p
    return a.radicand.pow(static_cast<unsigned>(b.root)) <=> b.radicand.pow(static_cast<unsigned>(a.root));
}

Distribution::Distribution(std::vector<Rational> probs) : probs_(std::move(probs)) {
    Rational total(0);
    for (const auto& p : probs_) {
        if (p.sign() < 0) {
            throw InvalidInput("negative probability " + p.str());
        }
        total += p;
    }
    if (total != Rational(1)) {
        throw InvalidInput("probabilities sum to " + total.str() + ", not 1");
    }
}

Distribution Distribution::uniform(int n) {
    if (n < 1) {
        throw InvalidInput("uniform distribution needs at least one point");
    }
    return Distribution(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

Distribution Distribution::of_type(const TypeVector& tv) {
    const int total = tv.total();
    if (total < 1) {
        throw InvalidInput("empty type has no empirical distribution");
    }
    std::vector<Rational> probs;
    for (int c : tv.counts) {
        probs.emplace_back(c, total);
    }
    return Distribution(std::move(probs));
}

double entropy(const Distribution& p) {
    double h = 0;
    for (const auto& q : p.probs()) {
        if (q.sign() > 0) {
            h -= q.to_double() * q.log2();
        }
    }
    return h;
}

double AlonBound::log2() const { return std::log2(static_cast<double>(argument)); }

AlonBound alon_sperner_upper(const Digraph& g) {
    return AlonBound{std::min(g.max_out_degree(), g.max_in_degree()) + 1};
}

Bracket sperner_capacity_bounds(const Digraph& g, const Budget& budget) {
    Bracket b;
    const SubsetResult tr = transitive_clique_number(g, budget);
    b.lower = RootValue::of(Rational(std::max(1, tr.value)));
    b.upper = RootValue::of(Rational(alon_sperner_upper(g).argument));
    b.lower_optimal = tr.optimal;
    b.tight = b.lower == b.upper;
    return b;
}

Bracket gamma_bounds(const Digraph& g, const Budget& budget) {
    Bracket b;
    const SubsetResult a = acyclicity_number(g, budget);
    b.lower = RootValue::of(Rational(std::max(1, a.value)));
    b.upper = RootValue::of(Rational(alon_sperner_upper(complement(g)).argument));
    b.lower_optimal = a.optimal;
    b.tight = b.lower == b.upper;
    return b;
}

std::optional<RootValue> cited_sperner_capacity(const Digraph& g) {
    if (g.n() != 5 || !g.is_oriented() || g.edge_count() != 5) {
        return std::nullopt;
    }
    const auto rows = g.undirected_rows();
    for (const auto& r : rows) {
        if (r.count() != 2) {
            return std::nullopt;
        }
    }
    // 2-regular on 5 vertices: connected iff a walk from 0 sees everything.
    VertexSet seen(5, {0});
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next(5);
        frontier.for_each([&](int v) { next |= rows[static_cast<std::size_t>(v)]; });
        next -= seen;
        seen |= next;
        frontier = next;
    }
    if (seen.count() != 5) {
        return std::nullopt;
    }
    if (is_isomorphic(g, generate({FamilyKind::alt_cycle, 5}))) {
        return RootValue::of(Rational(5), 2);
    }
    return RootValue::of(Rational(2));
}

std::string Cell::status() const {
    if (!computed) {
        return "skipped";
    }
    return optimal ? "optimal" : "bracket";
}

const Bound& BoundReport::best_lower() const {
    return *std::max_element(lower_bounds.begin(), lower_bounds.end(),
                             [](const Bound& a, const Bound& b) { return a.value < b.value; });
}

const Bound& BoundReport::best_upper() const {
    return *std::min_element(upper_bounds.begin(), upper_bounds.end(),
                             [](const Bound& a, const Bound& b) { return a.value < b.value; });
}

namespace {

template <typename R>
Cell cell_of(const R& res) {
    Cell c;
    c.computed = true;
    c.optimal = res.optimal;
    c.lower = res.lower;
    c.upper = res.upper;
    c.note = res.proof;
    return c;
}

Cell skipped(const std::string& why) {
    Cell c;
    c.note = why;
    return c;
}

std::string power_label(const std::string& param, int t) {
    return t == 1 ? param + "(G)" : param + "(G^" + std::to_string(t) + ")^(1/" + std::to_string(t) + ")";
}

}  // namespace

BoundReport dilworth_bounds(const Digraph& g, const ReportOptions& opts, const std::string& graph_id) {
    if (g.n() < 1) {
        throw InvalidInput("rate bounds need at least one vertex");
    }
    if (opts.t_max < 0) {
        throw InvalidInput("t_max must be nonnegative");
    }
    BoundReport rep;
    rep.graph_id = graph_id;
    rep.graph_hash = graph_hash(g);
    rep.n = g.n();
    const Rational n(g.n());

    const Digraph comp = complement(g);
    const int alon_c = alon_sperner_upper(comp).argument;
    rep.lower_bounds.push_back({"degree_gamma", RootValue::of(n / Rational(alon_c)),
                                "R_D(G) >= log n - Gamma(G), Gamma(G) <= log2(min(D+,D-)+1) of the complement = log2 " +
                                    std::to_string(alon_c)});
    if (auto sigma = cited_sperner_capacity(comp)) {
        const Rational rad = n.pow(static_cast<unsigned>(sigma->root)) / sigma->radicand;
        rep.lower_bounds.push_back({"cited_gamma", RootValue::of(rad, sigma->root),
                                    "R_D(G) >= log n - Gamma(G), Gamma(G) = Sigma(complement) = log2 " + sigma->str() +
                                        " (published value for oriented 5-cycles)",
                                    true});
    }
    const SubsetResult ws = symmetric_clique_number(g, Budget(opts.cell_seconds), opts.solver);
    rep.lower_bounds.push_back({"symmetric_clique", RootValue::of(Rational(std::max(1, ws.value))),
                                "a symmetric clique of size s gives chi(G^t) >= s^t; s = " + std::to_string(ws.value)});

    try {
        const LPSolution lp = fractional_dichromatic(g, opts.enumeration_limit, Budget(opts.cell_seconds));
        rep.upper_bounds.push_back(
            {"chidirf", RootValue::of(lp.value), "r_D(G) <= chi_dir,f(G) = " + lp.value.str()});
    } catch (const LimitExceeded& e) {
        rep.justification = std::string("fractional dichromatic number skipped: ") + e.what() + "; ";
    }

    for (int t = 1; t <= opts.t_max; ++t) {
        PerTRow row;
        row.t = t;
        std::optional<Digraph> p;
        try {
            p = and_power(g, t, opts.vertex_limit);
            row.vertices = static_cast<std::uint64_t>(p->n());
        } catch (const LimitExceeded& e) {
            row.vertices = 0;
            row.chi = row.chidir = skipped(e.what());
            row.chidirf_note = e.what();
            rep.per_t.push_back(std::move(row));
            continue;
        }
        try {
            row.chi = cell_of(chromatic_number(*p, Budget(opts.cell_seconds), opts.solver));
        } catch (const LimitExceeded& e) {
            row.chi = skipped(e.what());
        }
        SolverOptions so = opts.solver;
        so.enumeration_limit = opts.enumeration_limit;
        try {
            row.chidir = cell_of(dichromatic_number(*p, Budget(opts.cell_seconds), so));
        } catch (const LimitExceeded& e) {
            row.chidir = skipped(e.what());
        }
        try {
            row.chidirf = fractional_dichromatic(*p, opts.enumeration_limit, Budget(opts.cell_seconds)).value;
        } catch (const LimitExceeded& e) {
            row.chidirf_note = e.what();
        }
        if (row.chi.computed) {
            rep.upper_bounds.push_back({power_label("chi", t), RootValue::of(Rational(row.chi.upper), t),
                                        "r_D(G) <= chi(G^t)^(1/t) by submultiplicativity"});
        }
        if (row.chidir.computed) {
            rep.upper_bounds.push_back({power_label("chidir", t), RootValue::of(Rational(row.chidir.upper), t),
                                        "r_D(G) <= chi_dir(G^t)^(1/t)"});
        }
        if (row.chidirf && t > 1) {
            rep.upper_bounds.push_back({power_label("chidirf", t), RootValue::of(*row.chidirf, t),
                                        "r_D(G) <= chi_dir,f(G^t)^(1/t)"});
        }
        rep.per_t.push_back(std::move(row));
    }

    if (rep.upper_bounds.empty()) {
        // chi_dir(G) <= n always holds: singletons are acyclic.
        rep.upper_bounds.push_back({"trivial", RootValue::of(n), "r_D(G) <= chi_dir(G) <= n"});
    }

    const Bound& lo = rep.best_lower();
    const Bound& hi = rep.best_upper();
    if (hi.value < lo.value) {
        throw InternalError("bound inversion: " + lo.name + " = " + lo.value.str() + " exceeds " + hi.name + " = " +
                            hi.value.str());
    }
    if (lo.value == hi.value) {
        rep.pinned = lo.value;
        rep.justification += "pinned: lower " + lo.name + " [" + lo.justification + "] meets upper " + hi.name + " [" +
                             hi.justification + "]";
    } else {
        rep.justification += "open: best lower " + lo.name + " = " + lo.value.str() + ", best upper " + hi.name +
                             " = " + hi.value.str();
    }
    if (g.n() <= kDefaultTransitivityLimit) {
        rep.vertex_transitive = is_vertex_transitive(g);
    }
    return rep;
}

CompoundReport compound_report(const std::vector<Digraph>& family, const ReportOptions& opts) {
    if (family.empty()) {
        throw InvalidInput("compound report needs at least one graph");
    }
    CompoundReport rep;
    for (int t = 1; t <= opts.t_max; ++t) {
        CompoundRow row;
        row.t = t;
        const Digraph u = compound_union_power(family, t, opts.vertex_limit);
        const ColoringResult uc = chromatic_number(u, Budget(opts.cell_seconds), opts.solver);
        row.union_chi = cell_of(uc);
        row.union_coloring = uc.certificate;
        for (const auto& g : family) {
            const Cell mc = cell_of(chromatic_number(and_power(g, t, opts.vertex_limit), Budget(opts.cell_seconds),
                                                     opts.solver));
            if (row.union_chi.upper < mc.lower) {
                row.sane = false;
            }
            row.member_chi.push_back(mc);
        }
        rep.rows.push_back(std::move(row));
    }
    ReportOptions member_opts = opts;
    member_opts.t_max = std::min(opts.t_max, 1);
    bool first = true;
    for (const auto& g : family) {
        const BoundReport br = dilworth_bounds(g, member_opts);
        const double lo = br.best_lower().value.log2();
        const double hi = br.best_upper().value.log2();
        rep.member_rates.emplace_back(lo, hi);
        rep.min_member_upper = first ? hi : std::min(rep.min_member_upper, hi);
        rep.max_member_lower = first ? lo : std::max(rep.max_member_lower, lo);
        first = false;
    }
    return rep;
}

WithinTypeReport within_type_report(const Digraph& g, int t, const TypeVector& tv, const Budget& budget) {
    const TypeClassGraph tc = type_class_subgraph(g, t, tv);
    WithinTypeReport rep;
    rep.size = tc.vertices.size();
    const SubsetResult a = independence_number(tc.graph, budget);
    rep.alpha = a.value;
    rep.alpha_optimal = a.optimal;
    rep.chi_f = fractional_chromatic(tc.graph).value;
    rep.identity_holds =
        a.optimal && rep.chi_f * Rational(a.value) == Rational(static_cast<long>(rep.size));
    if (tc.graph.n() <= kDefaultTransitivityLimit) {
        rep.vertex_transitive_checked = true;
        rep.vertex_transitive = is_vertex_transitive(tc.graph);
    }
    rep.entropy = entropy(Distribution::of_type(tv));
    return rep;
}

}  // namespace dilworth
