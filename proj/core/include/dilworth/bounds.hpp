#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dilworth/budget.hpp"
#include "dilworth/digraph.hpp"
#include "dilworth/exact_params.hpp"
#include "dilworth/products.hpp"
#include "dilworth/rational.hpp"

namespace dilworth {

/// radicand^(1/root) with a positive rational radicand. Bounds on the
/// non-logarithmic rate are all of this form, so they compare exactly.
struct RootValue {
    Rational radicand{1};
    int root = 1;

    static RootValue of(const Rational& radicand, int root = 1);

    double log2() const { return radicand.log2() / root; }
    double value() const;
    /// "p/q" or "p/q^(1/r)".
    std::string str() const;

    friend bool operator==(const RootValue& a, const RootValue& b);
    friend std::strong_ordering operator<=>(const RootValue& a, const RootValue& b);
};

struct Bound {
    std::string name;
    RootValue value;
    /// The inequality chain that makes this a bound on the rate.
    std::string justification;
    /// Relies on a published constant rather than a computation.
    bool cited = false;
};

struct Bracket {
    RootValue lower;
    RootValue upper;
    bool tight = false;
    /// False when the lower end came from a search cut short by the budget.
    bool lower_optimal = true;
};

/// Probability vector with exact entries summing to 1.
class Distribution {
public:
    explicit Distribution(std::vector<Rational> probs);
    static Distribution uniform(int n);
    static Distribution of_type(const TypeVector& tv);

    const std::vector<Rational>& probs() const noexcept { return probs_; }

private:
    std::vector<Rational> probs_;
};

/// Base-2 entropy; zero entries contribute nothing.
double entropy(const Distribution& p);

struct AlonBound {
    /// min(max outdegree, max indegree) + 1.
    int argument = 1;
    double log2() const;
};

/// Degree bound on Sperner capacity: Sigma(G) <= log2(min(D+, D-) + 1).
AlonBound alon_sperner_upper(const Digraph& g);

/// [log2 omega_tr(G), Alon] on Sigma(G), in non-logarithmic form.
Bracket sperner_capacity_bounds(const Digraph& g, const Budget& budget = Budget());

/// [log2 a(G), Alon on the complement] on Gamma(G) = Sigma(complement).
Bracket gamma_bounds(const Digraph& g, const Budget& budget = Budget());

/// Published Sperner capacities (non-logarithmic) for oriented 5-cycles:
/// sqrt(5) for the alternating orientation A_5, 2 for every other one.
/// Empty for graphs not covered by the table.
std::optional<RootValue> cited_sperner_capacity(const Digraph& g);

struct Cell {
    bool computed = false;
    bool optimal = false;
    int lower = 0;
    int upper = 0;
    std::string note;

    std::string status() const;
};

struct PerTRow {
    int t = 0;
    std::uint64_t vertices = 0;
    Cell chi;
    Cell chidir;
    std::optional<Rational> chidirf;
    std::string chidirf_note;
};

struct ReportOptions {
    int t_max = 3;
    double cell_seconds = 60;
    std::uint64_t vertex_limit = kDefaultVertexLimit;
    std::uint64_t enumeration_limit = 200'000;
    SolverOptions solver;
};

struct BoundReport {
    std::string graph_id;
    std::string graph_hash;
    int n = 0;
    std::vector<Bound> lower_bounds;
    std::vector<Bound> upper_bounds;
    std::vector<PerTRow> per_t;
    std::optional<RootValue> pinned;
    std::string justification;
    /// Set when the automorphism test ran (small graphs only).
    std::optional<bool> vertex_transitive;

    const Bound& best_lower() const;
    const Bound& best_upper() const;
};

/// Collects lower and upper bounds on the Dilworth rate and pins it when
/// they meet. Throws InternalError if a lower bound exceeds an upper bound.
BoundReport dilworth_bounds(const Digraph& g, const ReportOptions& opts = {}, const std::string& graph_id = "");

struct CompoundRow {
    int t = 0;
    Cell union_chi;
    Coloring union_coloring;
    std::vector<Cell> member_chi;
    /// union chi >= every member chi (compared on certified ends).
    bool sane = true;
};

struct CompoundReport {
    std::vector<CompoundRow> rows;
    /// Per member: best lower and best upper rate bound, log2.
    std::vector<std::pair<double, double>> member_rates;
    /// min over members of their upper rate bounds.
    double min_member_upper = 0;
    /// max over members of their lower rate bounds; the union can never
    /// fall below it since each member power is a subgraph.
    double max_member_lower = 0;
};

CompoundReport compound_report(const std::vector<Digraph>& family, const ReportOptions& opts = {});

struct WithinTypeReport {
    std::uint64_t size = 0;
    int alpha = 0;
    bool alpha_optimal = false;
    Rational chi_f;
    bool identity_holds = false;
    bool vertex_transitive_checked = false;
    bool vertex_transitive = false;
    double entropy = 0;
};

WithinTypeReport within_type_report(const Digraph& g, int t, const TypeVector& tv, const Budget& budget = Budget());

}  // namespace dilworth
