#include "dilworth/exact_params.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "dilworth/errors.hpp"
#include "dilworth/fractional.hpp"
#include "dilworth/products.hpp"

namespace dilworth {

namespace {

struct Aborted {};

void check_size(const Digraph& g, const SolverOptions& opts) {
    if (g.n() > opts.vertex_limit) {
        throw LimitExceeded("exact solver vertex cap", static_cast<std::uint64_t>(g.n()),
                            static_cast<std::uint64_t>(opts.vertex_limit));
    }
}

std::string node_note(std::uint64_t nodes) { return std::to_string(nodes) + " search nodes"; }

Budget slice(const Budget& budget, double fraction) {
    const double rem = std::max(0.0, budget.remaining_seconds());
    return Budget(std::max(std::min(rem, 0.05), rem * fraction));
}

// Greedy sequential coloring of `p` under `rows`; vertices come out in
// nondecreasing color order. Returns the number of colors used.
int greedy_color_sort(const std::vector<VertexSet>& rows, const VertexSet& p, std::vector<int>& verts,
                      std::vector<int>& colors) {
    verts.clear();
    colors.clear();
    VertexSet q = p;
    int color = 0;
    while (q.any()) {
        ++color;
        VertexSet r = q;
        while (r.any()) {
            const int v = r.first();
            r.reset(v);
            r -= rows[static_cast<std::size_t>(v)];
            q.reset(v);
            verts.push_back(v);
            colors.push_back(color);
        }
    }
    return color;
}

class CliqueSearch {
public:
    CliqueSearch(const std::vector<VertexSet>& rows, const Budget& budget) : budget_(budget) {
        const int n = static_cast<int>(rows.size());
        perm_.resize(static_cast<std::size_t>(n));
        std::iota(perm_.begin(), perm_.end(), 0);
        std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) {
            return rows[static_cast<std::size_t>(a)].count() > rows[static_cast<std::size_t>(b)].count();
        });
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;
        }
        rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
        for (int i = 0; i < n; ++i) {
            rows[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])].for_each(
                [&](int w) { rows_[static_cast<std::size_t>(i)].set(inv[static_cast<std::size_t>(w)]); });
        }
    }

    SubsetResult run() {
        const int n = static_cast<int>(rows_.size());
        SubsetResult res;
        res.certificate.kind = SubsetKind::symmetric_clique;
        std::vector<int> verts;
        std::vector<int> colors;
        const int root_bound = greedy_color_sort(rows_, VertexSet::full(n), verts, colors);
        bool aborted = false;
        try {
            expand(VertexSet::full(n));
        } catch (const Aborted&) {
            aborted = true;
        }
        for (int v : best_) {
            res.certificate.vertices.push_back(perm_[static_cast<std::size_t>(v)]);
        }
        std::sort(res.certificate.vertices.begin(), res.certificate.vertices.end());
        res.value = static_cast<int>(best_.size());
        res.lower = res.value;
        res.upper = aborted ? std::max(res.value, root_bound) : res.value;
        res.optimal = !aborted;
        res.nodes = nodes_;
        res.proof = aborted ? "budget exhausted; upper bound from greedy coloring, " + node_note(nodes_)
                            : "branch and bound with coloring bound, " + node_note(nodes_);
        return res;
    }

private:
    void expand(VertexSet p) {
        ++nodes_;
        if (budget_.expired()) {
            throw Aborted{};
        }
        std::vector<int> verts;
        std::vector<int> colors;
        greedy_color_sort(rows_, p, verts, colors);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(colors[i]) <= best_.size()) {
                return;
            }
            const int v = verts[i];
            current_.push_back(v);
            VertexSet np = p & rows_[static_cast<std::size_t>(v)];
            if (np.empty()) {
                if (current_.size() > best_.size()) {
                    best_ = current_;
                }
            } else {
                expand(std::move(np));
            }
            current_.pop_back();
            p.reset(v);
        }
    }

    const Budget& budget_;
    std::vector<int> perm_;
    std::vector<VertexSet> rows_;
    std::vector<int> current_;
    std::vector<int> best_;
    std::uint64_t nodes_ = 0;
};

std::vector<VertexSet> independence_rows(const Digraph& g) {
    std::vector<VertexSet> rows = g.undirected_rows();
    for (int v = 0; v < g.n(); ++v) {
        auto& row = rows[static_cast<std::size_t>(v)];
        row = row.complement();
        row.reset(v);
    }
    return rows;
}

// ---- transitive cliques ------------------------------------------------

class TransitiveSearch {
public:
    TransitiveSearch(const Digraph& g, const Budget& budget) : g_(g), budget_(budget), urows_(g.undirected_rows()) {}

    SubsetResult run() {
        SubsetResult res;
        res.certificate.kind = SubsetKind::transitive_clique;
        bool aborted = false;
        try {
            extend(VertexSet::full(g_.n()));
        } catch (const Aborted&) {
            aborted = true;
        }
        res.value = static_cast<int>(best_.size());
        res.certificate.order = best_;
        res.certificate.vertices = best_;
        std::sort(res.certificate.vertices.begin(), res.certificate.vertices.end());
        res.lower = res.value;
        if (aborted) {
            std::vector<int> verts;
            std::vector<int> colors;
            res.upper = std::max(res.value, greedy_color_sort(urows_, VertexSet::full(g_.n()), verts, colors));
        } else {
            res.upper = res.value;
        }
        res.optimal = !aborted;
        res.nodes = nodes_;
        res.proof = (aborted ? "budget exhausted, " : "exhaustive extension search, ") + node_note(nodes_);
        return res;
    }

private:
    // Candidates are the common out-neighbours of the sequence so far; the
    // next vertex is the source of whatever remains.
    void extend(const VertexSet& cand) {
        ++nodes_;
        if (budget_.expired()) {
            throw Aborted{};
        }
        if (seq_.size() > best_.size()) {
            best_ = seq_;
        }
        if (cand.empty() || seq_.size() + static_cast<std::size_t>(cand.count()) <= best_.size()) {
            return;
        }
        std::vector<int> verts;
        std::vector<int> colors;
        const int bound = greedy_color_sort(urows_, cand, verts, colors);
        if (seq_.size() + static_cast<std::size_t>(bound) <= best_.size()) {
            return;
        }
        cand.for_each([&](int v) {
            seq_.push_back(v);
            VertexSet next = cand & g_.out(v);
            next.reset(v);
            extend(next);
            seq_.pop_back();
        });
    }

    const Digraph& g_;
    const Budget& budget_;
    std::vector<VertexSet> urows_;
    std::vector<int> seq_;
    std::vector<int> best_;
    std::uint64_t nodes_ = 0;
};

// ---- acyclic sets ------------------------------------------------------

// Number of cycles found greedily in `within` plus `fixed`, pairwise disjoint
// on `within`. `fixed` is acyclic, so each cycle costs a distinct vertex of
// `within`.
int greedy_cycle_packing(const Digraph& g, VertexSet within, const VertexSet& fixed) {
    int found = 0;
    VertexSet todo = within;
    while (todo.any()) {
        const int v = todo.first();
        todo.reset(v);
        if (!within.test(v)) {
            continue;
        }
        // BFS from v's out-neighbours back to v, remembering parents.
        std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
        VertexSet seen(g.n());
        const VertexSet usable = within | fixed;
        VertexSet frontier = g.out(v) & usable;
        frontier.for_each([&](int u) { parent[static_cast<std::size_t>(u)] = v; });
        seen = frontier;
        bool closed = frontier.test(v);
        while (!closed && frontier.any()) {
            VertexSet next(g.n());
            frontier.for_each([&](int u) {
                VertexSet step = g.out(u) & usable;
                step -= seen;
                step.for_each([&](int w) {
                    if (parent[static_cast<std::size_t>(w)] < 0) {
                        parent[static_cast<std::size_t>(w)] = u;
                    }
                });
                next |= step;
            });
            seen |= next;
            closed = next.test(v);
            frontier = std::move(next);
        }
        if (!closed) {
            continue;
        }
        int cur = parent[static_cast<std::size_t>(v)];
        within.reset(v);
        while (cur != v) {
            within.reset(cur);
            cur = parent[static_cast<std::size_t>(cur)];
        }
        ++found;
    }
    return found;
}

int greedy_clique_partition(const std::vector<VertexSet>& rows, const VertexSet& within) {
    int parts = 0;
    VertexSet rest = within;
    while (rest.any()) {
        VertexSet cand = rest;
        while (cand.any()) {
            const int v = cand.first();
            cand.reset(v);
            rest.reset(v);
            cand &= rows[static_cast<std::size_t>(v)];
        }
        ++parts;
    }
    return parts;
}

class AcyclicSearch {
public:
    AcyclicSearch(const Digraph& g, const Budget& budget)
        : g_(g), budget_(budget), brows_(g.bidirected_rows()), current_(g.n()), best_(g.n()) {}

    SubsetResult run() {
        const int n = g_.n();
        // Greedy seed so the bound bites from the start.
        for (int v = 0; v < n; ++v) {
            if (stays_acyclic(g_, best_, v)) {
                best_.set(v);
            }
        }
        const VertexSet all = VertexSet::full(n);
        const int root_bound = bound(all);
        bool aborted = false;
        try {
            rec(all);
        } catch (const Aborted&) {
            aborted = true;
        }
        SubsetResult res;
        res.certificate.kind = SubsetKind::acyclic;
        res.certificate.vertices = best_.members();
        auto order = topological_order(g_, best_);
        if (!order) {
            throw InternalError("acyclicity search produced a cyclic set");
        }
        res.certificate.order = std::move(*order);
        res.value = best_.count();
        res.lower = res.value;
        res.upper = aborted ? std::max(res.value, root_bound) : res.value;
        res.optimal = !aborted;
        res.nodes = nodes_;
        res.proof = aborted ? "budget exhausted; upper bound from cycle packing and clique cover, " + node_note(nodes_)
                            : "branch and bound with cycle packing and clique cover bounds, " + node_note(nodes_);
        return res;
    }

private:
    int bound(const VertexSet& cand) const {
        const int size = cand.count();
        return std::min(size - greedy_cycle_packing(g_, cand, current_), greedy_clique_partition(brows_, cand));
    }

    void rec(const VertexSet& cand) {
        ++nodes_;
        if (budget_.expired()) {
            throw Aborted{};
        }
        const int have = current_.count();
        if (cand.empty()) {
            if (have > best_.count()) {
                best_ = current_;
            }
            return;
        }
        if (have + cand.count() <= best_.count() || have + bound(cand) <= best_.count()) {
            return;
        }
        // Branch on the candidate most entangled with the others.
        int v = -1;
        int most = -1;
        cand.for_each([&](int u) {
            const int d = g_.out(u).intersection_count(cand) + g_.in(u).intersection_count(cand);
            if (d > most) {
                most = d;
                v = u;
            }
        });
        if (most == 0) {
            // Candidates are pairwise non-adjacent, but two of them may
            // still close a cycle through the current set.
            VertexSet all = current_ | cand;
            if (is_acyclic_set(g_, all)) {
                if (all.count() > best_.count()) {
                    best_ = std::move(all);
                }
                return;
            }
        }
        current_.set(v);
        VertexSet next(g_.n());
        cand.for_each([&](int u) {
            if (u != v && stays_acyclic(g_, current_, u)) {
                next.set(u);
            }
        });
        rec(next);
        current_.reset(v);
        VertexSet without = cand;
        without.reset(v);
        rec(without);
    }

    const Digraph& g_;
    const Budget& budget_;
    std::vector<VertexSet> brows_;
    VertexSet current_;
    VertexSet best_;
    std::uint64_t nodes_ = 0;
};

// ---- proper coloring ---------------------------------------------------

Coloring dsatur_greedy(const std::vector<VertexSet>& rows) {
    const int n = static_cast<int>(rows.size());
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> seen(static_cast<std::size_t>(n), VertexSet(n + 1));
    for (int step = 0; step < n; ++step) {
        int v = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (c.colors[static_cast<std::size_t>(u)] >= 0) {
                continue;
            }
            const int sat = seen[static_cast<std::size_t>(u)].count();
            const int deg = rows[static_cast<std::size_t>(u)].count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                v = u;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int col = 0;
        while (seen[static_cast<std::size_t>(v)].test(col)) {
            ++col;
        }
        c.colors[static_cast<std::size_t>(v)] = col;
        c.k = std::max(c.k, col + 1);
        rows[static_cast<std::size_t>(v)].for_each([&](int w) { seen[static_cast<std::size_t>(w)].set(col); });
    }
    return c;
}

class DsaturSearch {
public:
    DsaturSearch(const std::vector<VertexSet>& rows, const Budget& budget, Coloring seed, int lower)
        : rows_(rows), budget_(budget), n_(static_cast<int>(rows.size())), best_(std::move(seed)), lower_(lower) {
        colors_.assign(static_cast<std::size_t>(n_), -1);
        count_.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_ + 1), 0));
        sat_.assign(static_cast<std::size_t>(n_), 0);
    }

    void precolor(const std::vector<int>& clique) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            assign(clique[i], static_cast<int>(i));
        }
        colored_ = static_cast<int>(clique.size());
        used_ = static_cast<int>(clique.size());
    }

    bool run() {
        try {
            rec(colored_, used_);
        } catch (const Aborted&) {
            return false;
        }
        return true;
    }

    const Coloring& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void assign(int v, int c) {
        colors_[static_cast<std::size_t>(v)] = c;
        rows_[static_cast<std::size_t>(v)].for_each([&](int w) {
            if (count_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)]++ == 0) {
                ++sat_[static_cast<std::size_t>(w)];
            }
        });
    }

    void unassign(int v) {
        const int c = colors_[static_cast<std::size_t>(v)];
        colors_[static_cast<std::size_t>(v)] = -1;
        rows_[static_cast<std::size_t>(v)].for_each([&](int w) {
            if (--count_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 0) {
                --sat_[static_cast<std::size_t>(w)];
            }
        });
    }

    void rec(int colored, int used) {
        ++nodes_;
        if (budget_.expired()) {
            throw Aborted{};
        }
        if (best_.k <= lower_ || used >= best_.k) {
            return;
        }
        if (colored == n_) {
            best_.colors = colors_;
            best_.k = used;
            return;
        }
        int v = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int u = 0; u < n_; ++u) {
            if (colors_[static_cast<std::size_t>(u)] >= 0) {
                continue;
            }
            const int sat = sat_[static_cast<std::size_t>(u)];
            if (sat > best_sat) {
                v = u;
                best_sat = sat;
                best_deg = -1;
            }
            if (sat == best_sat) {
                int deg = 0;
                rows_[static_cast<std::size_t>(u)].for_each([&](int w) {
                    if (colors_[static_cast<std::size_t>(w)] < 0) {
                        ++deg;
                    }
                });
                if (deg > best_deg) {
                    v = u;
                    best_deg = deg;
                }
            }
        }
        const auto& cnt = count_[static_cast<std::size_t>(v)];
        for (int c = 0; c <= used && c < best_.k - 1; ++c) {
            if (cnt[static_cast<std::size_t>(c)] != 0) {
                continue;
            }
            assign(v, c);
            rec(colored + 1, std::max(used, c + 1));
            unassign(v);
            if (best_.k <= lower_) {
                return;
            }
        }
    }

    const std::vector<VertexSet>& rows_;
    const Budget& budget_;
    int n_;
    Coloring best_;
    int lower_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> count_;
    std::vector<int> sat_;
    int colored_ = 0;
    int used_ = 0;
    std::uint64_t nodes_ = 0;
};

// ---- acyclic covers ----------------------------------------------------

AcyclicCover greedy_dicoloring(const Digraph& g) {
    std::vector<VertexSet> classes;
    for (int v = 0; v < g.n(); ++v) {
        bool placed = false;
        for (auto& cls : classes) {
            if (stays_acyclic(g, cls, v)) {
                cls.set(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.emplace_back(g.n());
            classes.back().set(v);
        }
    }
    std::vector<std::vector<int>> members;
    for (const auto& cls : classes) {
        members.push_back(cls.members());
    }
    return AcyclicCover::from_classes(g, members);
}

// Exact k-cover feasibility over a fixed set system.
class SetCoverSearch {
public:
    SetCoverSearch(const SetSystem& sys, const Budget& budget) : sys_(sys), budget_(budget) {
        containing_.resize(static_cast<std::size_t>(sys.ground()));
        for (std::size_t i = 0; i < sys.size(); ++i) {
            sys.sets()[i].for_each([&](int v) { containing_[static_cast<std::size_t>(v)].push_back(i); });
        }
        memo_ok_ = sys.ground() <= 64;
    }

    // Throws Aborted when the budget runs out.
    std::optional<std::vector<std::size_t>> find(int k) {
        chosen_.clear();
        if (search(VertexSet::full(sys_.ground()), k)) {
            return chosen_;
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool search(const VertexSet& uncovered, int r) {
        ++nodes_;
        if (budget_.expired()) {
            throw Aborted{};
        }
        if (uncovered.empty()) {
            return true;
        }
        if (r == 0) {
            return false;
        }
        std::uint64_t key = 0;
        if (memo_ok_) {
            key = uncovered.words().empty() ? 0 : uncovered.words()[0];
            auto it = failed_.find(key);
            if (it != failed_.end() && it->second >= r) {
                return false;
            }
        }
        const int need = uncovered.count();
        int maxcover = 0;
        for (const auto& s : sys_.sets()) {
            maxcover = std::max(maxcover, s.intersection_count(uncovered));
        }
        if (static_cast<long>(r) * maxcover < need) {
            remember(key, r);
            return false;
        }
        int pivot = -1;
        std::size_t fewest = 0;
        uncovered.for_each([&](int u) {
            const auto& lst = containing_[static_cast<std::size_t>(u)];
            if (pivot < 0 || lst.size() < fewest) {
                pivot = u;
                fewest = lst.size();
            }
        });
        std::vector<std::pair<int, std::size_t>> options;
        const int floor_gain = need - (r - 1) * maxcover;
        for (std::size_t i : containing_[static_cast<std::size_t>(pivot)]) {
            const int gain = sys_.sets()[i].intersection_count(uncovered);
            if (gain >= floor_gain) {
                options.emplace_back(-gain, i);
            }
        }
        std::sort(options.begin(), options.end());
        for (const auto& [neg_gain, i] : options) {
            chosen_.push_back(i);
            if (search(uncovered - sys_.sets()[i], r - 1)) {
                return true;
            }
            chosen_.pop_back();
        }
        remember(key, r);
        return false;
    }

    void remember(std::uint64_t key, int r) {
        if (memo_ok_) {
            int& slot = failed_[key];
            slot = std::max(slot, r);
        }
    }

    const SetSystem& sys_;
    const Budget& budget_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::size_t> chosen_;
    bool memo_ok_;
    std::unordered_map<std::uint64_t, int> failed_;
    std::uint64_t nodes_ = 0;
};

AcyclicCover cover_from_sets(const Digraph& g, const SetSystem& sys, const std::vector<std::size_t>& chosen) {
    VertexSet taken(g.n());
    std::vector<std::vector<int>> classes;
    for (std::size_t i : chosen) {
        VertexSet part = sys.sets()[i] - taken;
        taken |= part;
        if (part.any()) {
            classes.push_back(part.members());
        }
    }
    return AcyclicCover::from_classes(g, classes);
}

class DirectDicoloring {
public:
    DirectDicoloring(const Digraph& g, const Budget& budget, AcyclicCover seed, int lower)
        : g_(g), budget_(budget), best_(std::move(seed)), lower_(lower) {
        order_.resize(static_cast<std::size_t>(g.n()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g.out_degree(a) + g.in_degree(a) > g.out_degree(b) + g.in_degree(b);
        });
    }

    bool run() {
        try {
            rec(0);
        } catch (const Aborted&) {
            return false;
        }
        return true;
    }

    const AcyclicCover& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void rec(std::size_t i) {
        ++nodes_;
        if (budget_.expired()) {
            throw Aborted{};
        }
        if (best_.size() <= lower_ || static_cast<int>(classes_.size()) >= best_.size()) {
            return;
        }
        if (i == order_.size()) {
            std::vector<std::vector<int>> members;
            for (const auto& cls : classes_) {
                members.push_back(cls.members());
            }
            best_ = AcyclicCover::from_classes(g_, members);
            return;
        }
        const int v = order_[i];
        // Deeper levels may grow classes_, so index rather than hold references.
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            if (stays_acyclic(g_, classes_[c], v)) {
                classes_[c].set(v);
                rec(i + 1);
                classes_[c].reset(v);
                if (best_.size() <= lower_) {
                    return;
                }
            }
        }
        if (static_cast<int>(classes_.size()) + 1 < best_.size()) {
            classes_.emplace_back(g_.n());
            classes_.back().set(v);
            rec(i + 1);
            classes_.pop_back();
        }
    }

    const Digraph& g_;
    const Budget& budget_;
    AcyclicCover best_;
    int lower_;
    std::vector<int> order_;
    std::vector<VertexSet> classes_;
    std::uint64_t nodes_ = 0;
};

int ceil_div(int a, int b) { return b == 0 ? 0 : (a + b - 1) / b; }

}  // namespace

SubsetResult max_clique(const std::vector<VertexSet>& rows, const Budget& budget) {
    return CliqueSearch(rows, budget).run();
}

SubsetResult independence_number(const Digraph& g, const Budget& budget, const SolverOptions& opts) {
    check_size(g, opts);
    SubsetResult res = max_clique(independence_rows(g), budget);
    res.certificate.kind = SubsetKind::independent;
    return res;
}

SubsetResult symmetric_clique_number(const Digraph& g, const Budget& budget, const SolverOptions& opts) {
    check_size(g, opts);
    return max_clique(g.bidirected_rows(), budget);
}

SubsetResult transitive_clique_number(const Digraph& g, const Budget& budget, const SolverOptions& opts) {
    check_size(g, opts);
    return TransitiveSearch(g, budget).run();
}

SubsetResult acyclicity_number(const Digraph& g, const Budget& budget, const SolverOptions& opts) {
    check_size(g, opts);
    return AcyclicSearch(g, budget).run();
}

ColoringResult chromatic_number(const Digraph& g, const Budget& budget, const SolverOptions& opts) {
    check_size(g, opts);
    const auto rows = g.undirected_rows();
    ColoringResult res;
    if (g.n() == 0) {
        res.optimal = true;
        res.proof = "empty graph";
        return res;
    }
    const Budget clique_budget = slice(budget, 0.25);
    const SubsetResult clique = max_clique(rows, clique_budget);
    Coloring seed = dsatur_greedy(rows);
    DsaturSearch search(rows, budget, seed, clique.value);
    search.precolor(clique.certificate.vertices);
    const bool finished = search.run();
    res.certificate = search.best();
    res.value = res.certificate.k;
    res.upper = res.value;
    res.lower = finished ? res.value : clique.value;
    res.optimal = finished;
    res.nodes = search.nodes() + clique.nodes;
    if (!finished) {
        res.proof = "budget exhausted; lower bound from a clique of size " + std::to_string(clique.value);
    } else if (res.value == clique.value) {
        res.proof = "coloring meets a clique of size " + std::to_string(clique.value);
    } else {
        res.proof = "DSATUR branch and bound, " + node_note(res.nodes);
    }
    return res;
}

CoverResult dichromatic_number_direct(const Digraph& g, const Budget& budget) {
    CoverResult res;
    if (g.n() == 0) {
        res.optimal = true;
        res.proof = "empty graph";
        return res;
    }
    const Budget clique_budget = slice(budget, 0.25);
    const int lower = max_clique(g.bidirected_rows(), clique_budget).value;
    DirectDicoloring search(g, budget, greedy_dicoloring(g), lower);
    const bool finished = search.run();
    res.certificate = search.best();
    res.value = res.certificate.size();
    res.upper = res.value;
    res.lower = finished ? res.value : lower;
    res.optimal = finished;
    res.nodes = search.nodes();
    res.proof = finished ? "class-assignment branch and bound, " + node_note(res.nodes)
                         : "budget exhausted; lower bound from a bidirected clique";
    return res;
}

CoverResult dichromatic_number(const Digraph& g, const Budget& budget, const SolverOptions& opts) {
    check_size(g, opts);
    CoverResult res;
    if (g.n() == 0) {
        res.optimal = true;
        res.proof = "empty graph";
        return res;
    }
    AcyclicCover best = greedy_dicoloring(g);
    int upper = best.size();
    const SubsetResult a = acyclicity_number(g, slice(budget, 0.25), opts);
    int lower = std::max(1, ceil_div(g.n(), a.upper));
    std::string why = "ceil(n/a) with a <= " + std::to_string(a.upper);

    std::optional<SetSystem> sys;
    try {
        sys.emplace(maximal_acyclic_sets(g, opts.enumeration_limit, slice(budget, 0.4)));
    } catch (const LimitExceeded& e) {
        CoverResult direct = dichromatic_number_direct(g, budget);
        direct.lower = std::max(direct.lower, lower);
        if (direct.lower == direct.upper) {
            direct.optimal = true;
        }
        direct.proof = std::string("acyclic set enumeration stopped: ") + e.what() + "; " + direct.proof;
        return direct;
    }
    if (sys->size() <= opts.lp_set_limit) {
        try {
            const LPSolution lp = fractional_cover_number(*sys, slice(budget, 0.3));
            const int lp_lower = static_cast<int>(lp.value.ceil());
            if (lp_lower > lower) {
                lower = lp_lower;
                why = "fractional cover number " + lp.value.str();
            }
        } catch (const BudgetExhausted&) {
        }
    }

    SetCoverSearch search(*sys, budget);
    bool aborted = false;
    try {
        while (lower < upper) {
            auto chosen = search.find(lower);
            if (chosen) {
                best = cover_from_sets(g, *sys, *chosen);
                upper = best.size();
                break;
            }
            why = "no cover by " + std::to_string(lower) + " maximal acyclic sets";
            ++lower;
        }
    } catch (const Aborted&) {
        aborted = true;
    }
    res.certificate = best;
    res.value = best.size();
    res.upper = upper;
    res.lower = lower;
    res.optimal = !aborted && lower == upper;
    res.nodes = search.nodes() + a.nodes;
    res.proof = (aborted ? "budget exhausted; lower bound: " : "lower bound: ") + why + ", " + node_note(res.nodes);
    return res;
}

Coloring constructive_power_coloring(const Digraph& g, const AcyclicCover& cover, int t) {
    if (const Verdict v = verify_certificate(g, cover); !v) {
        throw UnverifiedCertificate("acyclic cover does not verify: " + v.violation);
    }
    if (t < 0) {
        throw InvalidInput("power exponent must be nonnegative");
    }
    const int n = g.n();
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cover.classes.size(); ++i) {
        for (int v : cover.classes[i]) {
            if (class_of[static_cast<std::size_t>(v)] < 0) {
                class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
    }
    const PowerIndex index(n, t);
    if (index.size() > kDefaultVertexLimit) {
        throw LimitExceeded("power coloring vertex count", index.size(), kDefaultVertexLimit);
    }
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> ids;
    Coloring c;
    c.colors.resize(static_cast<std::size_t>(index.size()));
    Sequence seq;
    std::vector<int> classes(static_cast<std::size_t>(t));
    for (std::uint64_t x = 0; x < index.size(); ++x) {
        index.decode_into(x, seq);
        for (int i = 0; i < t; ++i) {
            classes[static_cast<std::size_t>(i)] = class_of[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
        }
        auto key = std::make_pair(classes, TypeVector::of(seq, n).counts);
        auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
        c.colors[static_cast<std::size_t>(x)] = it->second;
    }
    c.k = static_cast<int>(ids.size());
    return c;
}

}  // namespace dilworth
