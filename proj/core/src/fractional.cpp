#include "dilworth/fractional.hpp"

#include <algorithm>

#include "dilworth/errors.hpp"

namespace dilworth {

SetSystem::SetSystem(int ground, std::vector<VertexSet> sets) : ground_(ground), sets_(std::move(sets)) {
    VertexSet covered(ground);
    for (const auto& s : sets_) {
        if (s.size() != ground) {
            throw InvalidInput("set system member has universe " + std::to_string(s.size()) + ", expected " +
                               std::to_string(ground));
        }
        covered |= s;
    }
    if (covered.count() != ground) {
        throw InvalidInput("element " + std::to_string(covered.complement().first()) +
                           " lies in no set; the covering LP would be infeasible");
    }
}

int SetSystem::max_set_size() const {
    int mu = 0;
    for (const auto& s : sets_) {
        mu = std::max(mu, s.count());
    }
    return mu;
}

namespace {

void sort_lex(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), VertexSet::lex_less); }

class AcyclicEnumerator {
public:
    AcyclicEnumerator(const Digraph& g, std::uint64_t limit, const Budget& budget)
        : g_(g), n_(g.n()), limit_(limit), budget_(budget), current_(g.n()), pool_(VertexSet::full(g.n())) {}

    std::vector<VertexSet> run() {
        rec(0);
        return std::move(found_);
    }

private:
    // pool_ = current_ plus all undecided vertices. Any final set is a
    // subset of the pool, so an excluded vertex on no cycle of pool + v can
    // never be blocked and the branch yields no maximal set.
    bool dominated() const {
        for (int v : excluded_) {
            if (stays_acyclic(g_, pool_, v)) {
                return true;
            }
        }
        return false;
    }

    void rec(int i) {
        if (budget_.expired()) {
            throw BudgetExhausted("maximal acyclic set enumeration");
        }
        if (i == n_) {
            for (int v : excluded_) {
                if (stays_acyclic(g_, current_, v)) {
                    return;
                }
            }
            if (found_.size() >= limit_) {
                throw LimitExceeded("maximal acyclic set enumeration overflow", found_.size() + 1, limit_);
            }
            found_.push_back(current_);
            return;
        }
        if (stays_acyclic(g_, current_, i)) {
            current_.set(i);
            rec(i + 1);
            current_.reset(i);
        }
        pool_.reset(i);
        excluded_.push_back(i);
        if (!dominated()) {
            rec(i + 1);
        }
        excluded_.pop_back();
        pool_.set(i);
    }

    const Digraph& g_;
    int n_;
    std::uint64_t limit_;
    const Budget& budget_;
    VertexSet current_;
    VertexSet pool_;
    std::vector<int> excluded_;
    std::vector<VertexSet> found_;
};

class BronKerbosch {
public:
    BronKerbosch(std::vector<VertexSet> rows, std::uint64_t limit, const Budget& budget)
        : rows_(std::move(rows)), limit_(limit), budget_(budget) {}

    std::vector<VertexSet> run(int n) {
        VertexSet r(n);
        rec(r, VertexSet::full(n), VertexSet(n));
        return std::move(found_);
    }

private:
    void rec(VertexSet& r, VertexSet p, VertexSet x) {
        if (budget_.expired()) {
            throw BudgetExhausted("maximal independent set enumeration");
        }
        if (p.empty()) {
            if (x.empty()) {
                if (found_.size() >= limit_) {
                    throw LimitExceeded("maximal independent set enumeration overflow", found_.size() + 1, limit_);
                }
                found_.push_back(r);
            }
            return;
        }
        int pivot = -1;
        int best = -1;
        (p | x).for_each([&](int u) {
            const int c = p.intersection_count(rows_[static_cast<std::size_t>(u)]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        const VertexSet candidates = p - rows_[static_cast<std::size_t>(pivot)];
        candidates.for_each([&](int v) {
            const auto& nv = rows_[static_cast<std::size_t>(v)];
            r.set(v);
            rec(r, p & nv, x & nv);
            r.reset(v);
            p.reset(v);
            x.set(v);
        });
    }

    std::vector<VertexSet> rows_;
    std::uint64_t limit_;
    const Budget& budget_;
    std::vector<VertexSet> found_;
};

}  // namespace

SetSystem maximal_acyclic_sets(const Digraph& g, std::uint64_t limit, const Budget& budget) {
    auto sets = AcyclicEnumerator(g, limit, budget).run();
    sort_lex(sets);
    return SetSystem(g.n(), std::move(sets));
}

SetSystem maximal_independent_sets(const Digraph& g, std::uint64_t limit, const Budget& budget) {
    // Independent sets of G are cliques of the complement of its symmetrization.
    std::vector<VertexSet> rows = g.undirected_rows();
    for (int v = 0; v < g.n(); ++v) {
        auto& row = rows[static_cast<std::size_t>(v)];
        row = row.complement();
        row.reset(v);
    }
    auto sets = BronKerbosch(std::move(rows), limit, budget).run(g.n());
    sort_lex(sets);
    return SetSystem(g.n(), std::move(sets));
}

namespace {

// Revised simplex on the covering side: min sum(x) s.t. for every element v,
// sum_{S ∋ v} x_S - s_v + r_v = 1. Columns are ordered sets, surplus s, then
// artificials r. Phase one drives the artificials out; the basis is n x n
// so each pivot is cheap even with thousands of sets. Prices are the
// packing duals y. Dantzig pricing, with Bland's rule during long runs of
// degenerate pivots so the method cannot cycle.
class CoveringSimplex {
public:
    static constexpr std::uint64_t kBlandAfter = 50;

    CoveringSimplex(const SetSystem& sys, const Budget& budget)
        : m_(sys.size()), n_(static_cast<std::size_t>(sys.ground())), budget_(budget) {
        members_.reserve(m_);
        for (const auto& set : sys.sets()) {
            std::vector<std::size_t> mem;
            set.for_each([&](int v) { mem.push_back(static_cast<std::size_t>(v)); });
            members_.push_back(std::move(mem));
        }
        binv_.assign(n_, std::vector<mpq_class>(n_, 0));
        xb_.assign(n_, 1);
        basis_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            binv_[i][i] = 1;
            basis_[i] = artificial(i);
        }
    }

    LPSolution solve() {
        run(true);
        for (std::size_t i = 0; i < n_; ++i) {
            if (basis_[i] >= artificial(0)) {
                if (sgn(xb_[i]) != 0) {
                    throw InternalError("covering LP phase one left a positive artificial");
                }
                evict_artificial(i);
            }
        }
        run(false);

        LPSolution sol;
        sol.weights.assign(m_, Rational(0));
        mpq_class total = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (basis_[i] < m_) {
                sol.weights[basis_[i]] = Rational(xb_[i]);
                total += xb_[i];
            }
        }
        const auto y = prices(false);
        sol.dual.reserve(n_);
        for (const auto& v : y) {
            sol.dual.emplace_back(v);
        }
        sol.value = Rational(total);
        sol.pivots = pivots_;
        return sol;
    }

private:
    std::size_t surplus(std::size_t v) const { return m_ + v; }
    std::size_t artificial(std::size_t v) const { return m_ + n_ + v; }

    mpq_class cost(std::size_t j, bool phase_one) const {
        if (phase_one) {
            return j >= artificial(0) ? 1 : 0;
        }
        return j < m_ ? 1 : 0;
    }

    std::vector<mpq_class> prices(bool phase_one) const {
        std::vector<mpq_class> y(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            const mpq_class cb = cost(basis_[i], phase_one);
            if (sgn(cb) == 0) {
                continue;
            }
            for (std::size_t k = 0; k < n_; ++k) {
                if (sgn(binv_[i][k]) != 0) {
                    y[k] += cb * binv_[i][k];
                }
            }
        }
        return y;
    }

    // Reduced costs scaled by the common denominator of the prices. Pricing
    // is then integer addition: int64 while the numbers are small, mpz after.
    template <typename Int>
    Int scaled_reduced_cost(std::size_t j, const std::vector<Int>& y, const Int& denom, bool phase_one) const {
        Int d = sgn(cost(j, phase_one)) != 0 ? denom : Int(0);
        if (j < m_) {
            for (std::size_t v : members_[j]) {
                d -= y[v];
            }
        } else if (j < artificial(0)) {
            d += y[j - m_];
        } else {
            d -= y[j - m_ - n_];
        }
        return d;
    }

    template <typename Int>
    std::size_t choose_entering(const std::vector<Int>& y, const Int& denom, std::size_t columns,
                                const std::vector<bool>& in_basis, bool phase_one, bool bland) const {
        std::size_t e = columns;
        Int best(0);
        for (std::size_t j = 0; j < columns; ++j) {
            if (in_basis[j]) {
                continue;
            }
            const Int d = scaled_reduced_cost(j, y, denom, phase_one);
            if (d >= 0) {
                continue;
            }
            if (bland) {
                return j;
            }
            if (e == columns || d < best) {
                e = j;
                best = d;
            }
        }
        return e;
    }

    std::size_t entering(const std::vector<mpq_class>& y, std::size_t columns, const std::vector<bool>& in_basis,
                         bool phase_one, bool bland) const {
        mpz_class denom = 1;
        for (const auto& v : y) {
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den_mpz_t());
        }
        std::vector<mpz_class> scaled(n_);
        // Sums of at most n terms stay far from overflow below 2^40.
        constexpr std::size_t kSmallBits = 40;
        bool small = mpz_sizeinbase(denom.get_mpz_t(), 2) < kSmallBits;
        for (std::size_t k = 0; k < n_; ++k) {
            scaled[k] = y[k].get_num() * (denom / y[k].get_den());
            small = small && mpz_sizeinbase(scaled[k].get_mpz_t(), 2) < kSmallBits;
        }
        if (!small) {
            return choose_entering(scaled, denom, columns, in_basis, phase_one, bland);
        }
        std::vector<std::int64_t> fast(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            fast[k] = scaled[k].get_si();
        }
        return choose_entering(fast, static_cast<std::int64_t>(denom.get_si()), columns, in_basis, phase_one, bland);
    }

    std::vector<mpq_class> column(std::size_t j) const {
        std::vector<mpq_class> d(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (j < m_) {
                for (std::size_t v : members_[j]) {
                    d[i] += binv_[i][v];
                }
            } else if (j < artificial(0)) {
                d[i] = -binv_[i][j - m_];
            } else {
                d[i] = binv_[i][j - m_ - n_];
            }
        }
        return d;
    }

    void run(bool phase_one) {
        std::vector<bool> in_basis(m_ + 2 * n_, false);
        for (std::size_t b : basis_) {
            in_basis[b] = true;
        }
        const std::size_t columns = phase_one ? m_ + 2 * n_ : m_ + n_;
        std::uint64_t degenerate_run = 0;
        while (true) {
            if (budget_.expired_now()) {
                throw BudgetExhausted("covering LP");
            }
            const bool bland = degenerate_run >= kBlandAfter;
            const std::size_t e = entering(prices(phase_one), columns, in_basis, phase_one, bland);
            if (e == columns) {
                return;
            }
            const auto d = column(e);
            std::size_t r = n_;
            mpq_class best_ratio;
            for (std::size_t i = 0; i < n_; ++i) {
                if (sgn(d[i]) <= 0) {
                    continue;
                }
                mpq_class ratio = xb_[i] / d[i];
                if (r == n_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[r])) {
                    r = i;
                    best_ratio = ratio;
                }
            }
            if (r == n_) {
                throw InternalError("covering LP reported unbounded");
            }
            degenerate_run = sgn(best_ratio) == 0 ? degenerate_run + 1 : 0;
            in_basis[basis_[r]] = false;
            in_basis[e] = true;
            pivot(r, e, d);
        }
    }

    // A zero artificial leaves through any structural column with a nonzero
    // entry in its row. The surplus columns span every row, so one exists.
    void evict_artificial(std::size_t r) {
        std::vector<bool> in_basis(m_ + 2 * n_, false);
        for (std::size_t b : basis_) {
            in_basis[b] = true;
        }
        for (std::size_t j = 0; j < m_ + n_; ++j) {
            if (in_basis[j]) {
                continue;
            }
            auto d = column(j);
            if (sgn(d[r]) != 0) {
                pivot(r, j, d);
                return;
            }
        }
        throw InternalError("covering LP basis is singular");
    }

    void pivot(std::size_t r, std::size_t e, const std::vector<mpq_class>& d) {
        const mpq_class inv = 1 / d[r];
        for (auto& x : binv_[r]) {
            x *= inv;
        }
        xb_[r] *= inv;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == r || sgn(d[i]) == 0) {
                continue;
            }
            for (std::size_t k = 0; k < n_; ++k) {
                if (sgn(binv_[r][k]) != 0) {
                    binv_[i][k] -= d[i] * binv_[r][k];
                }
            }
            xb_[i] -= d[i] * xb_[r];
        }
        basis_[r] = e;
        ++pivots_;
    }

    std::size_t m_;
    std::size_t n_;
    const Budget& budget_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<mpq_class>> binv_;
    std::vector<mpq_class> xb_;
    std::vector<std::size_t> basis_;
    std::uint64_t pivots_ = 0;
};

}  // namespace

LPSolution fractional_cover_number(const SetSystem& sys, const Budget& budget) {
    LPSolution sol = CoveringSimplex(sys, budget).solve();
    if (!verify_lp_solution(sys, sol)) {
        throw InternalError("simplex returned a solution that fails exact verification");
    }
    return sol;
}

bool verify_lp_solution(const SetSystem& sys, const LPSolution& sol) {
    if (sol.weights.size() != sys.size() || sol.dual.size() != static_cast<std::size_t>(sys.ground())) {
        return false;
    }
    Rational primal(0);
    std::vector<Rational> load(static_cast<std::size_t>(sys.ground()), Rational(0));
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const Rational& w = sol.weights[i];
        if (w.sign() < 0) {
            return false;
        }
        primal += w;
        if (w.sign() != 0) {
            sys.sets()[i].for_each([&](int v) { load[static_cast<std::size_t>(v)] += w; });
        }
    }
    for (const auto& l : load) {
        if (l < Rational(1)) {
            return false;
        }
    }
    Rational dual_total(0);
    for (const auto& y : sol.dual) {
        if (y.sign() < 0) {
            return false;
        }
        dual_total += y;
    }
    for (const auto& s : sys.sets()) {
        Rational packed(0);
        s.for_each([&](int v) { packed += sol.dual[static_cast<std::size_t>(v)]; });
        if (packed > Rational(1)) {
            return false;
        }
    }
    return primal == sol.value && dual_total == sol.value;
}

LPSolution fractional_dichromatic(const Digraph& g, std::uint64_t limit, const Budget& budget) {
    return fractional_cover_number(maximal_acyclic_sets(g, limit, budget), budget);
}

LPSolution fractional_chromatic(const Digraph& g, std::uint64_t limit, const Budget& budget) {
    return fractional_cover_number(maximal_independent_sets(g, limit, budget), budget);
}

}  // namespace dilworth
