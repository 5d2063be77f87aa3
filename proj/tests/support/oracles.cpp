#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace oracle {

Adj::Adj(const dilworth::Digraph& g) : n(g.n()), out(static_cast<std::size_t>(g.n()), 0), in(out) {
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (g.has_edge(u, v)) {
                out[u] |= Mask{1} << v;
                in[v] |= Mask{1} << u;
            }
        }
    }
}

namespace {

template <typename F>
void for_bits(Mask s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

template <typename P>
int largest(const Adj& g, P pred) {
    int best = 0;
    for (Mask s = 0; s <= g.full(); ++s) {
        if (pred(g, s)) {
            best = std::max(best, std::popcount(s));
        }
        if (s == g.full()) {
            break;
        }
    }
    return best;
}

template <typename P>
int min_cover(const Adj& g, P pred) {
    const Mask full = g.full();
    std::vector<bool> good(std::size_t{full} + 1);
    for (Mask s = 0; s <= full; ++s) {
        good[s] = pred(g, s);
        if (s == full) {
            break;
        }
    }
    std::vector<int> f(std::size_t{full} + 1, std::numeric_limits<int>::max());
    f[0] = 0;
    for (Mask m = 1; m <= full; ++m) {
        const Mask low = m & -m;
        const Mask rest = m ^ low;
        // Subsets of m that contain its lowest element.
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask s = sub | low;
            if (good[s] && f[m ^ s] != std::numeric_limits<int>::max()) {
                f[m] = std::min(f[m], f[m ^ s] + 1);
            }
            if (sub == 0) {
                break;
            }
        }
        if (m == full) {
            break;
        }
    }
    return f[full];
}

template <typename P>
std::vector<Mask> maximal(const Adj& g, P pred) {
    std::vector<Mask> out;
    for (Mask s = 0; s <= g.full(); ++s) {
        if (pred(g, s)) {
            bool is_max = true;
            for (int v = 0; v < g.n && is_max; ++v) {
                if (!(s >> v & 1) && pred(g, s | Mask{1} << v)) {
                    is_max = false;
                }
            }
            if (is_max) {
                out.push_back(s);
            }
        }
        if (s == g.full()) {
            break;
        }
    }
    return out;
}

using Int = __int128;

// Determinant of a k x k integer matrix, fraction-free.
Int bareiss(std::vector<std::vector<Int>> a) {
    const std::size_t k = a.size();
    Int sign = 1;
    Int prev = 1;
    for (std::size_t p = 0; p < k; ++p) {
        if (a[p][p] == 0) {
            std::size_t r = p + 1;
            while (r < k && a[r][p] == 0) {
                ++r;
            }
            if (r == k) {
                return 0;
            }
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

}  // namespace

bool independent(const Adj& g, Mask s) {
    bool ok = true;
    for_bits(s, [&](int v) { ok = ok && !((g.out[v] | g.in[v]) & s); });
    return ok;
}

bool symmetric_clique(const Adj& g, Mask s) {
    bool ok = true;
    for_bits(s, [&](int v) {
        const Mask others = s & ~(Mask{1} << v);
        ok = ok && (g.out[v] & g.in[v] & others) == others;
    });
    return ok;
}

bool transitive_clique(const Adj& g, Mask s) {
    // Some member beats every other member, and the rest is again transitive.
    if (std::popcount(s) <= 1) {
        return true;
    }
    bool ok = false;
    for_bits(s, [&](int v) {
        const Mask others = s & ~(Mask{1} << v);
        if (!ok && (g.out[v] & others) == others) {
            ok = transitive_clique(g, others);
        }
    });
    return ok;
}

bool acyclic(const Adj& g, Mask s) {
    // Peel off members with no in-neighbour left inside.
    while (s) {
        Mask sources = 0;
        for_bits(s, [&](int v) {
            if (!(g.in[v] & s)) {
                sources |= Mask{1} << v;
            }
        });
        if (!sources) {
            return false;
        }
        s &= ~sources;
    }
    return true;
}

int alpha(const Adj& g) { return largest(g, independent); }
int omega_s(const Adj& g) { return largest(g, symmetric_clique); }
int omega_tr(const Adj& g) { return largest(g, transitive_clique); }
int acyclicity(const Adj& g) { return largest(g, acyclic); }
int chi(const Adj& g) { return min_cover(g, independent); }
int chidir(const Adj& g) { return min_cover(g, acyclic); }
std::vector<Mask> maximal_independent(const Adj& g) { return maximal(g, independent); }
std::vector<Mask> maximal_acyclic(const Adj& g) { return maximal(g, acyclic); }

dilworth::Rational cover_lp(int n, const std::vector<Mask>& sets) {
    // Best value so far as num/den.
    Int best_num = 0;
    Int best_den = 1;
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (Mask support = 1; support <= full; ++support) {
        std::vector<int> cols;
        for_bits(support, [&](int v) { cols.push_back(v); });
        const std::size_t k = cols.size();

        // Only restrictions maximal among restrictions can be tight when
        // every coordinate on the support is positive.
        std::vector<Mask> rows;
        for (Mask s : sets) {
            rows.push_back(s & support);
        }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::vector<Mask> tight;
        for (Mask r : rows) {
            bool dominated = r == 0;
            for (Mask o : rows) {
                if (o != r && (r & o) == r) {
                    dominated = true;
                }
            }
            if (!dominated) {
                tight.push_back(r);
            }
        }

        if (tight.size() >= k) {
            std::vector<std::size_t> pick(k);
            for (std::size_t i = 0; i < k; ++i) {
                pick[i] = i;
            }
            while (true) {
                std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        m[i][j] = tight[pick[i]] >> cols[j] & 1;
                    }
                }
                Int det = bareiss(m);
                if (det != 0) {
                    std::vector<Int> y(k);
                    for (std::size_t j = 0; j < k; ++j) {
                        auto mj = m;
                        for (std::size_t i = 0; i < k; ++i) {
                            mj[i][j] = 1;
                        }
                        y[j] = bareiss(mj);
                    }
                    if (det < 0) {
                        det = -det;
                        for (auto& x : y) {
                            x = -x;
                        }
                    }
                    bool feasible = std::all_of(y.begin(), y.end(), [](Int x) { return x > 0; });
                    for (std::size_t s = 0; s < sets.size() && feasible; ++s) {
                        Int load = 0;
                        for (std::size_t j = 0; j < k; ++j) {
                            if (sets[s] >> cols[j] & 1) {
                                load += y[j];
                            }
                        }
                        feasible = load <= det;
                    }
                    if (feasible) {
                        Int total = 0;
                        for (Int x : y) {
                            total += x;
                        }
                        if (total * best_den > best_num * det) {
                            best_num = total;
                            best_den = det;
                        }
                    }
                }
                // Next k-combination of the candidate rows.
                std::size_t i = k;
                while (i > 0 && pick[i - 1] == tight.size() - k + i - 1) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++pick[i - 1];
                for (std::size_t j = i; j < k; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
        if (support == full) {
            break;
        }
    }
    return dilworth::Rational(static_cast<long>(best_num), static_cast<long>(best_den));
}

dilworth::Digraph random_digraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<dilworth::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return dilworth::build_digraph(n, edges);
}

dilworth::Digraph random_symmetric(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<dilworth::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            }
        }
    }
    return dilworth::build_digraph(n, edges);
}

}  // namespace oracle
