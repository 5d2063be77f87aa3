#include "dilworth/products.hpp"

#include <algorithm>
#include <limits>

#include "dilworth/errors.hpp"

namespace dilworth {

PowerIndex::PowerIndex(int base, int length) : base_(base), length_(length), size_(1) {
    if (base < 1 || length < 0) {
        throw InvalidInput("power index needs base >= 1 and length >= 0");
    }
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() >> 1;
    for (int i = 0; i < length; ++i) {
        if (size_ > cap / static_cast<std::uint64_t>(base)) {
            throw LimitExceeded("power index overflows 63 bits", cap, cap);
        }
        size_ *= static_cast<std::uint64_t>(base);
    }
}

std::uint64_t PowerIndex::encode(const Sequence& seq) const {
    if (static_cast<int>(seq.size()) != length_) {
        throw InvalidInput("sequence length " + std::to_string(seq.size()) + " != " + std::to_string(length_));
    }
    std::uint64_t v = 0;
    for (int a : seq) {
        if (a < 0 || a >= base_) {
            throw InvalidInput("letter " + std::to_string(a) + " outside alphabet of size " + std::to_string(base_));
        }
        v = v * static_cast<std::uint64_t>(base_) + static_cast<std::uint64_t>(a);
    }
    return v;
}

void PowerIndex::decode_into(std::uint64_t value, Sequence& out) const {
    out.resize(static_cast<std::size_t>(length_));
    for (int i = length_ - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(value % static_cast<std::uint64_t>(base_));
        value /= static_cast<std::uint64_t>(base_);
    }
}

Sequence PowerIndex::decode(std::uint64_t value) const {
    if (value >= size_) {
        throw InvalidInput("power index " + std::to_string(value) + " out of range");
    }
    Sequence s;
    decode_into(value, s);
    return s;
}

namespace {

std::uint64_t checked_product_size(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    if (a != 0 && b > limit / a) {
        throw LimitExceeded("product exceeds the materialization vertex limit", a * b, limit);
    }
    if (a * b > limit) {
        throw LimitExceeded("product exceeds the materialization vertex limit", a * b, limit);
    }
    return a * b;
}

VertexSet closed_out(const Digraph& g, int v) {
    VertexSet s = g.out(v);
    s.set(v);
    return s;
}

}  // namespace

Digraph and_product(const Digraph& f, const Digraph& g, std::uint64_t vertex_limit) {
    const int nf = f.n();
    const int ng = g.n();
    const int n = static_cast<int>(checked_product_size(static_cast<std::uint64_t>(nf),
                                                        static_cast<std::uint64_t>(ng), vertex_limit));
    std::vector<VertexSet> gclosed;
    gclosed.reserve(static_cast<std::size_t>(ng));
    for (int b = 0; b < ng; ++b) {
        gclosed.push_back(closed_out(g, b));
    }
    Digraph::Builder out(n);
    for (int a = 0; a < nf; ++a) {
        const VertexSet fa = closed_out(f, a);
        for (int b = 0; b < ng; ++b) {
            const int src = a * ng + b;
            fa.for_each([&](int a2) {
                gclosed[static_cast<std::size_t>(b)].for_each([&](int b2) {
                    const int dst = a2 * ng + b2;
                    if (dst != src) {
                        out.add_edge_unchecked(src, dst);
                    }
                });
            });
        }
    }
    return std::move(out).build();
}

Digraph or_product(const Digraph& f, const Digraph& g, std::uint64_t vertex_limit) {
    const int nf = f.n();
    const int ng = g.n();
    const int n = static_cast<int>(checked_product_size(static_cast<std::uint64_t>(nf),
                                                        static_cast<std::uint64_t>(ng), vertex_limit));
    Digraph::Builder out(n);
    for (int a = 0; a < nf; ++a) {
        for (int b = 0; b < ng; ++b) {
            const int src = a * ng + b;
            for (int a2 = 0; a2 < nf; ++a2) {
                if (f.has_edge(a, a2)) {
                    for (int b2 = 0; b2 < ng; ++b2) {
                        out.add_edge_unchecked(src, a2 * ng + b2);
                    }
                } else {
                    g.out(b).for_each([&](int b2) { out.add_edge_unchecked(src, a2 * ng + b2); });
                }
            }
        }
    }
    return std::move(out).build();
}

Digraph power(const Digraph& g, int t, ProductOp op, std::uint64_t vertex_limit) {
    if (t < 0) {
        throw InvalidInput("power exponent must be non-negative");
    }
    const PowerIndex idx(g.n(), t);
    if (idx.size() > vertex_limit) {
        throw LimitExceeded("power exceeds the materialization vertex limit", idx.size(), vertex_limit);
    }
    if (t == 0) {
        return Digraph(1);
    }
    Digraph acc = g;
    for (int i = 1; i < t; ++i) {
        acc = op == ProductOp::and_op ? and_product(acc, g, vertex_limit) : or_product(acc, g, vertex_limit);
    }
    return acc;
}

Digraph and_power(const Digraph& g, int t, std::uint64_t vertex_limit) {
    return power(g, t, ProductOp::and_op, vertex_limit);
}

Digraph or_power(const Digraph& g, int t, std::uint64_t vertex_limit) {
    return power(g, t, ProductOp::or_op, vertex_limit);
}

PowerOracle::PowerOracle(const Digraph& base, int t, ProductOp op) : base_(base), index_(base.n(), t), op_(op) {}

bool PowerOracle::has_edge(const Sequence& x, const Sequence& y) const {
    if (x == y) {
        return false;
    }
    if (op_ == ProductOp::and_op) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] != y[i] && !base_.has_edge(x[i], y[i])) {
                return false;
            }
        }
        return true;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (base_.has_edge(x[i], y[i])) {
            return true;
        }
    }
    return false;
}

bool PowerOracle::has_edge(std::uint64_t x, std::uint64_t y) const {
    return has_edge(index_.decode(x), index_.decode(y));
}

nlohmann::json power_header(int base_n, int t, ProductOp op) {
    return {{"base_n", base_n}, {"t", t}, {"op", op == ProductOp::and_op ? "and" : "or"}};
}

int TypeVector::total() const {
    int s = 0;
    for (int c : counts) {
        s += c;
    }
    return s;
}

TypeVector TypeVector::of(const Sequence& seq, int alphabet) {
    TypeVector tv{std::vector<int>(static_cast<std::size_t>(alphabet), 0)};
    for (int a : seq) {
        ++tv.counts[static_cast<std::size_t>(a)];
    }
    return tv;
}

std::vector<TypeVector> all_types(int alphabet, int t) {
    std::vector<TypeVector> out;
    std::vector<int> counts(static_cast<std::size_t>(alphabet), 0);
    // Compositions of t into `alphabet` parts, lexicographic.
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == alphabet - 1) {
            counts[static_cast<std::size_t>(i)] = left;
            out.push_back(TypeVector{counts});
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, left - c);
        }
    };
    if (alphabet > 0) {
        rec(rec, 0, t);
    }
    return out;
}

std::uint64_t type_class_size(const TypeVector& tv) {
    // Product of binomials keeps intermediates small.
    std::uint64_t result = 1;
    int placed = 0;
    for (int c : tv.counts) {
        for (int k = 1; k <= c; ++k) {
            result = result * static_cast<std::uint64_t>(placed + k) / static_cast<std::uint64_t>(k);
        }
        placed += c;
    }
    return result;
}

TypeClassGraph type_class_subgraph(const Digraph& g, int t, const TypeVector& tv, std::uint64_t vertex_limit) {
    if (static_cast<int>(tv.counts.size()) != g.n()) {
        throw InvalidInput("type vector has " + std::to_string(tv.counts.size()) + " entries, graph has " +
                           std::to_string(g.n()) + " vertices");
    }
    for (int c : tv.counts) {
        if (c < 0) {
            throw InvalidInput("type vector has a negative count");
        }
    }
    if (tv.total() != t) {
        throw InvalidInput("type vector sums to " + std::to_string(tv.total()) + ", expected " + std::to_string(t));
    }
    const std::uint64_t size = type_class_size(tv);
    if (size > vertex_limit) {
        throw LimitExceeded("type class exceeds the materialization vertex limit", size, vertex_limit);
    }

    Sequence seq;
    for (int a = 0; a < g.n(); ++a) {
        seq.insert(seq.end(), static_cast<std::size_t>(tv.counts[static_cast<std::size_t>(a)]), a);
    }
    std::vector<Sequence> members;
    do {
        members.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));

    const PowerOracle oracle(g, t, ProductOp::and_op);
    TypeClassGraph out{Digraph(0), {}};
    out.vertices.reserve(members.size());
    for (const auto& m : members) {
        out.vertices.push_back(oracle.index().encode(m));
    }
    const int k = static_cast<int>(members.size());
    Digraph::Builder b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i != j && oracle.has_edge(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)])) {
                b.add_edge_unchecked(i, j);
            }
        }
    }
    out.graph = std::move(b).build();
    return out;
}

Digraph compound_union_power(const std::vector<Digraph>& family, int t, std::uint64_t vertex_limit) {
    if (family.empty()) {
        throw InvalidInput("compound family is empty");
    }
    for (const auto& g : family) {
        if (g.n() != family.front().n()) {
            throw InvalidInput("compound family members must share the vertex set");
        }
    }
    Digraph acc = and_power(family.front(), t, vertex_limit);
    for (std::size_t i = 1; i < family.size(); ++i) {
        acc = graph_union(acc, and_power(family[i], t, vertex_limit));
    }
    return acc;
}

}  // namespace dilworth
