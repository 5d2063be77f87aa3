#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "dilworth/digraph.hpp"

namespace dilworth {

/// Default cap on materialized power size. A materialized graph stores two
/// n x n bit matrices, so 2^16 vertices already costs ~1 GiB.
inline constexpr std::uint64_t kDefaultVertexLimit = std::uint64_t{1} << 16;

using Sequence = std::vector<int>;

/// Mixed-radix codec for sequences over [0, base)^length, first letter most
/// significant. This numbering is part of the certificate format.
class PowerIndex {
public:
    PowerIndex(int base, int length);

    int base() const noexcept { return base_; }
    int length() const noexcept { return length_; }
    /// base^length; throws LimitExceeded if it does not fit in 63 bits.
    std::uint64_t size() const noexcept { return size_; }

    std::uint64_t encode(const Sequence& seq) const;
    Sequence decode(std::uint64_t value) const;
    void decode_into(std::uint64_t value, Sequence& out) const;

private:
    int base_;
    int length_;
    std::uint64_t size_;
};

enum class ProductOp { and_op, or_op };

/// Pair (f,g) is vertex f*|V(G)| + g.
Digraph and_product(const Digraph& f, const Digraph& g, std::uint64_t vertex_limit = kDefaultVertexLimit);
Digraph or_product(const Digraph& f, const Digraph& g, std::uint64_t vertex_limit = kDefaultVertexLimit);

Digraph and_power(const Digraph& g, int t, std::uint64_t vertex_limit = kDefaultVertexLimit);
Digraph or_power(const Digraph& g, int t, std::uint64_t vertex_limit = kDefaultVertexLimit);
Digraph power(const Digraph& g, int t, ProductOp op, std::uint64_t vertex_limit = kDefaultVertexLimit);

/// Edge queries on a power without building it.
class PowerOracle {
public:
    PowerOracle(const Digraph& base, int t, ProductOp op);

    std::uint64_t vertex_count() const noexcept { return index_.size(); }
    const PowerIndex& index() const noexcept { return index_; }
    bool has_edge(std::uint64_t x, std::uint64_t y) const;
    bool has_edge(const Sequence& x, const Sequence& y) const;

private:
    const Digraph& base_;
    PowerIndex index_;
    ProductOp op_;
};

/// Sidecar header naming the vertices of a serialized power graph.
nlohmann::json power_header(int base_n, int t, ProductOp op);

/// Letter occurrence counts of a sequence (an exact type).
struct TypeVector {
    std::vector<int> counts;

    int total() const;
    static TypeVector of(const Sequence& seq, int alphabet);
    bool operator==(const TypeVector&) const = default;
    auto operator<=>(const TypeVector&) const = default;
};

/// All type vectors with `alphabet` entries summing to t, lexicographic.
std::vector<TypeVector> all_types(int alphabet, int t);

/// Number of sequences of the given type (multinomial coefficient).
std::uint64_t type_class_size(const TypeVector& tv);

struct TypeClassGraph {
    Digraph graph;
    /// Power-vertex indices of the class, ascending (= lexicographic).
    std::vector<std::uint64_t> vertices;
};

/// Subgraph of and_power(g, t) induced on sequences of type `tv`.
TypeClassGraph type_class_subgraph(const Digraph& g, int t, const TypeVector& tv,
                                   std::uint64_t vertex_limit = kDefaultVertexLimit);

/// Union of the t-th AND powers of each member (not the power of the union).
Digraph compound_union_power(const std::vector<Digraph>& family, int t,
                             std::uint64_t vertex_limit = kDefaultVertexLimit);

}  // namespace dilworth
