#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "dilworth/errors.hpp"
#include "dilworth/families.hpp"
#include "dilworth/graph_io.hpp"
#include "dilworth/products.hpp"
#include "dilworth/serialize.hpp"

using namespace dilworth;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    return json::parse(in);
}

const std::string kData = DILWORTH_DATA_DIR;

}  // namespace

TEST(SixClassCover, VerifiesOnSquare) {
    const Digraph g = read_graph_file(kData + "/a5c-pow2.graph");
    EXPECT_EQ(g, and_power(generate({FamilyKind::alt_cycle_complement, 0}), 2));
    const auto file = parse_certificate(read_json(kData + "/a5c-pow2-cover.json"));
    EXPECT_EQ(file.graph_hash, graph_hash(g));
    EXPECT_EQ(file.value, 6);
    const auto& cover = std::get<AcyclicCover>(file.certificate);
    EXPECT_EQ(cover.size(), 6);
    EXPECT_TRUE(verify_certificate(g, cover).ok);

    // Orders run along the edges; reversed they must be rejected.
    AcyclicCover backward = cover;
    for (auto& order : backward.orders) {
        std::reverse(order.begin(), order.end());
    }
    EXPECT_FALSE(verify_certificate(g, backward).ok);
}

TEST(Certificates, RoundTrip) {
    const Coloring c{{0, 1, 0, 2}, 3};
    const auto j = certificate_json(c, "sha256:x", 3, true);
    const auto back = parse_certificate(json::parse(j.dump()));
    EXPECT_EQ(back.kind, "coloring");
    EXPECT_EQ(back.graph_hash, "sha256:x");
    EXPECT_TRUE(back.optimal);
    EXPECT_EQ(std::get<Coloring>(back.certificate).colors, c.colors);
    EXPECT_EQ(certificate_json(back.certificate, back.graph_hash, *back.value, back.optimal).dump(), j.dump());

    const SubsetCertificate s{SubsetKind::transitive_clique, {2, 0}, {2, 0}};
    const auto sj = certificate_json(s, "h", 2, false);
    const auto sb = std::get<SubsetCertificate>(parse_certificate(sj).certificate);
    EXPECT_EQ(sb.kind, SubsetKind::transitive_clique);
    EXPECT_EQ(sb.order, s.order);
}

TEST(Certificates, Malformed) {
    EXPECT_THROW(parse_certificate(json::array()), MalformedCertificate);
    EXPECT_THROW(parse_certificate(json{{"kind", "coloring"}}), MalformedCertificate);
    EXPECT_THROW(parse_certificate(json{{"kind", "coloring"}, {"witness", {{"colors", "x"}, {"k", 1}}}}),
                 MalformedCertificate);
}

TEST(Display, SixSignificantDigits) {
    EXPECT_DOUBLE_EQ(display(0.58496250072), 0.584963);
    EXPECT_DOUBLE_EQ(display(1234567.0), 1234570.0);
    EXPECT_DOUBLE_EQ(display(0.0), 0.0);
}

TEST(LpJson, RationalsAsStrings) {
    const SetSystem tri(3, {VertexSet(3, {0, 1}), VertexSet(3, {0, 2}), VertexSet(3, {1, 2})});
    const auto j = to_json(tri, fractional_cover_number(tri));
    EXPECT_EQ(j["value"], "3/2");
    EXPECT_EQ(j["log2"]["approx"], true);
    EXPECT_EQ(j["weights"].size(), 3u);
    EXPECT_EQ(j["dual"][0], "1/2");
}

TEST(GraphFiles, JsonAndTextRoundTrip) {
    const Digraph g = generate({FamilyKind::tournament, 7});
    const std::string text_path = ::testing::TempDir() + "t7.graph";
    const std::string json_path = ::testing::TempDir() + "t7.json";
    write_graph_file(text_path, g);
    write_graph_file(json_path, g, true);
    EXPECT_EQ(read_graph_file(text_path), g);
    EXPECT_EQ(read_graph_file(json_path), g);
    EXPECT_THROW(read_graph_file(::testing::TempDir() + "missing.graph"), InvalidInput);
}
