#include <gtest/gtest.h>

#include <json.hpp>

#include "altdimap/catalog.hpp"
#include "altdimap/error.hpp"
#include "altdimap/io.hpp"
#include "altdimap/minors.hpp"

using namespace altdimap;

namespace {

const char* posy_doc = R"(# the 1-posy
map posy1
edges a b c
sigma_omega (a c b)
sigma_omega2 (a c b)
)";

std::size_t count(const std::string& s, const std::string& needle)
{
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1))
    ++n;
  return n;
}

} // namespace

TEST(MapFormat, UltraloopRoundTrip)
{
  const std::string text = "map U\nedges e\nsigma_omega ()\nsigma_omega2 ()\n";
  const MapDocument doc = parse_map_document(text);
  EXPECT_EQ(doc.map, ultraloop());
  EXPECT_EQ(serialize_map(doc), text);
}

TEST(MapFormat, OnePosy)
{
  const MapDocument doc = parse_map_document(posy_doc);
  EXPECT_EQ(doc.name, "posy1");
  EXPECT_EQ(canonical_code(doc.map), canonical_code(posy(1, 0)));
  const std::string once = serialize_map(doc);
  EXPECT_EQ(serialize_map(parse_map_document(once)), once);
}

TEST(MapFormat, SerializeIsCanonical)
{
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& code : enumerate_maps(n)) {
      const Map g = decode(code);
      const std::string s = serialize_map(g);
      const MapDocument back = parse_map_document(s);
      EXPECT_EQ(back.map, g);
      EXPECT_EQ(serialize_map(back), s);
    }
}

TEST(MapFormat, SparseIdsKeepLabels)
{
  const MapDocument doc = parse_map_document(posy_doc);
  const Map r = reduce(doc.map, 1, Mu::one);
  const std::string s = serialize_map(r, doc.labels, "minor");
  EXPECT_NE(s.find("edges a c\n"), std::string::npos);
  const MapDocument back = parse_map_document(s);
  EXPECT_EQ(canonical_code(back.map), canonical_code(r));
}

TEST(MapFormat, CycleOrder)
{
  const Map g = make_map(4, {{3, 1}, {2, 0}}, {});
  EXPECT_NE(serialize_map(g).find("sigma_omega (e0 e2)(e1 e3)\n"), std::string::npos);
}

TEST(MapFormat, Errors)
{
  try {
    parse_map("edges a b\nsigma_omega (a b a)\nsigma_omega2 ()\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 18u);
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos);
  }
  try {
    parse_map("edges a b\nsigma_omega (a q)\nsigma_omega2 ()\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'q'"), std::string::npos);
  }
  EXPECT_THROW(parse_map("edges a a\nsigma_omega ()\nsigma_omega2 ()\n"), ParseError);
  EXPECT_THROW(parse_map("edges a\nsigma_omega (a\nsigma_omega2 ()\n"), ParseError);
  EXPECT_THROW(parse_map("edges a\nsigma_omega ()\n"), ParseError);
  EXPECT_THROW(parse_map("edges a\nsigma_omega ()\nsigma_omega2 ()\nfaces 3\n"), ParseError);
  EXPECT_THROW(parse_map("edges a$\nsigma_omega ()\nsigma_omega2 ()\n"), ParseError);
  EXPECT_THROW(parse_map("sigma_omega ()\nedges a\nsigma_omega2 ()\n"), ParseError);
}

TEST(PlaneFormat, Triangle)
{
  const PlaneGraphDocument doc = parse_plane_document(R"(plane triangle
edge a x y
edge b y z
edge c z x
rotation x a c
rotation y b a
rotation z c b
)");
  EXPECT_EQ(doc.name, "triangle");
  EXPECT_EQ(doc.graph.vertex_count(), 3u);
  EXPECT_EQ(doc.graph.face_count(), 2u);
  EXPECT_EQ(doc.vertex_names, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(PlaneFormat, LoopAndIsolatedVertex)
{
  const PlaneGraphDocument doc = parse_plane_document(
      "edge l v v\nrotation v l l\nvertex w\n");
  EXPECT_EQ(doc.graph.vertex_count(), 2u);
  EXPECT_EQ(doc.graph.edge_count(), 1u);
}

TEST(PlaneFormat, Errors)
{
  EXPECT_THROW(parse_plane_document("edge a x y\nrotation x a\n"), ParseError);
  EXPECT_THROW(parse_plane_document("edge a x y\nrotation x a a\nrotation y a\n"), ParseError);
  EXPECT_THROW(parse_plane_document("edge a x y\nrotation x b\nrotation y a\n"), ParseError);
  // two interleaved loops: a torus
  EXPECT_THROW(parse_plane_document("edge a v v\nedge b v v\nrotation v a b a b\n"), Error);
}

TEST(Dot, Ultraloop)
{
  const std::string dot = export_dot(ultraloop());
  EXPECT_EQ(count(dot, "v0;"), 1u);
  EXPECT_EQ(count(dot, "->"), 1u);
  EXPECT_NE(dot.find("v0 -> v0"), std::string::npos);
}

TEST(Dot, DirectedTwoCycle)
{
  const std::string dot = export_dot(directed_cycle(2), {"a", "b"});
  EXPECT_EQ(count(dot, ";\n") - count(dot, "->"), 2u);
  EXPECT_EQ(count(dot, "->"), 2u);
  EXPECT_NE(dot.find("v0 -> v1"), std::string::npos);
  EXPECT_NE(dot.find("v1 -> v0"), std::string::npos);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
  EXPECT_EQ(dot, export_dot(directed_cycle(2), {"a", "b"}));
}

TEST(Json, OnePosy)
{
  const MapDocument doc = parse_map_document(posy_doc);
  const std::string text = export_json(doc.map, doc.labels, doc.name);
  EXPECT_NE(text.find("\"genus\": 1"), std::string::npos);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["stats"]["V"], 1);
  EXPECT_EQ(j["classification"].size(), 3u);
  EXPECT_EQ(j["sigma_1"], nlohmann::json::parse(R"([["a", "c", "b"]])"));
}

TEST(BinFnJson, RoundTrip)
{
  const BinFn f({"p", "q"}, {1, {0.5, -2}, 3, {0, 1}});
  const BinFn back = parse_binfn_json(binfn_to_json(f));
  EXPECT_EQ(back.ground(), f.ground());
  EXPECT_EQ(back.values(), f.values());
  const BinFn plain = parse_binfn_json(R"({"values": [1, 0.5]})");
  EXPECT_EQ(plain.ground(), std::vector<std::string>{"e0"});
  EXPECT_THROW(parse_binfn_json("{"), Error);
  EXPECT_THROW(parse_binfn_json(R"({"values": [1, 2, 3]})"), Error);
  EXPECT_THROW(parse_binfn_json(R"({"values": ["x"]})"), Error);
}
