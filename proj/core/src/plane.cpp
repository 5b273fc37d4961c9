#include "altdimap/plane.hpp"

#include <map>
#include <numeric>

#include "altdimap/error.hpp"

namespace altdimap {

PlaneGraph::PlaneGraph(EmbeddedGraph graph) : graph_(std::move(graph))
{
  if (graph_.genus() != 0)
    throw Error("embedded graph is not plane (genus " +
                std::to_string(graph_.genus()) + ")");
}

Multigraph PlaneGraph::underlying() const
{
  Multigraph m;
  m.vertex_count = graph_.vertex_count();
  for (std::size_t i = 0; i < graph_.edge_count(); ++i)
    m.edges.emplace_back(graph_.vertex_of(2 * i), graph_.vertex_of(2 * i + 1));
  return m;
}

EmbeddedGraph embedded_from_rotations(std::size_t edge_count,
                                      const std::vector<std::vector<std::size_t>>& rotations)
{
  std::vector<unsigned> seen(edge_count, 0);
  std::vector<std::vector<DartId>> darts(rotations.size());
  for (std::size_t v = 0; v < rotations.size(); ++v)
    for (std::size_t e : rotations[v]) {
      if (e >= edge_count)
        throw Error("rotation names edge " + std::to_string(e) + " of " +
                    std::to_string(edge_count));
      if (seen[e] == 2)
        throw Error("edge " + std::to_string(e) + " occurs more than twice");
      darts[v].push_back(static_cast<DartId>(2 * e + seen[e]++));
    }
  for (std::size_t e = 0; e < edge_count; ++e)
    if (seen[e] != 2)
      throw Error("edge " + std::to_string(e) + " does not have two ends");
  std::vector<EdgeId> ids(edge_count);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  return EmbeddedGraph(std::move(ids), std::move(darts));
}

namespace {

struct SuiteEntry {
  std::size_t edges;
  std::vector<std::vector<std::size_t>> rotations;
};

const std::map<std::string, SuiteEntry, std::less<>>& suite()
{
  static const std::map<std::string, SuiteEntry, std::less<>> table = {
      {"single_edge", {1, {{0}, {0}}}},
      {"loop", {1, {{0, 0}}}},
      {"path2", {2, {{0}, {0, 1}, {1}}}},
      {"triangle", {3, {{0, 2}, {1, 0}, {2, 1}}}},
      {"theta", {3, {{0, 1, 2}, {2, 1, 0}}}},
      {"bridge_loop", {2, {{0}, {0, 1, 1}}}},
      {"cycle4", {4, {{0, 3}, {1, 0}, {2, 1}, {3, 2}}}},
  };
  return table;
}

} // namespace

PlaneGraph plane_named(std::string_view name)
{
  auto it = suite().find(name);
  if (it == suite().end())
    throw Error("unknown plane graph '" + std::string(name) + "'");
  return PlaneGraph(embedded_from_rotations(it->second.edges, it->second.rotations));
}

const std::vector<std::string>& plane_suite_names()
{
  static const std::vector<std::string> names = {
      "single_edge", "loop", "path2", "triangle", "theta", "bridge_loop", "cycle4"};
  return names;
}

namespace {

Map alt_face(const EmbeddedGraph& g, bool clockwise)
{
  std::vector<std::vector<RotationEntry>> rotation;
  for (const auto& darts : g.rotation()) {
    if (darts.empty())
      continue;
    auto& r = rotation.emplace_back();
    for (DartId d : darts) {
      const RotationEntry out{d, false};
      const RotationEntry in{EmbeddedGraph::partner(d), true};
      if (clockwise) {
        r.push_back(out);
        r.push_back(in);
      } else {
        r.push_back(in);
        r.push_back(out);
      }
    }
  }
  return map_from_rotation(rotation);
}

} // namespace

Map alt_c(const EmbeddedGraph& g) { return alt_face(g, true); }

Map alt_a(const EmbeddedGraph& g) { return alt_face(g, false); }

Map alt_c(const PlaneGraph& p) { return alt_face(p.graph(), true); }

Map alt_a(const PlaneGraph& p) { return alt_face(p.graph(), false); }

EmbeddedGraph medial(const PlaneGraph& p)
{
  const EmbeddedGraph& g = p.graph();
  const std::size_t n = g.dart_count();
  // corner d joins the leaving end of d (dart 2d) to the entering end of
  // next_clockwise(d) (dart 2d+1)
  std::vector<std::vector<DartId>> rotation(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (DartId d : {static_cast<DartId>(2 * i), static_cast<DartId>(2 * i + 1)}) {
      rotation[i].push_back(2 * g.prev_clockwise(d) + 1);
      rotation[i].push_back(2 * d);
    }
  std::vector<EdgeId> ids(n);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  return EmbeddedGraph(std::move(ids), std::move(rotation));
}

Map alt_i(const PlaneGraph& p, const std::vector<bool>& flip)
{
  const EmbeddedGraph& g = p.graph();
  std::vector<bool> flipped_vertex(g.vertex_count(), false);
  const auto comps = g.vertex_components();
  for (std::size_t c = 0; c < comps.size() && c < flip.size(); ++c)
    for (std::size_t v : comps[c])
      flipped_vertex[v] = flip[c];

  const EmbeddedGraph med = medial(p);
  std::vector<std::vector<RotationEntry>> rotation;
  for (const auto& darts : med.rotation()) {
    auto& r = rotation.emplace_back();
    for (DartId md : darts) {
      const EdgeId corner = static_cast<EdgeId>(EmbeddedGraph::slot(md));
      const bool entering = (md & 1u) != 0;
      r.push_back({corner, entering != flipped_vertex[g.vertex_of(corner)]});
    }
  }
  return map_from_rotation(rotation);
}

} // namespace altdimap
