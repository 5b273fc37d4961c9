#include "altdimap/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "altdimap/error.hpp"

namespace altdimap {

EmbeddedGraph::EmbeddedGraph(std::vector<EdgeId> edge_ids,
                             std::vector<std::vector<DartId>> rotation)
    : edge_ids_(std::move(edge_ids)), rotation_(std::move(rotation))
{
  const std::size_t darts = dart_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  vertex_of_.assign(darts, unset);
  next_.assign(darts, 0);
  prev_.assign(darts, 0);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    const auto& r = rotation_[v];
    for (std::size_t i = 0; i < r.size(); ++i) {
      DartId d = r[i];
      if (d >= darts)
        throw Error("rotation names dart " + std::to_string(d) +
                    " beyond the edge list");
      if (vertex_of_[d] != unset)
        throw Error("dart " + std::to_string(d) + " occurs in two rotations");
      vertex_of_[d] = v;
      next_[d] = r[(i + 1) % r.size()];
      prev_[d] = r[(i + r.size() - 1) % r.size()];
    }
  }
  for (std::size_t d = 0; d < darts; ++d)
    if (vertex_of_[d] == unset)
      throw Error("dart " + std::to_string(d) + " occurs in no rotation");
}

std::vector<std::vector<DartId>> EmbeddedGraph::faces() const
{
  std::vector<std::vector<DartId>> out;
  std::vector<bool> seen(dart_count(), false);
  for (DartId s = 0; s < dart_count(); ++s) {
    if (seen[s])
      continue;
    std::vector<DartId> face;
    for (DartId d = s; !seen[d]; d = next_[partner(d)]) {
      seen[d] = true;
      face.push_back(d);
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::size_t EmbeddedGraph::face_count() const { return faces().size(); }

std::vector<std::vector<std::size_t>> EmbeddedGraph::vertex_components() const
{
  std::vector<std::size_t> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t s = 0; s < edge_count(); ++s) {
    std::size_t a = find(vertex_of_[2 * s]);
    std::size_t b = find(vertex_of_[2 * s + 1]);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> index(vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    std::size_t r = find(v);
    if (index[r] == static_cast<std::size_t>(-1)) {
      index[r] = groups.size();
      groups.emplace_back();
    }
    groups[index[r]].push_back(v);
  }
  return groups;
}

std::size_t EmbeddedGraph::component_count() const
{
  return vertex_components().size();
}

std::size_t EmbeddedGraph::genus() const
{
  const auto comps = vertex_components();
  std::vector<std::size_t> comp_of(vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t v : comps[c])
      comp_of[v] = c;
  std::vector<long> V(comps.size(), 0), E(comps.size(), 0), F(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    V[c] = static_cast<long>(comps[c].size());
  for (std::size_t s = 0; s < edge_count(); ++s)
    ++E[comp_of[vertex_of_[2 * s]]];
  for (const auto& f : faces())
    ++F[comp_of[vertex_of_[f.front()]]];
  std::size_t total = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    // an isolated vertex bounds one face of the sphere
    if (E[c] == 0)
      F[c] = 1;
    long twice = 2 - (V[c] - E[c] + F[c]);
    if (twice < 0 || twice % 2 != 0)
      throw InternalError("face tracing gives a non-integral genus");
    total += static_cast<std::size_t>(twice / 2);
  }
  return total;
}

std::size_t EmbeddedGraph::slot_of(EdgeId e) const
{
  auto it = std::find(edge_ids_.begin(), edge_ids_.end(), e);
  if (it == edge_ids_.end())
    throw Error("edge " + std::to_string(e) + " is not in the embedded graph");
  return static_cast<std::size_t>(it - edge_ids_.begin());
}

EmbeddedGraph rotation_system(const Map& g)
{
  const auto& edges = g.edges();
  std::vector<std::size_t> slot(g.sigma_omega().universe(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i)
    slot[edges[i]] = i;
  const Perm left = g.sigma_omega().inverse();
  std::vector<std::vector<DartId>> rotation;
  for (const auto& in_star : g.sigma_1().cycles()) {
    std::vector<DartId> r;
    for (EdgeId e : in_star) {
      r.push_back(static_cast<DartId>(2 * slot[e] + 1));
      r.push_back(static_cast<DartId>(2 * slot[left(e)]));
    }
    rotation.push_back(std::move(r));
  }
  return EmbeddedGraph(edges, std::move(rotation));
}

EmbeddedGraph eg_delete(const EmbeddedGraph& eg, const std::vector<EdgeId>& removed)
{
  std::vector<bool> drop(eg.edge_count(), false);
  for (EdgeId e : removed)
    drop[eg.slot_of(e)] = true;
  std::vector<DartId> new_slot(eg.edge_count(), 0);
  std::vector<EdgeId> ids;
  for (std::size_t s = 0; s < eg.edge_count(); ++s) {
    if (drop[s])
      continue;
    new_slot[s] = static_cast<DartId>(ids.size());
    ids.push_back(eg.edge_ids()[s]);
  }
  std::vector<std::vector<DartId>> rotation;
  for (const auto& r : eg.rotation()) {
    std::vector<DartId> nr;
    for (DartId d : r)
      if (!drop[EmbeddedGraph::slot(d)])
        nr.push_back(2 * new_slot[EmbeddedGraph::slot(d)] + (d & 1u));
    rotation.push_back(std::move(nr));
  }
  return EmbeddedGraph(std::move(ids), std::move(rotation));
}

long eg_k_minus_gamma(const EmbeddedGraph& eg)
{
  return static_cast<long>(eg.component_count()) - static_cast<long>(eg.genus());
}

Map map_from_rotation(const std::vector<std::vector<RotationEntry>>& rotation)
{
  EdgeId top = 0;
  for (const auto& r : rotation)
    for (const auto& x : r)
      top = std::max(top, x.edge + 1);
  std::vector<EdgeId> one(top, no_edge);
  std::vector<EdgeId> omega(top, no_edge);
  std::vector<int> ins(top, 0), outs(top, 0);
  for (const auto& r : rotation) {
    const std::size_t n = r.size();
    if (n == 0 || n % 2 != 0)
      throw Error("a vertex rotation must have even positive length");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = r[i];
      const auto& nxt = r[(i + 1) % n];
      if (x.incoming == nxt.incoming)
        throw Error("rotation does not alternate at edge " + std::to_string(x.edge));
      if (x.incoming) {
        ++ins[x.edge];
        one[x.edge] = r[(i + 2) % n].edge;
      } else {
        ++outs[x.edge];
        omega[x.edge] = r[(i + n - 1) % n].edge;
      }
    }
  }
  std::vector<EdgeId> support;
  for (EdgeId e = 0; e < top; ++e) {
    if (ins[e] == 0 && outs[e] == 0)
      continue;
    if (ins[e] != 1 || outs[e] != 1)
      throw Error("edge " + std::to_string(e) +
                  " needs exactly one incoming and one outgoing end");
    support.push_back(e);
  }
  Perm s1(std::move(one));
  Perm sw(std::move(omega));
  // s1 sw sw2 = id gives sw2 = sw^-1 s1^-1
  Perm sw2 = compose(sw.inverse(), s1.inverse());
  return Map::from_triple(std::move(s1), std::move(sw), std::move(sw2));
}

} // namespace altdimap
