#include "altdimap/multigraph.hpp"

#include <numeric>

namespace altdimap {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t v)
  {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[a] = b;
    return true;
  }
};

} // namespace

std::vector<std::size_t> Multigraph::degrees() const
{
  std::vector<std::size_t> d(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::size_t Multigraph::component_count() const
{
  Dsu dsu(vertex_count);
  std::size_t k = vertex_count;
  for (const auto& [u, v] : edges)
    if (dsu.unite(u, v))
      --k;
  return k;
}

std::size_t Multigraph::rank(unsigned long long subset) const
{
  Dsu dsu(vertex_count);
  std::size_t r = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((subset >> i & 1ull) && dsu.unite(edges[i].first, edges[i].second))
      ++r;
  return r;
}

} // namespace altdimap
