#ifndef ALTDIMAP_MULTIGRAPH_HPP
#define ALTDIMAP_MULTIGRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace altdimap {

/** Undirected multigraph on vertices 0..n-1; loops allowed. */
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /** Loops count twice. */
  std::vector<std::size_t> degrees() const;
  std::size_t component_count() const;
  /** Rank of the edge subset given by a bit mask (bit i = edge i). */
  std::size_t rank(unsigned long long subset) const;
};

} // namespace altdimap

#endif
