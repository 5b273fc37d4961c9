#ifndef ALTDIMAP_PLANE_HPP
#define ALTDIMAP_PLANE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "altdimap/embedded_graph.hpp"
#include "altdimap/map.hpp"
#include "altdimap/multigraph.hpp"

namespace altdimap {

/**
 * An embedded graph whose components are all plane. Edge i of the graph is
 * slot i of the embedding; dart 2i sits at its first endpoint.
 */
class PlaneGraph {
public:
  PlaneGraph() = default;
  /** Throws Error unless every component has genus 0. */
  explicit PlaneGraph(EmbeddedGraph graph);

  const EmbeddedGraph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  std::size_t face_count() const { return graph_.face_count(); }

  /** The abstract multigraph, edge i joining the ends of slot i. */
  Multigraph underlying() const;

private:
  EmbeddedGraph graph_;
};

/**
 * Builds from clockwise rotations listing edge indices. A non-loop edge
 * must occur once at each endpoint; a loop twice at its vertex. The first
 * occurrence of an edge becomes dart 2i. Throws Error otherwise.
 */
EmbeddedGraph embedded_from_rotations(std::size_t edge_count,
                                      const std::vector<std::vector<std::size_t>>& rotations);

/**
 * The fixed test suite: single_edge, loop, path2, triangle, theta,
 * bridge_loop (an edge with a loop at one end) and cycle4.
 */
PlaneGraph plane_named(std::string_view name);
const std::vector<std::string>& plane_suite_names();

/**
 * Each edge becomes a pair of opposite arcs bounding a clockwise 2-face.
 * Map edge 2i runs from the vertex of dart 2i, edge 2i+1 back. At each
 * vertex a dart expands clockwise to [outgoing arc, incoming arc].
 */
Map alt_c(const PlaneGraph& p);
/** As alt_c with each expansion reversed, giving anticlockwise 2-faces. */
Map alt_a(const PlaneGraph& p);
/** The same constructions on an embedding of any genus. */
Map alt_c(const EmbeddedGraph& g);
Map alt_a(const EmbeddedGraph& g);

/**
 * The medial embedding: vertex i for edge i, one edge per corner (d,
 * next_clockwise(d)) in dart order. Around medial vertex i the four corner
 * ends run clockwise as [entering dart 2i, leaving 2i, entering 2i+1,
 * leaving 2i+1].
 */
EmbeddedGraph medial(const PlaneGraph& p);

/**
 * The medial graph with alternating orientation. Corner (d, next(d)) runs
 * from medial vertex slot(d) to slot(next(d)); a set bit in `flip` for a
 * component (in vertex_components order) reverses all its arcs. Missing
 * bits are 0.
 */
Map alt_i(const PlaneGraph& p, const std::vector<bool>& flip = {});

} // namespace altdimap

#endif
