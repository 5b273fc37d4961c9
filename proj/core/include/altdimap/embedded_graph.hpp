#ifndef ALTDIMAP_EMBEDDED_GRAPH_HPP
#define ALTDIMAP_EMBEDDED_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "altdimap/map.hpp"

namespace altdimap {

using DartId = std::uint32_t;

/**
 * An undirected multigraph cellularly embedded in an orientable surface.
 * Edge slot i owns darts 2i and 2i+1; the pairing is d <-> d^1. Each vertex
 * carries the clockwise cyclic order of its darts. Vertices may be isolated.
 */
class EmbeddedGraph {
public:
  EmbeddedGraph() = default;

  /**
   * edge_ids[i] labels slot i; rotation[v] lists the darts at v clockwise.
   * Throws Error unless every dart occurs in exactly one rotation.
   */
  EmbeddedGraph(std::vector<EdgeId> edge_ids,
                std::vector<std::vector<DartId>> rotation);

  std::size_t vertex_count() const noexcept { return rotation_.size(); }
  std::size_t edge_count() const noexcept { return edge_ids_.size(); }
  std::size_t dart_count() const noexcept { return 2 * edge_ids_.size(); }

  const std::vector<EdgeId>& edge_ids() const noexcept { return edge_ids_; }
  const std::vector<std::vector<DartId>>& rotation() const noexcept
  {
    return rotation_;
  }

  static DartId partner(DartId d) noexcept { return d ^ 1u; }
  static std::size_t slot(DartId d) noexcept { return d >> 1; }
  std::size_t vertex_of(DartId d) const { return vertex_of_[d]; }
  /** The next dart clockwise around vertex_of(d). */
  DartId next_clockwise(DartId d) const { return next_[d]; }
  DartId prev_clockwise(DartId d) const { return prev_[d]; }
  std::size_t degree(std::size_t v) const { return rotation_[v].size(); }

  /** Face boundary walks as dart cycles under d -> next_clockwise(partner(d)). */
  std::vector<std::vector<DartId>> faces() const;
  std::size_t face_count() const;

  /** Vertex sets of the components; an isolated vertex is its own component. */
  std::vector<std::vector<std::size_t>> vertex_components() const;
  std::size_t component_count() const;

  /** Total genus, summed over components by Euler's formula. */
  std::size_t genus() const;

  /** Slot of an edge id; throws Error if absent. */
  std::size_t slot_of(EdgeId e) const;

private:
  std::vector<EdgeId> edge_ids_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<std::size_t> vertex_of_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
};

/**
 * The underlying embedded graph of a map. Vertices are the s1-cycles in
 * Perm::cycles() order. Slot i is edges()[i]; dart 2i is its tail end and
 * 2i+1 its head end. Around each vertex the darts run clockwise as
 * e in, sw^-1(e) out, s1(e) in, sw^-1(s1(e)) out, ...
 */
EmbeddedGraph rotation_system(const Map& g);

/** Removes the listed edges and keeps every vertex. Throws Error on unknown ids. */
EmbeddedGraph eg_delete(const EmbeddedGraph& eg, const std::vector<EdgeId>& removed);

/** Number of components minus genus. */
long eg_k_minus_gamma(const EmbeddedGraph& eg);

/** One entry of a vertex rotation for map_from_rotation. */
struct RotationEntry {
  EdgeId edge;
  bool incoming;
};

/**
 * The inverse of rotation_system: a map from clockwise rotations of
 * alternately incoming and outgoing edge ends. s1(e) is the next incoming
 * end after e, and sw(f) for an outgoing end f is the incoming end just
 * before it. Throws Error unless every edge has one incoming and one
 * outgoing end and every rotation alternates.
 */
Map map_from_rotation(const std::vector<std::vector<RotationEntry>>& rotation);

} // namespace altdimap

#endif
