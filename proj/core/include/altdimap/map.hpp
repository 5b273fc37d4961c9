#ifndef ALTDIMAP_MAP_HPP
#define ALTDIMAP_MAP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "altdimap/mu.hpp"
#include "altdimap/perm.hpp"

namespace altdimap {

/**
 * An alternating dimap as the permutation triple (s1, sw, sw2) with
 * s1(sw(sw2(e))) = e for every edge. Only sw and sw2 are independent; s1
 * is derived at construction. Vertices are the s1-cycles (in-stars),
 * a-faces the sw-cycles and c-faces the sw2-cycles.
 */
class Map {
public:
  /** The empty map. */
  Map() = default;

  /** Any pair of permutations on the same support is a map. */
  static Map from_pair(Perm sigma_omega, Perm sigma_omega2);

  /** Checks the triple relation; throws InternalError if it fails. */
  static Map from_triple(Perm sigma_1, Perm sigma_omega, Perm sigma_omega2);

  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(EdgeId e) const { return sigma_omega_.contains(e); }

  const Perm& sigma(Mu m) const;
  const Perm& sigma_1() const noexcept { return sigma_1_; }
  const Perm& sigma_omega() const noexcept { return sigma_omega_; }
  const Perm& sigma_omega2() const noexcept { return sigma_omega2_; }

  /** Throws Error when e is not an edge. */
  void require_edge(EdgeId e) const;

  friend bool operator==(const Map& a, const Map& b);

private:
  std::vector<EdgeId> edges_;
  Perm sigma_1_;
  Perm sigma_omega_;
  Perm sigma_omega2_;
};

/**
 * Builds a map over labels (ids = positions in `labels`) from cycle lists
 * of labels. Throws Error on duplicate or unknown labels and on a label
 * repeated across cycles.
 */
Map build_map(const std::vector<std::string>& labels,
              const std::vector<std::vector<std::string>>& sigma_omega,
              const std::vector<std::vector<std::string>>& sigma_omega2);

/** Builds a map on edges 0..n-1 from integer cycle lists. */
Map make_map(std::size_t n, const std::vector<std::vector<EdgeId>>& sigma_omega,
             const std::vector<std::vector<EdgeId>>& sigma_omega2);

struct MapStats {
  std::size_t V = 0;
  std::size_t E = 0;
  std::size_t af = 0;
  std::size_t cf = 0;
  std::size_t k = 0;
  std::size_t genus = 0;

  std::size_t faces() const noexcept { return af + cf; }
  friend bool operator==(const MapStats&, const MapStats&) = default;
};

MapStats map_stats(const Map& g);

using VertexId = std::size_t;

/** Index of the s1-cycle containing e, in Perm::cycles() order. */
VertexId head(const Map& g, EdgeId e);
VertexId tail(const Map& g, EdgeId e);

/** The power-fold trial; power is taken mod 3. */
Map trial(const Map& g, int power = 1);

/** Edge sets of the connected components, each sorted, ordered by least id. */
std::vector<std::vector<EdgeId>> components(const Map& g);

/** The restriction of g to a union of components. */
Map restrict_to(const Map& g, const std::vector<EdgeId>& edges);

/** Edges of h are shifted past the largest id of g. */
Map disjoint_union(const Map& g, const Map& h);

/** Applies new_id = relabel[old_id] to every edge. */
Map relabel(const Map& g, const std::vector<EdgeId>& relabel);

/** Relabels edges to 0..n-1 preserving order. */
Map compact(const Map& g);

struct EdgeClass {
  bool is_1_loop = false;
  bool is_omega_loop = false;
  bool is_omega2_loop = false;
  bool is_ultraloop = false;
  bool is_standard_loop = false;
  bool semiloop_1 = false;
  bool semiloop_omega = false;
  bool semiloop_omega2 = false;

  bool is_triloop() const noexcept
  {
    return is_1_loop || is_omega_loop || is_omega2_loop;
  }
  bool is_loop(Mu m) const noexcept;
  bool is_semiloop(Mu m) const noexcept;
  bool is_semiloop() const noexcept
  {
    return semiloop_1 || semiloop_omega || semiloop_omega2;
  }
  /** A mu-loop that is not an ultraloop. */
  bool is_proper_loop(Mu m) const noexcept
  {
    return is_loop(m) && !is_ultraloop;
  }
  /** A mu-semiloop that is not a triloop. */
  bool is_proper_semiloop(Mu m) const noexcept
  {
    return is_semiloop(m) && !is_triloop();
  }

  /** Compact flag string such as "1 w w2 U | s1 sw sw2". */
  std::string summary() const;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

EdgeClass classify_edge(const Map& g, EdgeId e);

} // namespace altdimap

#endif
