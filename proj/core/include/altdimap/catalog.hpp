#ifndef ALTDIMAP_CATALOG_HPP
#define ALTDIMAP_CATALOG_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "altdimap/map.hpp"

namespace altdimap {

/**
 * Isomorphism-invariant byte string of a map.
 *
 * Format: u16 component count, then the component codes in ascending
 * lexicographic order. A component code is u16 n followed by the relabeled
 * sw images and then the relabeled sw2 images, each a u16. All integers are
 * big-endian. Relabeling numbers edges in first-visit order of a queue walk
 * from a root applying sw, sw^-1, sw2, sw2^-1 in that order; the component
 * code is the least over all roots.
 */
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string to_hex() const;
  static CanonicalCode from_hex(std::string_view hex);

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Map& g);

/** A map (edges 0..n-1) with the given code. */
Map decode(const CanonicalCode& code);

/** Number of edges encoded by a code. */
std::size_t code_edge_count(const CanonicalCode& code);

struct EnumerateOptions {
  std::size_t bound = 6;
  /** 0 picks std::thread::hardware_concurrency(). */
  unsigned threads = 0;
};

/** All isomorphism classes with exactly n edges. Throws Error past the bound. */
std::set<CanonicalCode> enumerate_maps(std::size_t n, EnumerateOptions options = {});

bool is_self_trial(const Map& g);

/** Named constructors. Edge ids are documented per constructor. */
Map ultraloop();
/** k disjoint ultraloops. */
Map disjoint_ultraloops(std::size_t k);
/** Directed k-cycle; edge i runs from vertex i to vertex i+1. */
Map directed_cycle(std::size_t k);
/** One vertex with k w-loops. */
Map omega_bouquet(std::size_t k);
/** One vertex with k w2-loops. */
Map omega2_bouquet(std::size_t k);
/**
 * Number of k-posies up to isomorphism and reflection (k <= 3). A map and
 * its mirror image (sw, sw2) -> (sw2^-1, sw^-1) count once; for k = 2 the
 * four orientation-preserving classes form three such pairs.
 */
std::size_t posy_count(std::size_t k);
/**
 * The variant-th k-posy: the least canonical code of each mirror pair,
 * in code order.
 */
Map posy(std::size_t k, std::size_t variant);
/** The mirror image: (sw, sw2) -> (sw2^-1, sw^-1), so s1 -> s1^-1. */
Map mirror(const Map& g);
/**
 * A directed p-cycle of 1-loops with q w-loops and r w2-loops at one vertex.
 * Ids: circuit edges 0..p-1 (edge p-1 enters the shared vertex, edge 0
 * leaves it), then w-loops, then w2-loops. With p = 0 at most one of q, r
 * may be nonzero.
 */
Map tricircuit(std::size_t p, std::size_t q, std::size_t r);
/** L_{2,1} plus a w2-loop at the head of its second edge: 0 = f, 1 = g, 2 = e. */
Map l21_plus_omega2_loop();
/** L_{2,1} (0 = g, 1 = h) plus a w2-loop 2 = e and a w-loop 3 = f at h's head. */
Map witness_a();

/**
 * Constructor by name: ultraloop, U_k, L_k_1, L_k_omega, L_k_omega2, posy,
 * tricircuit, L21_plus_omega2_loop, witness_A.
 */
Map make_named(std::string_view name, const std::vector<std::size_t>& params);

} // namespace altdimap

#endif
