#ifndef ALTDIMAP_TESTS_ORACLES_HPP
#define ALTDIMAP_TESTS_ORACLES_HPP

// Reference computations that share no code with the library beyond its
// value types.

#include <cstdint>
#include <vector>

#include "altdimap/binfn.hpp"
#include "altdimap/map.hpp"
#include "altdimap/multigraph.hpp"
#include "altdimap/polynomial.hpp"

namespace oracle {

/**
 * Number of alternating dimaps on n labeled-up-to-isomorphism edges.
 * Maps are pairs of permutations up to simultaneous conjugation, so by
 * Burnside the count is the sum over cycle types of the centralizer order.
 */
std::uint64_t burnside_census(unsigned n);

/** Sum over edge subsets A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)). */
altdimap::Poly2 rank_nullity_tutte(const altdimap::Multigraph& g);

/** The dense 2^m x 2^m Kronecker power applied to f. */
std::vector<altdimap::Complex> naive_kronecker(const altdimap::BinFn& f, altdimap::Complex mu);

/** Genus from V - E + F = 2k - 2g, counting cycles directly from the triple. */
long euler_genus(const altdimap::Map& g);

/** Genus of the rotation system by face tracing on its darts. */
long traced_genus(const altdimap::Map& g);

} // namespace oracle

#endif
