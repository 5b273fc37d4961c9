#ifndef ALTDIMAP_MINORS_HPP
#define ALTDIMAP_MINORS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "altdimap/catalog.hpp"
#include "altdimap/map.hpp"
#include "altdimap/multigraph.hpp"

namespace altdimap {

struct Reduction {
  EdgeId edge;
  Mu mu;
};

/** G[mu]e. Throws Error if e is not an edge. */
Map reduce(const Map& g, EdgeId e, Mu mu);

/** Left-to-right fold of reduce. Throws Error on repeated or missing edges. */
Map reduce_seq(const Map& g, const std::vector<Reduction>& seq);

struct CommuteResult {
  bool actual = false;
  bool predicted = false;
};

/** Compares G[mu]e[nu]f with G[nu]f[mu]e against the characterization. */
CommuteResult commute_check(const Map& g, EdgeId e, Mu mu, EdgeId f, Mu nu);

/**
 * Whether G[mu]e[nu]f = G[nu]f[mu]e, decided from local structure without
 * reducing. Reduced by triality to a contraction [1]e against [nu]f, which
 * fails to commute only when f = sw(e) (nu = w) or e = sw2(f) (nu = w2)
 * in one of a few local configurations; see contraction_commutes.
 */
bool predicted_commute(const Map& g, EdgeId e, Mu mu, EdgeId f, Mu nu);

/**
 * The textbook criterion: commute unless mu != nu, neither edge is a
 * triloop, and (mu,nu) = (1,w) with f = sw(e), (w2,1) with f = sw2(e) or
 * (w,w2) with f = s1(e), in either order. It is wrong on some maps
 * (e.g. the 1-posy and tricircuit(2,2,0)); kept for comparison.
 */
bool literal_predicted_commute(const Map& g, EdgeId e, Mu mu, EdgeId f, Mu nu);

/**
 * Vertices are the positions of g.edges(); one edge per consecutive pair in
 * every s1-, sw- and sw2-cycle, a loop for each fixed point.
 */
Multigraph trimedial(const Map& g);

/** Every pair of reductions commutes; checked on trimedial edges only. */
bool is_2_reduction_commutative(const Map& g);

/** The triloops of g cover every edge of trimedial(g). */
bool triloops_cover_trimedial(const Map& g);

/** Pairwise check of every ordered edge pair and every type pair. */
bool is_2_reduction_commutative_brute(const Map& g);

enum class CommuteMode { brute, structural };

/**
 * Every set of reductions gives one result in every order. Brute mode tries
 * them all and throws Error past `bound` edges. Structural mode accepts
 * exactly the maps whose components each have at most three edges or
 * consist of 1-loops only, w-loops only or w2-loops only.
 */
bool is_totally_reduction_commutative(const Map& g, CommuteMode mode,
                                      std::size_t bound = 5);

/**
 * Every component is a tricircuit: at most one vertex of in-degree above 1,
 * and at most one edge into it that is neither a w-loop nor a w2-loop.
 */
bool is_tricircuit_union(const Map& g);

/** Genus k when g is a k-posy. */
std::optional<std::size_t> is_posy(const Map& g);

/** Total genus when every component is a posy. */
std::optional<std::size_t> posy_union_genus(const Map& g);

/** Codes of every minor, g and the empty map included. */
std::set<CanonicalCode> minor_closure(const Map& g, std::size_t bound = 8);

struct GenusTestResult {
  bool genus_lt_k = true;
  std::optional<CanonicalCode> witness;
};

/**
 * Looks for a minor that is a disjoint union of posies of total genus k.
 * The witness is the smallest such minor by (edge count, code).
 */
GenusTestResult genus_excluded_minor_test(const Map& g, std::size_t k,
                                          std::size_t bound = 8);

} // namespace altdimap

#endif
