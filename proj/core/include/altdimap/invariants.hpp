#ifndef ALTDIMAP_INVARIANTS_HPP
#define ALTDIMAP_INVARIANTS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "altdimap/map.hpp"
#include "altdimap/minors.hpp"
#include "altdimap/multigraph.hpp"
#include "altdimap/polynomial.hpp"

namespace altdimap {

/**
 * Evaluation order for the recursive invariants. Each step reduces the
 * first surviving edge, and every step removes exactly one edge, so step d
 * always reduces order[d].
 */
using EdgeOrder = std::vector<EdgeId>;

/** Throws Error unless order is a permutation of g.edges(). */
void check_order(const Map& g, const EdgeOrder& order);

template <class R>
struct SimpleParamsT {
  R w, x, y, z;
};
using SimpleParams = SimpleParamsT<Rational>;

template <class R>
struct ExtendedParamsT {
  R w, x, y, z;
  /** Proper 1-semiloop row. */
  R a, b, c;
  /** Proper w-semiloop row. */
  R d, e, f;
  /** Proper w2-semiloop row. */
  R g, h, i;
  /** Row for edges that are neither triloops nor semiloops. */
  R j, k, l;
};
using ExtendedParams = ExtendedParamsT<Rational>;

/** Which loop clause of the simple recursion applies to e. */
enum class LoopKind { ultraloop, loop_1, loop_omega, loop_omega2, none };

/** Ultraloop first, then proper 1-, w- and w2-loops. */
LoopKind loop_kind(const Map& g, EdgeId e);

template <class R>
R simple_tutte_eval(const Map& g, const SimpleParamsT<R>& p, const EdgeOrder& order);

template <class R>
R extended_eval(const Map& g, const ExtendedParamsT<R>& p, const EdgeOrder& order);

/** simple_tutte_eval in the indeterminates w, x, y, z. */
Poly4 simple_tutte_symbolic(const Map& g, const EdgeOrder& order);

/** The five simple Tutte invariants. */
enum class SimpleFamily { zero, three_E, sign_V, sign_cf, sign_af };

inline constexpr SimpleFamily all_simple_families[] = {
    SimpleFamily::zero, SimpleFamily::three_E, SimpleFamily::sign_V,
    SimpleFamily::sign_cf, SimpleFamily::sign_af};

const char* to_string(SimpleFamily family);

/**
 * The (w, x, y, z) of a family; the zero family uses x = y = z = 1.
 * sign_cf has x = y = 1, z = w = -1 and sign_af has x = z = 1, y = w = -1.
 */
SimpleParams simple_family_params(SimpleFamily family);

/** The family's closed form: 0, 3^E, (-1)^V, (-1)^cf or (-1)^af. */
Rational simple_family_value(const Map& g, SimpleFamily family);

/**
 * alpha^E beta^V gamma^af delta^cf as an extended invariant: w = alpha
 * beta gamma delta, x = alpha beta, y = alpha gamma, z = alpha delta,
 * a = alpha/beta, f = alpha/gamma, h = alpha/delta, j = alpha beta/3,
 * k = alpha delta/3, l = alpha gamma/3, all others 0.
 */
ExtendedParams basic_extended_params(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta);
Rational basic_extended_value(const Map& g, const Rational& alpha,
                              const Rational& beta, const Rational& gamma,
                              const Rational& delta);

/**
 * Three-term weights (a, b, c) on every edge that is not a triloop, with
 * loop weights x = x'a, y = y'c, z = z'b, w = w'abc from the simple family
 * (w', x', y', z'). Reductions of plain edges lower V, cf and af by one
 * under [1], [w] and [w2]; a w-loop's [w] lowers af and a w2-loop's [w2]
 * lowers cf, hence the crossed y and z. The closed form F' a^V b^cf c^af
 * holds when a, b, c are all +1 or -1; a proper semiloop raises the count
 * instead, so other weights break it. The zero family is not offered.
 */
ExtendedParams weighted_family_params(SimpleFamily family, const Rational& a,
                                      const Rational& b, const Rational& c);
/** F'(G) a^V b^cf c^af where F' is the family's closed form. */
Rational weighted_family_value(const Map& g, SimpleFamily family,
                               const Rational& a, const Rational& b,
                               const Rational& c);

/**
 * T_c in x, y. Cases in priority order: w2-loop (ultraloops included),
 * w-semiloop, proper 1-semiloop or w-loop, not a semiloop. Throws Error
 * "unclassified edge" when none applies.
 */
Poly2 T_c(const Map& g, const EdgeOrder& order);
/** T_c with w and w2 exchanged. */
Poly2 T_a(const Map& g, const EdgeOrder& order);
/**
 * T_i in x. Cases: 1-loop (ultraloops included), proper w-semiloop or
 * w2-loop, proper w2-semiloop or w-loop, not a semiloop. Throws Error on a
 * proper 1-semiloop, where the recursion is undefined.
 */
Poly1 T_i(const Map& g, const EdgeOrder& order);

/** Deletion-contraction Tutte polynomial. Throws Error past `bound` edges. */
Poly2 tutte_poly(const Multigraph& m, std::size_t bound = 12);

/** The univariate image p(x, x). */
Poly1 diagonal(const Poly2& p);

namespace detail {

template <class R>
R simple_rec(const Map& g, const SimpleParamsT<R>& p, const EdgeOrder& order,
             std::size_t step)
{
  if (g.empty())
    return R(1);
  const EdgeId e = order[step];
  switch (loop_kind(g, e)) {
  case LoopKind::ultraloop:
    return p.w * simple_rec(reduce(g, e, Mu::one), p, order, step + 1);
  case LoopKind::loop_1:
    return p.x * simple_rec(reduce(g, e, Mu::one), p, order, step + 1);
  case LoopKind::loop_omega:
    return p.y * simple_rec(reduce(g, e, Mu::omega), p, order, step + 1);
  case LoopKind::loop_omega2:
    return p.z * simple_rec(reduce(g, e, Mu::omega2), p, order, step + 1);
  case LoopKind::none:
    break;
  }
  R sum(0);
  for (Mu m : all_mu)
    sum = sum + simple_rec(reduce(g, e, m), p, order, step + 1);
  return sum;
}

template <class R>
R weighted_sum(const Map& g, EdgeId e, const R& c1, const R& cw, const R& cw2,
               const ExtendedParamsT<R>& p, const EdgeOrder& order, std::size_t step);

template <class R>
R extended_rec(const Map& g, const ExtendedParamsT<R>& p, const EdgeOrder& order,
               std::size_t step)
{
  if (g.empty())
    return R(1);
  const EdgeId e = order[step];
  switch (loop_kind(g, e)) {
  case LoopKind::ultraloop:
    return p.w * extended_rec(reduce(g, e, Mu::one), p, order, step + 1);
  case LoopKind::loop_1:
    return p.x * extended_rec(reduce(g, e, Mu::one), p, order, step + 1);
  case LoopKind::loop_omega:
    return p.y * extended_rec(reduce(g, e, Mu::omega), p, order, step + 1);
  case LoopKind::loop_omega2:
    return p.z * extended_rec(reduce(g, e, Mu::omega2), p, order, step + 1);
  case LoopKind::none:
    break;
  }
  const EdgeClass cls = classify_edge(g, e);
  if (cls.semiloop_1)
    return weighted_sum(g, e, p.a, p.b, p.c, p, order, step);
  if (cls.semiloop_omega)
    return weighted_sum(g, e, p.d, p.e, p.f, p, order, step);
  if (cls.semiloop_omega2)
    return weighted_sum(g, e, p.g, p.h, p.i, p, order, step);
  return weighted_sum(g, e, p.j, p.k, p.l, p, order, step);
}

template <class R>
R weighted_sum(const Map& g, EdgeId e, const R& c1, const R& cw, const R& cw2,
               const ExtendedParamsT<R>& p, const EdgeOrder& order, std::size_t step)
{
  const R zero(0);
  R sum(0);
  const std::pair<Mu, const R*> terms[] = {
      {Mu::one, &c1}, {Mu::omega, &cw}, {Mu::omega2, &cw2}};
  for (const auto& [m, coeff] : terms) {
    // a zero weight prunes the whole subtree
    if (*coeff == zero)
      continue;
    sum = sum + *coeff * extended_rec(reduce(g, e, m), p, order, step + 1);
  }
  return sum;
}

} // namespace detail

template <class R>
R simple_tutte_eval(const Map& g, const SimpleParamsT<R>& p, const EdgeOrder& order)
{
  check_order(g, order);
  return detail::simple_rec(g, p, order, 0);
}

template <class R>
R extended_eval(const Map& g, const ExtendedParamsT<R>& p, const EdgeOrder& order)
{
  check_order(g, order);
  return detail::extended_rec(g, p, order, 0);
}

} // namespace altdimap

#endif
