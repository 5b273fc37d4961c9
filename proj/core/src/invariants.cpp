#include "altdimap/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "altdimap/error.hpp"

namespace altdimap {

void check_order(const Map& g, const EdgeOrder& order)
{
  EdgeOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges())
    throw Error("edge order is not a permutation of the edge set");
}

LoopKind loop_kind(const Map& g, EdgeId e)
{
  const bool l1 = g.sigma_1()(e) == e;
  const bool lw = g.sigma_omega()(e) == e;
  const bool lw2 = g.sigma_omega2()(e) == e;
  if (l1 && lw && lw2)
    return LoopKind::ultraloop;
  if (l1)
    return LoopKind::loop_1;
  if (lw)
    return LoopKind::loop_omega;
  if (lw2)
    return LoopKind::loop_omega2;
  return LoopKind::none;
}

Poly4 simple_tutte_symbolic(const Map& g, const EdgeOrder& order)
{
  const SimpleParamsT<Poly4> p{Poly4::variable(0), Poly4::variable(1),
                               Poly4::variable(2), Poly4::variable(3)};
  return simple_tutte_eval(g, p, order);
}

const char* to_string(SimpleFamily family)
{
  switch (family) {
  case SimpleFamily::zero:
    return "zero";
  case SimpleFamily::three_E:
    return "three_E";
  case SimpleFamily::sign_V:
    return "sign_V";
  case SimpleFamily::sign_cf:
    return "sign_cf";
  case SimpleFamily::sign_af:
    return "sign_af";
  }
  return "?";
}

SimpleParams simple_family_params(SimpleFamily family)
{
  switch (family) {
  case SimpleFamily::zero:
    return {0, 1, 1, 1};
  case SimpleFamily::three_E:
    return {3, 3, 3, 3};
  case SimpleFamily::sign_V:
    return {-1, -1, 1, 1};
  case SimpleFamily::sign_cf:
    return {-1, 1, 1, -1};
  case SimpleFamily::sign_af:
    return {-1, 1, -1, 1};
  }
  throw InternalError("unknown family");
}

namespace {

Rational power(const Rational& base, std::size_t exp)
{
  Rational r(1);
  for (std::size_t i = 0; i < exp; ++i)
    r *= base;
  return r;
}

} // namespace

Rational simple_family_value(const Map& g, SimpleFamily family)
{
  const MapStats s = map_stats(g);
  switch (family) {
  case SimpleFamily::zero:
    return g.empty() ? 1 : 0;
  case SimpleFamily::three_E:
    return power(3, s.E);
  case SimpleFamily::sign_V:
    return power(-1, s.V);
  case SimpleFamily::sign_cf:
    return power(-1, s.cf);
  case SimpleFamily::sign_af:
    return power(-1, s.af);
  }
  throw InternalError("unknown family");
}

ExtendedParams basic_extended_params(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta)
{
  ExtendedParams p;
  p.w = alpha * beta * gamma * delta;
  p.x = alpha * beta;
  p.y = alpha * gamma;
  p.z = alpha * delta;
  p.a = alpha / beta;
  p.b = p.c = p.d = p.e = p.g = p.i = 0;
  p.f = alpha / gamma;
  p.h = alpha / delta;
  p.j = alpha * beta / 3;
  p.k = alpha * delta / 3;
  p.l = alpha * gamma / 3;
  return p;
}

Rational basic_extended_value(const Map& g, const Rational& alpha,
                              const Rational& beta, const Rational& gamma,
                              const Rational& delta)
{
  const MapStats s = map_stats(g);
  return power(alpha, s.E) * power(beta, s.V) * power(gamma, s.af) *
         power(delta, s.cf);
}

ExtendedParams weighted_family_params(SimpleFamily family, const Rational& a,
                                      const Rational& b, const Rational& c)
{
  if (family == SimpleFamily::zero)
    throw Error("the zero family has no weighted form");
  const SimpleParams s = simple_family_params(family);
  ExtendedParams p;
  p.w = s.w * a * b * c;
  p.x = s.x * a;
  p.y = s.y * c;
  p.z = s.z * b;
  p.a = p.d = p.g = p.j = a;
  p.b = p.e = p.h = p.k = b;
  p.c = p.f = p.i = p.l = c;
  return p;
}

Rational weighted_family_value(const Map& g, SimpleFamily family,
                               const Rational& a, const Rational& b,
                               const Rational& c)
{
  const MapStats s = map_stats(g);
  return simple_family_value(g, family) * power(a, s.V) * power(b, s.cf) *
         power(c, s.af);
}

namespace {

const Poly2 px = Poly2::variable(0);
const Poly2 py = Poly2::variable(1);

/**
 * T_c and T_a share one recursion: `face` is the reduction that deletes an
 * edge of the size-two faces (w2 for T_c, w for T_a) and `other` the
 * remaining non-contracting type.
 */
Poly2 t_face(const Map& g, const EdgeOrder& order, std::size_t step, Mu face)
{
  if (g.empty())
    return Poly2(1);
  const Mu other = face == Mu::omega2 ? Mu::omega : Mu::omega2;
  const EdgeId e = order[step];
  const EdgeClass cls = classify_edge(g, e);
  auto next = [&](Mu m) { return t_face(reduce(g, e, m), order, step + 1, face); };

  if (cls.is_loop(face))
    return next(Mu::one);
  if (cls.is_semiloop(other))
    return px * next(face);
  if (cls.is_proper_semiloop(Mu::one) || cls.is_loop(other))
    return py * next(Mu::one);
  if (!cls.is_semiloop())
    return next(Mu::one) + next(face);
  throw Error("unclassified edge " + std::to_string(e));
}

const Poly1 ux = Poly1::variable(0);

Poly1 t_in(const Map& g, const EdgeOrder& order, std::size_t step)
{
  if (g.empty())
    return Poly1(1);
  const EdgeId e = order[step];
  const EdgeClass cls = classify_edge(g, e);
  auto next = [&](Mu m) { return t_in(reduce(g, e, m), order, step + 1); };

  if (cls.is_1_loop)
    return next(Mu::one);
  if (cls.is_proper_semiloop(Mu::omega) || cls.is_omega2_loop)
    return ux * next(Mu::omega2);
  if (cls.is_proper_semiloop(Mu::omega2) || cls.is_omega_loop)
    return ux * next(Mu::omega);
  if (!cls.is_semiloop())
    return next(Mu::omega) + next(Mu::omega2);
  throw Error("proper 1-semiloop encountered at edge " + std::to_string(e));
}

} // namespace

Poly2 T_c(const Map& g, const EdgeOrder& order)
{
  check_order(g, order);
  return t_face(g, order, 0, Mu::omega2);
}

Poly2 T_a(const Map& g, const EdgeOrder& order)
{
  check_order(g, order);
  return t_face(g, order, 0, Mu::omega);
}

Poly1 T_i(const Map& g, const EdgeOrder& order)
{
  check_order(g, order);
  return t_in(g, order, 0);
}

namespace {

bool connected_without(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                       std::size_t skip)
{
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != skip)
      parent[find(edges[i].first)] = find(edges[i].second);
  return find(edges[skip].first) == find(edges[skip].second);
}

Poly2 tutte_rec(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
{
  if (edges.empty())
    return Poly2(1);
  const auto [u, v] = edges.back();
  const std::size_t last = edges.size() - 1;
  const bool coloop = u != v && !connected_without(n, edges, last);

  auto deleted = edges;
  deleted.pop_back();
  if (u == v)
    return py * tutte_rec(n, std::move(deleted));

  // contract by sending v to u
  auto contracted = deleted;
  for (auto& [a, b] : contracted) {
    if (a == v)
      a = u;
    if (b == v)
      b = u;
  }
  if (coloop)
    return px * tutte_rec(n, std::move(contracted));
  return tutte_rec(n, std::move(deleted)) + tutte_rec(n, std::move(contracted));
}

} // namespace

Poly2 tutte_poly(const Multigraph& m, std::size_t bound)
{
  if (m.edges.size() > bound)
    throw Error("tutte_poly: " + std::to_string(m.edges.size()) +
                " edges exceeds the bound " + std::to_string(bound));
  for (const auto& [a, b] : m.edges)
    if (a >= m.vertex_count || b >= m.vertex_count)
      throw Error("tutte_poly: edge endpoint out of range");
  return tutte_rec(m.vertex_count, m.edges);
}

Poly1 diagonal(const Poly2& p)
{
  Poly1 r;
  for (const auto& [e, c] : p.terms())
    r += Poly1::monomial({e[0] + e[1]}, c);
  return r;
}

} // namespace altdimap
