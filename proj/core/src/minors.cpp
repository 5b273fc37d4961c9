#include "altdimap/minors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "altdimap/error.hpp"

namespace altdimap {

namespace {

struct Row {
  Mu which;
  EdgeId arg;
  EdgeId value;
};

Map splice_out(const Map& g, EdgeId e)
{
  std::vector<EdgeId> w = g.sigma_omega().table();
  std::vector<EdgeId> w2 = g.sigma_omega2().table();
  for (std::vector<EdgeId>* t : {&w, &w2}) {
    auto& tab = *t;
    EdgeId before = e;
    while (tab[before] != e)
      before = tab[before];
    tab[before] = tab[e];
    tab[e] = no_edge;
  }
  return Map::from_pair(Perm(std::move(w)), Perm(std::move(w2)));
}

Map reduce_table(const Map& g, EdgeId e, Mu mu)
{
  const Perm& s1 = g.sigma_1();
  const Perm& sw = g.sigma_omega();
  const Perm& sw2 = g.sigma_omega2();
  const Perm s1i = s1.inverse();
  const Perm swi = sw.inverse();
  const Perm sw2i = sw2.inverse();

  std::vector<Row> rows;
  switch (mu) {
  case Mu::one:
    rows = {{Mu::one, s1i(e), sw2i(e)},
            {Mu::omega, swi(e), sw(e)},
            {Mu::omega2, sw2i(e), sw2(e)},
            {Mu::one, sw(e), s1(e)}};
    break;
  case Mu::omega:
    rows = {{Mu::one, s1i(e), s1(e)},
            {Mu::omega, swi(e), sw(e)},
            {Mu::omega2, sw2i(e), swi(e)},
            {Mu::omega2, s1(e), sw2(e)}};
    break;
  case Mu::omega2:
    rows = {{Mu::one, s1i(e), s1(e)},
            {Mu::omega, swi(e), s1i(e)},
            {Mu::omega2, sw2i(e), sw2(e)},
            {Mu::omega, sw2(e), sw(e)}};
    break;
  }

  std::vector<EdgeId> w = sw.table();
  std::vector<EdgeId> w2 = sw2.table();
  std::vector<EdgeId> one = s1.table();
  w[e] = w2[e] = one[e] = no_edge;
  for (const Row& r : rows) {
    if (r.arg == e)
      continue;
    auto& tab = r.which == Mu::one ? one : r.which == Mu::omega ? w : w2;
    tab[r.arg] = r.value;
  }

  Map out;
  try {
    out = Map::from_pair(Perm(std::move(w)), Perm(std::move(w2)));
  } catch (const Error& ex) {
    throw InternalError(std::string("reduction produced a non-permutation: ") +
                        ex.what());
  }
  // the table's s1 column must agree with the derived s1
  for (EdgeId x : out.edges())
    if (out.sigma_1()(x) != one[x])
      throw InternalError("reduction table disagrees with the derived s1");
  return out;
}

} // namespace

Map reduce(const Map& g, EdgeId e, Mu mu)
{
  g.require_edge(e);
  const bool l1 = g.sigma_1()(e) == e;
  const bool lw = g.sigma_omega()(e) == e;
  const bool lw2 = g.sigma_omega2()(e) == e;
  if (l1 || lw || lw2)
    return splice_out(g, e);
  return reduce_table(g, e, mu);
}

Map reduce_seq(const Map& g, const std::vector<Reduction>& seq)
{
  Map cur = g;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (seq[j].edge == seq[i].edge)
        throw Error("edge " + std::to_string(seq[i].edge) +
                    " is reduced twice");
    cur = reduce(cur, seq[i].edge, seq[i].mu);
  }
  return cur;
}

namespace {

bool is_triloop(const Map& g, EdgeId e)
{
  return g.sigma_1()(e) == e || g.sigma_omega()(e) == e ||
         g.sigma_omega2()(e) == e;
}

bool is_proper_loop(const Map& g, EdgeId e, Mu m)
{
  const bool ultra = g.sigma_1()(e) == e && g.sigma_omega()(e) == e &&
                     g.sigma_omega2()(e) == e;
  return g.sigma(m)(e) == e && !ultra;
}

bool exceptional(const Map& g, EdgeId a, Mu ma, EdgeId b, Mu mb)
{
  return (ma == Mu::one && mb == Mu::omega && b == g.sigma_omega()(a)) ||
         (ma == Mu::omega2 && mb == Mu::one && b == g.sigma_omega2()(a)) ||
         (ma == Mu::omega && mb == Mu::omega2 && b == g.sigma_1()(a));
}

/** Whether G[1]e[nu]f = G[nu]f[1]e. */
bool contraction_commutes(const Map& g, EdgeId e, EdgeId f, Mu nu)
{
  const Perm& s1 = g.sigma_1();
  const Perm& sw = g.sigma_omega();
  const Perm& sw2 = g.sigma_omega2();
  const bool et = is_triloop(g, e);
  const bool ft = is_triloop(g, f);

  if (nu == Mu::one)
    return true;
  if (nu == Mu::omega) {
    if (sw(e) != f)
      return true;
    if (!et && !ft)
      return s1(e) == f && sw2(e) == f;
    if (!et && is_proper_loop(g, f, Mu::one))
      return sw(f) == e || sw2(e) == f;
    if (!ft && is_proper_loop(g, e, Mu::omega2))
      return sw(f) == e || s1(e) == f;
    return true;
  }
  if (!et && !ft) {
    if (sw2(f) != e)
      return true;
    return s1(f) == e && sw(f) == e;
  }
  if (!et && is_proper_loop(g, f, Mu::one) && sw(e) == f)
    return sw(f) == e || sw2(e) == f;
  if (!ft && is_proper_loop(g, e, Mu::omega) && s1(e) == f)
    return s1(f) == e || sw2(e) == f;
  return true;
}

} // namespace

bool literal_predicted_commute(const Map& g, EdgeId e, Mu mu, EdgeId f, Mu nu)
{
  g.require_edge(e);
  g.require_edge(f);
  if (mu == nu || is_triloop(g, e) || is_triloop(g, f))
    return true;
  return !exceptional(g, e, mu, f, nu) && !exceptional(g, f, nu, e, mu);
}

bool predicted_commute(const Map& g, EdgeId e, Mu mu, EdgeId f, Mu nu)
{
  g.require_edge(e);
  g.require_edge(f);
  if (mu == nu)
    return true;
  // G[mu]e[nu]f is the (mu^-1)-trial of G^mu[1]e[nu/mu]f, likewise the
  // other order, so the question reduces to a contraction in G^mu
  return contraction_commutes(trial(g, exponent(mu)), e, f, nu * inverse(mu));
}

CommuteResult commute_check(const Map& g, EdgeId e, Mu mu, EdgeId f, Mu nu)
{
  if (e == f)
    throw Error("commute_check needs two distinct edges");
  CommuteResult r;
  r.predicted = predicted_commute(g, e, mu, f, nu);
  r.actual = reduce(reduce(g, e, mu), f, nu) == reduce(reduce(g, f, nu), e, mu);
  return r;
}

Multigraph trimedial(const Map& g)
{
  Multigraph m;
  m.vertex_count = g.size();
  std::vector<std::size_t> pos(g.sigma_omega().universe(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    pos[g.edges()[i]] = i;
  for (Mu mu : all_mu)
    for (EdgeId e : g.edges())
      m.edges.emplace_back(pos[e], pos[g.sigma(mu)(e)]);
  return m;
}

bool triloops_cover_trimedial(const Map& g)
{
  const Multigraph t = trimedial(g);
  std::vector<bool> tri(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    tri[i] = is_triloop(g, g.edges()[i]);
  return std::all_of(t.edges.begin(), t.edges.end(),
                     [&](const auto& uv) { return tri[uv.first] || tri[uv.second]; });
}

bool is_2_reduction_commutative(const Map& g)
{
  // a non-commuting pair is always consecutive in some in-star or face
  for (Mu m : all_mu)
    for (EdgeId e : g.edges()) {
      const EdgeId f = g.sigma(m)(e);
      if (f == e)
        continue;
      for (Mu mu : all_mu)
        for (Mu nu : all_mu)
          if (!predicted_commute(g, e, mu, f, nu))
            return false;
    }
  return true;
}

bool is_2_reduction_commutative_brute(const Map& g)
{
  for (EdgeId e : g.edges())
    for (EdgeId f : g.edges()) {
      if (e == f)
        continue;
      for (Mu mu : all_mu)
        for (Mu nu : all_mu)
          if (!commute_check(g, e, mu, f, nu).actual)
            return false;
    }
  return true;
}

namespace {

bool all_orders_agree(const Map& g, const std::vector<EdgeId>& subset)
{
  const std::size_t k = subset.size();
  std::size_t types = 1;
  for (std::size_t i = 0; i < k; ++i)
    types *= 3;
  for (std::size_t t = 0; t < types; ++t) {
    std::vector<Mu> mu(k);
    for (std::size_t i = 0, x = t; i < k; ++i, x /= 3)
      mu[i] = mu_from_exponent(static_cast<int>(x % 3));
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::optional<Map> first;
    do {
      std::vector<Reduction> seq;
      for (std::size_t i : order)
        seq.push_back({subset[i], mu[i]});
      Map r = reduce_seq(g, seq);
      if (!first)
        first = std::move(r);
      else if (!(r == *first))
        return false;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return true;
}

bool component_is_tricircuit(const Map& g, const std::vector<EdgeId>& comp)
{
  const Perm& s1 = g.sigma_1();
  std::vector<EdgeId> hub;
  for (EdgeId e : comp) {
    if (s1(e) == e)
      continue;
    // e lies in an in-star of size >= 2; all such must share one vertex
    if (hub.empty()) {
      hub.push_back(e);
      for (EdgeId x = s1(e); x != e; x = s1(x))
        hub.push_back(x);
    } else if (std::find(hub.begin(), hub.end(), e) == hub.end()) {
      return false;
    }
  }
  std::size_t other = 0;
  for (EdgeId e : hub)
    if (g.sigma_omega()(e) != e && g.sigma_omega2()(e) != e)
      ++other;
  return other <= 1;
}

} // namespace

bool is_tricircuit_union(const Map& g)
{
  for (const auto& comp : components(g))
    if (!component_is_tricircuit(g, comp))
      return false;
  return true;
}

bool is_totally_reduction_commutative(const Map& g, CommuteMode mode,
                                      std::size_t bound)
{
  if (mode == CommuteMode::structural) {
    for (const auto& comp : components(g)) {
      // any two reductions in a component of three edges leave one edge,
      // which can only be an ultraloop
      if (comp.size() <= 3)
        continue;
      bool uniform = false;
      for (Mu m : all_mu)
        uniform = uniform || std::all_of(comp.begin(), comp.end(), [&](EdgeId e) {
                    return g.sigma(m)(e) == e;
                  });
      if (!uniform)
        return false;
    }
    return true;
  }
  const std::size_t n = g.size();
  if (n > bound)
    throw Error("brute-force total commutativity is limited to " +
                std::to_string(bound) + " edges");
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (__builtin_popcountl(mask) < 2)
      continue;
    std::vector<EdgeId> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1ul)
        subset.push_back(g.edges()[i]);
    if (!all_orders_agree(g, subset))
      return false;
  }
  return true;
}

std::optional<std::size_t> is_posy(const Map& g)
{
  if (g.empty())
    return std::nullopt;
  const MapStats s = map_stats(g);
  if (s.k != 1 || s.V != 1 || s.af != 1 || s.cf != 1 || s.E % 2 == 0)
    return std::nullopt;
  return (s.E - 1) / 2;
}

std::optional<std::size_t> posy_union_genus(const Map& g)
{
  std::size_t total = 0;
  for (const auto& comp : components(g)) {
    auto k = is_posy(restrict_to(g, comp));
    if (!k)
      return std::nullopt;
    total += *k;
  }
  return total;
}

std::set<CanonicalCode> minor_closure(const Map& g, std::size_t bound)
{
  if (g.size() > bound)
    throw Error("minor closure is limited to " + std::to_string(bound) + " edges");
  std::set<CanonicalCode> seen{canonical_code(g)};
  std::vector<Map> stack{g};
  while (!stack.empty()) {
    Map cur = std::move(stack.back());
    stack.pop_back();
    for (EdgeId e : cur.edges())
      for (Mu mu : all_mu) {
        Map child = reduce(cur, e, mu);
        if (seen.insert(canonical_code(child)).second)
          stack.push_back(std::move(child));
      }
  }
  return seen;
}

GenusTestResult genus_excluded_minor_test(const Map& g, std::size_t k,
                                          std::size_t bound)
{
  if (g.empty())
    throw Error("genus test needs a nonempty map");
  if (k == 0)
    throw Error("genus test needs k >= 1");
  GenusTestResult result;
  std::optional<std::pair<std::size_t, CanonicalCode>> best;
  for (const CanonicalCode& c : minor_closure(g, bound)) {
    auto genus = posy_union_genus(decode(c));
    if (!genus || *genus != k)
      continue;
    std::pair<std::size_t, CanonicalCode> key{code_edge_count(c), c};
    if (!best || key < *best)
      best = std::move(key);
  }
  if (best) {
    result.genus_lt_k = false;
    result.witness = best->second;
  }
  return result;
}

} // namespace altdimap
