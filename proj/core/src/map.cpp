#include "altdimap/map.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "altdimap/embedded_graph.hpp"
#include "altdimap/error.hpp"

namespace altdimap {

Mu parse_mu(std::string_view text)
{
  if (text == "1")
    return Mu::one;
  if (text == "w" || text == "omega")
    return Mu::omega;
  if (text == "w2" || text == "omega2")
    return Mu::omega2;
  throw Error("unknown type '" + std::string(text) + "' (expected 1, w or w2)");
}

Map Map::from_pair(Perm sigma_omega, Perm sigma_omega2)
{
  if (sigma_omega.support() != sigma_omega2.support())
    throw Error("sigma_omega and sigma_omega2 have different supports");
  // s1(sw(sw2(e))) = e, so s1 sends sw(sw2(e)) back to e
  std::vector<EdgeId> one(sigma_omega.universe(), no_edge);
  for (EdgeId e : sigma_omega.support())
    one[sigma_omega(sigma_omega2(e))] = e;
  Map g;
  g.edges_ = sigma_omega.support();
  g.sigma_1_ = Perm(std::move(one));
  g.sigma_omega_ = std::move(sigma_omega);
  g.sigma_omega2_ = std::move(sigma_omega2);
  return g;
}

Map Map::from_triple(Perm sigma_1, Perm sigma_omega, Perm sigma_omega2)
{
  Map g = from_pair(std::move(sigma_omega), std::move(sigma_omega2));
  if (!(g.sigma_1_ == sigma_1))
    throw InternalError("permutation triple violates s1 sw sw2 = id");
  return g;
}

const Perm& Map::sigma(Mu m) const
{
  switch (m) {
  case Mu::one: return sigma_1_;
  case Mu::omega: return sigma_omega_;
  case Mu::omega2: return sigma_omega2_;
  }
  return sigma_1_;
}

void Map::require_edge(EdgeId e) const
{
  if (!contains(e))
    throw Error("unknown edge id " + std::to_string(e));
}

bool operator==(const Map& a, const Map& b)
{
  return a.sigma_omega_ == b.sigma_omega_ && a.sigma_omega2_ == b.sigma_omega2_;
}

Map build_map(const std::vector<std::string>& labels,
              const std::vector<std::vector<std::string>>& sigma_omega,
              const std::vector<std::vector<std::string>>& sigma_omega2)
{
  std::unordered_map<std::string, EdgeId> id;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!id.emplace(labels[i], static_cast<EdgeId>(i)).second)
      throw Error("duplicate edge label '" + labels[i] + "'");

  auto convert = [&](const std::vector<std::vector<std::string>>& cycles) {
    std::vector<std::vector<EdgeId>> out;
    std::vector<bool> used(labels.size(), false);
    for (const auto& cyc : cycles) {
      std::vector<EdgeId> c;
      for (const auto& l : cyc) {
        auto it = id.find(l);
        if (it == id.end())
          throw Error("cycle entry '" + l + "' is not an edge label");
        if (used[it->second])
          throw Error("label '" + l + "' occurs twice in a cycle list");
        used[it->second] = true;
        c.push_back(it->second);
      }
      out.push_back(std::move(c));
    }
    return out;
  };
  return make_map(labels.size(), convert(sigma_omega), convert(sigma_omega2));
}

Map make_map(std::size_t n, const std::vector<std::vector<EdgeId>>& sigma_omega,
             const std::vector<std::vector<EdgeId>>& sigma_omega2)
{
  std::vector<EdgeId> support(n);
  std::iota(support.begin(), support.end(), EdgeId{0});
  return Map::from_pair(perm_from_cycles(support, sigma_omega),
                        perm_from_cycles(support, sigma_omega2));
}

std::vector<std::vector<EdgeId>> components(const Map& g)
{
  std::vector<std::vector<EdgeId>> out;
  const std::size_t u = g.sigma_omega().universe();
  std::vector<bool> seen(u, false);
  for (EdgeId root : g.edges()) {
    if (seen[root])
      continue;
    std::vector<EdgeId> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId n : {g.sigma_omega()(comp[i]), g.sigma_omega2()(comp[i])}) {
        if (!seen[n]) {
          seen[n] = true;
          comp.push_back(n);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

MapStats map_stats(const Map& g)
{
  MapStats s;
  s.E = g.size();
  s.V = g.sigma_1().cycle_count();
  s.af = g.sigma_omega().cycle_count();
  s.cf = g.sigma_omega2().cycle_count();
  s.k = components(g).size();
  // V - E + F = 2(k - genus)
  long euler = static_cast<long>(s.V) - static_cast<long>(s.E) +
               static_cast<long>(s.af + s.cf);
  long twice = 2 * static_cast<long>(s.k) - euler;
  if (twice < 0 || twice % 2 != 0)
    throw InternalError("Euler relation gives a non-integral or negative genus");
  s.genus = static_cast<std::size_t>(twice / 2);
  return s;
}

VertexId head(const Map& g, EdgeId e)
{
  g.require_edge(e);
  return g.sigma_1().cycle_index()[e];
}

VertexId tail(const Map& g, EdgeId e)
{
  g.require_edge(e);
  return g.sigma_1().cycle_index()[g.sigma_omega()(e)];
}

Map trial(const Map& g, int power)
{
  Map t = g;
  for (int i = 0; i < ((power % 3) + 3) % 3; ++i) {
    // the in-stars, a-faces and c-faces of the trial are the c-faces,
    // in-stars and a-faces of the original
    t = Map::from_triple(t.sigma_omega2(), t.sigma_1(), t.sigma_omega());
  }
  return t;
}

Map restrict_to(const Map& g, const std::vector<EdgeId>& edges)
{
  std::vector<EdgeId> w(g.sigma_omega().universe(), no_edge);
  std::vector<EdgeId> w2(g.sigma_omega().universe(), no_edge);
  for (EdgeId e : edges) {
    g.require_edge(e);
    w[e] = g.sigma_omega()(e);
    w2[e] = g.sigma_omega2()(e);
  }
  return Map::from_pair(Perm(std::move(w)), Perm(std::move(w2)));
}

Map relabel(const Map& g, const std::vector<EdgeId>& relabel)
{
  EdgeId top = 0;
  for (EdgeId e : g.edges())
    top = std::max(top, relabel.at(e) + 1);
  std::vector<EdgeId> w(top, no_edge);
  std::vector<EdgeId> w2(top, no_edge);
  for (EdgeId e : g.edges()) {
    EdgeId n = relabel[e];
    if (w[n] != no_edge)
      throw Error("relabel is not injective");
    w[n] = relabel[g.sigma_omega()(e)];
    w2[n] = relabel[g.sigma_omega2()(e)];
  }
  return Map::from_pair(Perm(std::move(w)), Perm(std::move(w2)));
}

Map compact(const Map& g)
{
  std::vector<EdgeId> r(g.sigma_omega().universe(), no_edge);
  EdgeId next = 0;
  for (EdgeId e : g.edges())
    r[e] = next++;
  return relabel(g, r);
}

Map disjoint_union(const Map& g, const Map& h)
{
  const EdgeId shift = static_cast<EdgeId>(g.sigma_omega().universe());
  const std::size_t top = shift + h.sigma_omega().universe();
  std::vector<EdgeId> w(top, no_edge);
  std::vector<EdgeId> w2(top, no_edge);
  for (EdgeId e : g.edges()) {
    w[e] = g.sigma_omega()(e);
    w2[e] = g.sigma_omega2()(e);
  }
  for (EdgeId e : h.edges()) {
    w[e + shift] = h.sigma_omega()(e) + shift;
    w2[e + shift] = h.sigma_omega2()(e) + shift;
  }
  return Map::from_pair(Perm(std::move(w)), Perm(std::move(w2)));
}

bool EdgeClass::is_loop(Mu m) const noexcept
{
  switch (m) {
  case Mu::one: return is_1_loop;
  case Mu::omega: return is_omega_loop;
  case Mu::omega2: return is_omega2_loop;
  }
  return false;
}

bool EdgeClass::is_semiloop(Mu m) const noexcept
{
  switch (m) {
  case Mu::one: return semiloop_1;
  case Mu::omega: return semiloop_omega;
  case Mu::omega2: return semiloop_omega2;
  }
  return false;
}

std::string EdgeClass::summary() const
{
  std::string s;
  auto add = [&s](bool flag, const char* tag) {
    if (!flag)
      return;
    if (!s.empty())
      s += ' ';
    s += tag;
  };
  add(is_ultraloop, "ultraloop");
  if (!is_ultraloop) {
    add(is_1_loop, "1-loop");
    add(is_omega_loop, "w-loop");
    add(is_omega2_loop, "w2-loop");
  }
  add(is_standard_loop, "standard-loop");
  add(semiloop_1, "1-semiloop");
  add(semiloop_omega, "w-semiloop");
  add(semiloop_omega2, "w2-semiloop");
  return s.empty() ? std::string("plain") : s;
}

EdgeClass classify_edge(const Map& g, EdgeId e)
{
  g.require_edge(e);
  const Perm& s1 = g.sigma_1();
  const Perm& sw = g.sigma_omega();
  const Perm& sw2 = g.sigma_omega2();

  EdgeClass c;
  c.is_1_loop = s1(e) == e;
  c.is_omega_loop = sw(e) == e;
  c.is_omega2_loop = sw2(e) == e;
  c.is_ultraloop = c.is_1_loop && c.is_omega_loop && c.is_omega2_loop;
  const auto vertex = s1.cycle_index();
  c.is_standard_loop = vertex[e] == vertex[sw(e)];
  c.semiloop_1 = c.is_standard_loop;

  const EmbeddedGraph eg = rotation_system(g);
  const long base = eg_k_minus_gamma(eg);
  auto pair_test = [&](EdgeId partner) {
    if (partner == e)
      return true;
    return eg_k_minus_gamma(eg_delete(eg, {e, partner})) > base;
  };
  c.semiloop_omega = pair_test(sw2(e));
  c.semiloop_omega2 = pair_test(sw.inverse()(e));
  return c;
}

} // namespace altdimap
