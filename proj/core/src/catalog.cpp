#include "altdimap/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "altdimap/embedded_graph.hpp"
#include "altdimap/error.hpp"

namespace altdimap {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::size_t v)
{
  if (v > 0xffff)
    throw Error("canonical codes support at most 65535 edges");
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

std::size_t get_u16(const std::vector<std::uint8_t>& in, std::size_t& at)
{
  if (at + 2 > in.size())
    throw Error("truncated canonical code");
  std::size_t v = static_cast<std::size_t>(in[at]) << 8 | in[at + 1];
  at += 2;
  return v;
}

std::vector<std::uint8_t> component_code(const Map& g, const std::vector<EdgeId>& comp,
                                         const Perm& wi, const Perm& w2i)
{
  const Perm& w = g.sigma_omega();
  const Perm& w2 = g.sigma_omega2();
  const std::size_t n = comp.size();
  std::vector<std::size_t> label(w.universe(), n);
  std::vector<EdgeId> order;
  order.reserve(n);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur;

  for (EdgeId root : comp) {
    for (EdgeId e : order)
      label[e] = n;
    order.clear();
    order.push_back(root);
    label[root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const EdgeId x = order[i];
      for (EdgeId y : {w(x), wi(x), w2(x), w2i(x)}) {
        if (label[y] == n) {
          label[y] = order.size();
          order.push_back(y);
        }
      }
    }
    cur.clear();
    put_u16(cur, n);
    for (EdgeId x : order)
      put_u16(cur, label[w(x)]);
    for (EdgeId x : order)
      put_u16(cur, label[w2(x)]);
    if (best.empty() || cur < best)
      best = cur;
  }
  return best;
}

} // namespace

std::string CanonicalCode::to_hex() const
{
  static const char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 0xf];
  }
  return s;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex)
{
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9')
      return c - '0';
    if (c >= 'a' && c <= 'f')
      return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
      return c - 'A' + 10;
    throw Error(std::string("bad hex digit '") + c + "'");
  };
  if (hex.size() % 2 != 0)
    throw Error("hex code has odd length");
  CanonicalCode c;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    c.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return c;
}

CanonicalCode canonical_code(const Map& g)
{
  const Perm wi = g.sigma_omega().inverse();
  const Perm w2i = g.sigma_omega2().inverse();
  std::vector<std::vector<std::uint8_t>> parts;
  for (const auto& comp : components(g))
    parts.push_back(component_code(g, comp, wi, w2i));
  std::sort(parts.begin(), parts.end());
  CanonicalCode c;
  put_u16(c.bytes, parts.size());
  for (const auto& p : parts)
    c.bytes.insert(c.bytes.end(), p.begin(), p.end());
  return c;
}

Map decode(const CanonicalCode& code)
{
  std::size_t at = 0;
  const std::size_t parts = get_u16(code.bytes, at);
  std::vector<EdgeId> w, w2;
  for (std::size_t p = 0; p < parts; ++p) {
    const EdgeId base = static_cast<EdgeId>(w.size());
    const std::size_t n = get_u16(code.bytes, at);
    for (std::size_t i = 0; i < n; ++i)
      w.push_back(base + static_cast<EdgeId>(get_u16(code.bytes, at)));
    for (std::size_t i = 0; i < n; ++i)
      w2.push_back(base + static_cast<EdgeId>(get_u16(code.bytes, at)));
  }
  if (at != code.bytes.size())
    throw Error("trailing bytes in canonical code");
  for (EdgeId x : w)
    if (x >= w.size())
      throw Error("canonical code entry out of range");
  for (EdgeId x : w2)
    if (x >= w2.size())
      throw Error("canonical code entry out of range");
  return Map::from_pair(Perm(std::move(w)), Perm(std::move(w2)));
}

std::size_t code_edge_count(const CanonicalCode& code)
{
  std::size_t at = 0;
  const std::size_t parts = get_u16(code.bytes, at);
  std::size_t total = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t n = get_u16(code.bytes, at);
    total += n;
    at += 4 * n;
  }
  return total;
}

std::set<CanonicalCode> enumerate_maps(std::size_t n, EnumerateOptions options)
{
  if (n > options.bound)
    throw Error("enumeration is limited to " + std::to_string(options.bound) +
                " edges");
  std::vector<std::vector<EdgeId>> perms;
  std::vector<EdgeId> p(n);
  std::iota(p.begin(), p.end(), EdgeId{0});
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  unsigned workers = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(perms.size()));

  std::vector<std::set<CanonicalCode>> found(workers);
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < perms.size(); i += workers) {
      Perm w(perms[i]);
      for (const auto& q : perms)
        found[id].insert(canonical_code(Map::from_pair(w, Perm(q))));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id)
      pool.emplace_back(work, id);
  }
  std::set<CanonicalCode> all;
  for (auto& s : found)
    all.merge(s);
  return all;
}

bool is_self_trial(const Map& g)
{
  return canonical_code(trial(g, 1)) == canonical_code(g);
}

Map ultraloop() { return make_map(1, {}, {}); }

Map disjoint_ultraloops(std::size_t k) { return make_map(k, {}, {}); }

Map directed_cycle(std::size_t k) { return tricircuit(k, 0, 0); }

Map omega_bouquet(std::size_t k) { return tricircuit(0, k, 0); }

Map omega2_bouquet(std::size_t k) { return tricircuit(0, 0, k); }

Map mirror(const Map& g)
{
  return Map::from_pair(g.sigma_omega2().inverse(), g.sigma_omega().inverse());
}

namespace {

std::vector<CanonicalCode> posy_codes(std::size_t k)
{
  if (k > 3)
    throw Error("posies are generated for genus at most 3");
  const std::size_t n = 2 * k + 1;
  std::vector<std::vector<EdgeId>> cycle{std::vector<EdgeId>(n)};
  std::iota(cycle[0].begin(), cycle[0].end(), EdgeId{0});
  const Perm w = perm_from_cycles(cycle[0], cycle);
  std::set<CanonicalCode> codes;
  std::vector<EdgeId> rest(n - 1);
  std::iota(rest.begin(), rest.end(), EdgeId{1});
  do {
    std::vector<std::vector<EdgeId>> c2{{0}};
    c2[0].insert(c2[0].end(), rest.begin(), rest.end());
    Map g = Map::from_pair(w, perm_from_cycles(cycle[0], c2));
    if (g.sigma_1().cycle_count() == 1)
      codes.insert(std::min(canonical_code(g), canonical_code(mirror(g))));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {codes.begin(), codes.end()};
}

} // namespace

std::size_t posy_count(std::size_t k) { return posy_codes(k).size(); }

Map posy(std::size_t k, std::size_t variant)
{
  const auto codes = posy_codes(k);
  if (variant >= codes.size())
    throw Error("posy variant " + std::to_string(variant) + " out of range (" +
                std::to_string(codes.size()) + " posies of genus " +
                std::to_string(k) + ")");
  return decode(codes[variant]);
}

Map tricircuit(std::size_t p, std::size_t q, std::size_t r)
{
  if (p == 0 && q > 0 && r > 0)
    throw Error("tricircuit(0, q, r) needs q = 0 or r = 0");
  const EdgeId first_w = static_cast<EdgeId>(p);
  const EdgeId first_w2 = static_cast<EdgeId>(p + q);
  std::vector<std::vector<RotationEntry>> rotation;
  std::vector<RotationEntry> hub;
  if (p > 0)
    hub.push_back({static_cast<EdgeId>(p - 1), true});
  for (std::size_t i = 0; i < r; ++i) {
    hub.push_back({first_w2 + static_cast<EdgeId>(i), false});
    hub.push_back({first_w2 + static_cast<EdgeId>(i), true});
  }
  if (p > 0)
    hub.push_back({0, false});
  for (std::size_t i = 0; i < q; ++i) {
    hub.push_back({first_w + static_cast<EdgeId>(i), true});
    hub.push_back({first_w + static_cast<EdgeId>(i), false});
  }
  if (!hub.empty())
    rotation.push_back(std::move(hub));
  for (std::size_t i = 1; i < p; ++i)
    rotation.push_back({{static_cast<EdgeId>(i - 1), true}, {static_cast<EdgeId>(i), false}});
  return map_from_rotation(rotation);
}

Map l21_plus_omega2_loop() { return tricircuit(2, 0, 1); }

Map witness_a() { return relabel(tricircuit(2, 1, 1), {0, 1, 3, 2}); }

Map make_named(std::string_view name, const std::vector<std::size_t>& params)
{
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(std::string(name) + " takes " + std::to_string(count) +
                  " parameter(s), got " + std::to_string(params.size()));
  };
  auto positive = [&](std::size_t v) {
    if (v == 0)
      throw Error(std::string(name) + " needs a positive parameter");
    return v;
  };
  if (name == "ultraloop") {
    need(0);
    return ultraloop();
  }
  if (name == "U_k") {
    need(1);
    return disjoint_ultraloops(params[0]);
  }
  if (name == "L_k_1") {
    need(1);
    return directed_cycle(positive(params[0]));
  }
  if (name == "L_k_omega") {
    need(1);
    return omega_bouquet(positive(params[0]));
  }
  if (name == "L_k_omega2") {
    need(1);
    return omega2_bouquet(positive(params[0]));
  }
  if (name == "posy") {
    need(2);
    return posy(params[0], params[1]);
  }
  if (name == "tricircuit") {
    need(3);
    return tricircuit(params[0], params[1], params[2]);
  }
  if (name == "L21_plus_omega2_loop") {
    need(0);
    return l21_plus_omega2_loop();
  }
  if (name == "witness_A") {
    need(0);
    return witness_a();
  }
  throw Error("unknown map name '" + std::string(name) + "'");
}

} // namespace altdimap
