#include "altdimap/perm.hpp"

#include <algorithm>

#include "altdimap/error.hpp"

namespace altdimap {

Perm::Perm(std::vector<EdgeId> image) : image_(std::move(image))
{
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t e = 0; e < image_.size(); ++e) {
    EdgeId t = image_[e];
    if (t == no_edge)
      continue;
    if (t >= image_.size() || image_[t] == no_edge)
      throw Error("permutation image " + std::to_string(t) + " leaves the support");
    if (hit[t])
      throw Error("permutation is not injective at " + std::to_string(t));
    hit[t] = true;
  }
  while (!image_.empty() && image_.back() == no_edge)
    image_.pop_back();
}

Perm Perm::identity(const std::vector<EdgeId>& support)
{
  std::vector<EdgeId> image;
  for (EdgeId e : support) {
    if (e >= image.size())
      image.resize(e + 1, no_edge);
    image[e] = e;
  }
  return Perm(std::move(image));
}

std::vector<EdgeId> Perm::support() const
{
  std::vector<EdgeId> s;
  for (std::size_t e = 0; e < image_.size(); ++e)
    if (image_[e] != no_edge)
      s.push_back(static_cast<EdgeId>(e));
  return s;
}

Perm Perm::inverse() const
{
  std::vector<EdgeId> inv(image_.size(), no_edge);
  for (std::size_t e = 0; e < image_.size(); ++e)
    if (image_[e] != no_edge)
      inv[image_[e]] = static_cast<EdgeId>(e);
  Perm p;
  p.image_ = std::move(inv);
  return p;
}

std::vector<std::vector<EdgeId>> Perm::cycles() const
{
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (image_[s] == no_edge || seen[s])
      continue;
    std::vector<EdgeId> cyc;
    for (EdgeId e = static_cast<EdgeId>(s); !seen[e]; e = image_[e]) {
      seen[e] = true;
      cyc.push_back(e);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t Perm::cycle_count() const
{
  std::size_t n = 0;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (image_[s] == no_edge || seen[s])
      continue;
    ++n;
    for (EdgeId e = static_cast<EdgeId>(s); !seen[e]; e = image_[e])
      seen[e] = true;
  }
  return n;
}

std::vector<std::size_t> Perm::cycle_index() const
{
  std::vector<std::size_t> idx(image_.size(), static_cast<std::size_t>(-1));
  std::size_t n = 0;
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (image_[s] == no_edge || idx[s] != static_cast<std::size_t>(-1))
      continue;
    for (EdgeId e = static_cast<EdgeId>(s); idx[e] == static_cast<std::size_t>(-1);
         e = image_[e])
      idx[e] = n;
    ++n;
  }
  return idx;
}

bool operator==(const Perm& a, const Perm& b)
{
  // tables are trimmed of trailing no_edge, so equal maps have equal tables
  return a.image_ == b.image_;
}

Perm compose(const Perm& outer, const Perm& inner)
{
  std::vector<EdgeId> image(inner.universe(), no_edge);
  for (std::size_t e = 0; e < inner.universe(); ++e) {
    EdgeId m = inner(static_cast<EdgeId>(e));
    if (m == no_edge)
      continue;
    EdgeId t = outer(m);
    if (t == no_edge)
      throw Error("compose: supports differ");
    image[e] = t;
  }
  return Perm(std::move(image));
}

Perm perm_from_cycles(const std::vector<EdgeId>& support,
                      const std::vector<std::vector<EdgeId>>& cycles)
{
  EdgeId top = 0;
  for (EdgeId e : support)
    top = std::max(top, e + 1);
  std::vector<EdgeId> image(top, no_edge);
  for (EdgeId e : support)
    image[e] = e;
  std::vector<bool> used(top, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      EdgeId e = cyc[i];
      if (e >= top || image[e] == no_edge)
        throw Error("cycle entry " + std::to_string(e) + " is not in the support");
      if (used[e])
        throw Error("edge " + std::to_string(e) + " occurs twice in the cycle list");
      used[e] = true;
      image[e] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Perm(std::move(image));
}

} // namespace altdimap
