#ifndef ALTDIMAP_PERM_HPP
#define ALTDIMAP_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace altdimap {

using EdgeId = std::uint32_t;
inline constexpr EdgeId no_edge = std::numeric_limits<EdgeId>::max();

/**
 * A bijection on a finite set of edge ids. Stored as a dense image table
 * over [0, universe); ids outside the support map to no_edge.
 */
class Perm {
public:
  Perm() = default;

  /** Throws Error unless image is a bijection on its non-no_edge entries. */
  explicit Perm(std::vector<EdgeId> image);

  static Perm identity(const std::vector<EdgeId>& support);

  EdgeId operator()(EdgeId e) const
  {
    return e < image_.size() ? image_[e] : no_edge;
  }

  bool contains(EdgeId e) const { return (*this)(e) != no_edge; }
  std::size_t universe() const noexcept { return image_.size(); }
  std::vector<EdgeId> support() const;
  const std::vector<EdgeId>& table() const noexcept { return image_; }

  Perm inverse() const;

  /** Each cycle starts at its least element; cycles ordered by that element. */
  std::vector<std::vector<EdgeId>> cycles() const;
  std::size_t cycle_count() const;

  /** For each id in the support, the index of its cycle in cycles(). */
  std::vector<std::size_t> cycle_index() const;

  friend bool operator==(const Perm& a, const Perm& b);

private:
  std::vector<EdgeId> image_;
};

/** The composite e -> outer(inner(e)); supports must agree. */
Perm compose(const Perm& outer, const Perm& inner);

/** Builds a permutation on `support` from disjoint cycles; omitted ids are fixed. */
Perm perm_from_cycles(const std::vector<EdgeId>& support,
                      const std::vector<std::vector<EdgeId>>& cycles);

} // namespace altdimap

#endif
