#ifndef ALTDIMAP_MU_HPP
#define ALTDIMAP_MU_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace altdimap {

/** An element of the cyclic group {1, w, w^2}, stored as its exponent. */
enum class Mu : std::uint8_t { one = 0, omega = 1, omega2 = 2 };

inline constexpr std::array<Mu, 3> all_mu{Mu::one, Mu::omega, Mu::omega2};

constexpr int exponent(Mu m) noexcept { return static_cast<int>(m); }

constexpr Mu mu_from_exponent(int k) noexcept
{
  return static_cast<Mu>(((k % 3) + 3) % 3);
}

constexpr Mu operator*(Mu a, Mu b) noexcept
{
  return mu_from_exponent(exponent(a) + exponent(b));
}

constexpr Mu inverse(Mu m) noexcept { return mu_from_exponent(-exponent(m)); }

constexpr std::string_view to_string(Mu m) noexcept
{
  switch (m) {
  case Mu::one: return "1";
  case Mu::omega: return "w";
  case Mu::omega2: return "w2";
  }
  return "?";
}

/** Accepts 1, w, w2 (and the spellings omega, omega2). Throws Error. */
Mu parse_mu(std::string_view text);

} // namespace altdimap

#endif
