#ifndef ALTDIMAP_POLYNOMIAL_HPP
#define ALTDIMAP_POLYNOMIAL_HPP

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace altdimap {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Sparse polynomial in N indeterminates with arbitrary-precision integer
 * coefficients. Zero coefficients are never stored, so equality is
 * coefficient-wise. Terms iterate in graded-lex order: higher total degree
 * first, ties broken by the exponent of the first indeterminate, then the
 * second, and so on.
 */
template <std::size_t N>
class Polynomial {
public:
  using Exponents = std::array<unsigned, N>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
      const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
      const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
      if (da != db)
        return da > db;
      return a > b;
    }
  };
  using Terms = std::map<Exponents, Integer, GradedLex>;

  Polynomial() = default;
  Polynomial(long constant) { add_term(Exponents{}, Integer(constant)); }

  static Polynomial variable(std::size_t index)
  {
    Exponents e{};
    e.at(index) = 1;
    Polynomial p;
    p.add_term(e, 1);
    return p;
  }

  static Polynomial monomial(const Exponents& e, const Integer& c)
  {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Exponents& e) const
  {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o)
  {
    for (const auto& [e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o)
  {
    for (const auto& [e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o)
  {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < N; ++i)
          e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b)
  {
    return a.terms_ == b.terms_;
  }

  /** Substitutes values for the indeterminates in any commutative ring. */
  template <class R>
  R evaluate(const std::array<R, N>& at) const
  {
    R sum(0);
    for (const auto& [e, c] : terms_) {
      R term(static_cast<R>(c));
      for (std::size_t i = 0; i < N; ++i)
        for (unsigned k = 0; k < e[i]; ++k)
          term = term * at[i];
      sum = sum + term;
    }
    return sum;
  }

  /** Formats as e.g. "x^2 + x + y" or "3*x*y - 2". */
  std::string to_string(const std::array<std::string_view, N>& names) const
  {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;

      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0)
          continue;
        if (!mono.empty())
          mono += '*';
        mono += names[i];
        if (e[i] > 1)
          mono += '^' + std::to_string(e[i]);
      }
      if (mono.empty())
        out += mag.str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.str() + '*' + mono;
    }
    return out;
  }

private:
  void add_term(const Exponents& e, const Integer& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Terms terms_;
};

/** Tutte-style polynomials in x, y. */
using Poly2 = Polynomial<2>;
/** Univariate polynomials in x. */
using Poly1 = Polynomial<1>;
/** Symbolic simple-invariant values in w, x, y, z. */
using Poly4 = Polynomial<4>;

inline std::string to_string(const Poly2& p) { return p.to_string({"x", "y"}); }
inline std::string to_string(const Poly1& p) { return p.to_string({"x"}); }
inline std::string to_string(const Poly4& p) { return p.to_string({"w", "x", "y", "z"}); }

} // namespace altdimap

#endif
