#ifndef ALTDIMAP_BINFN_HPP
#define ALTDIMAP_BINFN_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace altdimap {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/** exp(2 pi i / 3). */
Complex omega_scalar();

/**
 * A complex function on the subsets of an ordered ground set, stored as
 * 2^m values; bit i of an index marks element i. Values are not forced to
 * be normalized: transforms generally move the empty-set entry.
 */
class BinFn {
public:
  /** The one-entry function 1 on the empty ground set. */
  BinFn();
  /** Ground labels default to e0, e1, ... */
  explicit BinFn(std::vector<Complex> values);
  /** Throws Error unless values has 2^ground.size() entries. */
  BinFn(std::vector<std::string> ground, std::vector<Complex> values);

  std::size_t dimension() const noexcept { return ground_.size(); }
  const std::vector<std::string>& ground() const noexcept { return ground_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  std::vector<Complex>& values() noexcept { return values_; }
  Complex operator[](std::size_t subset) const { return values_[subset]; }

  /** |f(empty) - 1| <= tol. */
  bool is_normalized(double tol = 0) const;
  /** Divides by the empty-set entry; throws Error if it is zero. */
  BinFn normalized() const;

private:
  std::vector<std::string> ground_;
  std::vector<Complex> values_;
};

Matrix2 mu_matrix(Complex mu);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
/** Largest entry-wise modulus of a - b. */
double max_abs_diff(const Matrix2& a, const Matrix2& b);
/** Roots of the characteristic polynomial. */
std::array<Complex, 2> eigenvalues(const Matrix2& m);

/** (1 + mu) / (sqrt2 + 1 - (sqrt2 - 1) mu); throws Error at the pole. */
Complex minor_lambda(Complex mu);

/** M(mu)^{(x) m} f by one in-place 2x2 sweep per element, O(m 2^m). */
BinFn transform(const BinFn& f, Complex mu);
void transform_in_place(std::vector<Complex>& values, std::size_t m, Complex mu);

/**
 * Collapses element e by the row (1, lambda(mu)) and rescales so the
 * empty-set entry is 1. Throws Error when that entry is zero.
 */
BinFn bf_minor(const BinFn& f, std::size_t e, Complex mu);

/**
 * Indicator of the GF(2) rowspace of a 0/1 matrix with m columns, labeled
 * by `labels` (default e0, e1, ...). Throws Error on a row of the wrong
 * length, an entry other than 0 or 1, or a label list of the wrong size.
 */
BinFn indicator_from_gf2(const std::vector<std::vector<int>>& rows, std::size_t m,
                         std::vector<std::string> labels = {});

/** The k-fold tensor power of (1, sqrt2 - 1). */
BinFn ultraloop_bf(std::size_t k);

/** Ground sets concatenate; f's elements take the low bits. */
BinFn tensor(const BinFn& f, const BinFn& g);

/**
 * f ~ c g for a nonzero c chosen from g's largest entry, within
 * tol * max(1, |f|_inf). Throws Error on differing dimensions or zero g.
 */
bool proportional_eq(const BinFn& f, const BinFn& g, double tol);

/**
 * The normalized f on one more element whose [mu]-minors, for every
 * element and mu in {1, w, w2}, are all proportional to u. Each entry
 * comes from f(X) = f(X with i set to 0) u(X without i) for some i, then
 * every minor is checked. A one-element f is not pinned by its minors;
 * the trinity-fixed (1, sqrt2 - 1) is returned. Throws Error if u is not
 * normalized or the check fails.
 */
BinFn solve_uniform_reduction(const BinFn& u, double tol = 1e-9);

} // namespace altdimap

#endif
