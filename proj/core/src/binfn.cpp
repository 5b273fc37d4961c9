#include "altdimap/binfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "altdimap/error.hpp"

namespace altdimap {

namespace {

const double sqrt2 = std::numbers::sqrt2;

std::vector<std::string> default_ground(std::size_t m)
{
  std::vector<std::string> g;
  for (std::size_t i = 0; i < m; ++i)
    g.push_back("e" + std::to_string(i));
  return g;
}

std::size_t log2_exact(std::size_t n)
{
  std::size_t m = 0;
  while ((std::size_t{1} << m) < n)
    ++m;
  if ((std::size_t{1} << m) != n)
    throw Error("binary function length " + std::to_string(n) + " is not a power of two");
  return m;
}

/** Drops bit i from x, shifting the higher bits down. */
std::size_t remove_bit(std::size_t x, std::size_t i)
{
  const std::size_t low = x & ((std::size_t{1} << i) - 1);
  return low | ((x >> (i + 1)) << i);
}

double inf_norm(const std::vector<Complex>& v)
{
  double m = 0;
  for (const Complex& c : v)
    m = std::max(m, std::abs(c));
  return m;
}

} // namespace

Complex omega_scalar() { return std::polar(1.0, 2 * std::numbers::pi / 3); }

BinFn::BinFn() : values_{Complex(1)} {}

BinFn::BinFn(std::vector<Complex> values)
    : ground_(default_ground(log2_exact(values.size()))), values_(std::move(values))
{
}

BinFn::BinFn(std::vector<std::string> ground, std::vector<Complex> values)
    : ground_(std::move(ground)), values_(std::move(values))
{
  if (ground_.size() >= 8 * sizeof(std::size_t) ||
      values_.size() != std::size_t{1} << ground_.size())
    throw Error("binary function on " + std::to_string(ground_.size()) +
                " elements needs 2^m values, got " + std::to_string(values_.size()));
}

bool BinFn::is_normalized(double tol) const
{
  return std::abs(values_[0] - Complex(1)) <= tol;
}

BinFn BinFn::normalized() const
{
  if (values_[0] == Complex(0))
    throw Error("cannot normalize: the empty-set entry is zero");
  BinFn r = *this;
  const Complex c = values_[0];
  for (Complex& v : r.values_)
    v /= c;
  return r;
}

Matrix2 mu_matrix(Complex mu)
{
  const double s = 1 / (2 * sqrt2);
  return {{{s * (sqrt2 + 1 + (sqrt2 - 1) * mu), s * (1.0 - mu)},
           {s * (1.0 - mu), s * (sqrt2 - 1 + (sqrt2 + 1) * mu)}}};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b)
{
  Matrix2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

double max_abs_diff(const Matrix2& a, const Matrix2& b)
{
  double m = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

std::array<Complex, 2> eigenvalues(const Matrix2& m)
{
  const Complex tr = m[0][0] + m[1][1];
  const Complex det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

Complex minor_lambda(Complex mu)
{
  const Complex den = sqrt2 + 1 - (sqrt2 - 1) * mu;
  if (std::abs(den) < 1e-14)
    throw Error("minor parameter is at the pole of lambda");
  return (1.0 + mu) / den;
}

void transform_in_place(std::vector<Complex>& v, std::size_t m, Complex mu)
{
  const Matrix2 M = mu_matrix(mu);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t base = 0; base < v.size(); base += 2 * bit)
      for (std::size_t x = base; x < base + bit; ++x) {
        const Complex a = v[x];
        const Complex b = v[x | bit];
        v[x] = M[0][0] * a + M[0][1] * b;
        v[x | bit] = M[1][0] * a + M[1][1] * b;
      }
  }
}

BinFn transform(const BinFn& f, Complex mu)
{
  BinFn r = f;
  transform_in_place(r.values(), f.dimension(), mu);
  return r;
}

BinFn bf_minor(const BinFn& f, std::size_t e, Complex mu)
{
  const std::size_t m = f.dimension();
  if (e >= m)
    throw Error("element " + std::to_string(e) + " is outside the ground set");
  const Complex lambda = minor_lambda(mu);
  const std::size_t bit = std::size_t{1} << e;

  std::vector<Complex> raw(std::size_t{1} << (m - 1));
  for (std::size_t x = 0; x < f.values().size(); ++x)
    if (!(x & bit))
      raw[remove_bit(x, e)] = f[x] + lambda * f[x | bit];

  if (std::abs(raw[0]) <= 1e-12 * std::max(1.0, inf_norm(raw)))
    throw Error("minor has a zero empty-set entry");
  const Complex c = raw[0];
  for (Complex& v : raw)
    v /= c;

  std::vector<std::string> ground = f.ground();
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(e));
  return BinFn(std::move(ground), std::move(raw));
}

BinFn indicator_from_gf2(const std::vector<std::vector<int>>& rows, std::size_t m,
                         std::vector<std::string> labels)
{
  if (m >= 8 * sizeof(std::size_t))
    throw Error("too many columns");
  if (labels.empty())
    labels = default_ground(m);
  if (labels.size() != m)
    throw Error("GF(2) matrix has " + std::to_string(m) + " columns but " +
                std::to_string(labels.size()) + " labels");
  std::vector<std::size_t> masks;
  for (const auto& row : rows) {
    if (row.size() != m)
      throw Error("GF(2) row has " + std::to_string(row.size()) + " entries, expected " +
                  std::to_string(m));
    std::size_t mask = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] != 0 && row[j] != 1)
        throw Error("GF(2) entries must be 0 or 1");
      if (row[j])
        mask |= std::size_t{1} << j;
    }
    masks.push_back(mask);
  }

  std::vector<Complex> values(std::size_t{1} << m, Complex(0));
  std::vector<std::size_t> span = {0};
  for (std::size_t r : masks) {
    if (std::find(span.begin(), span.end(), r) != span.end())
      continue;
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i)
      span.push_back(span[i] ^ r);
  }
  for (std::size_t x : span)
    values[x] = 1;
  return BinFn(std::move(labels), std::move(values));
}

BinFn ultraloop_bf(std::size_t k)
{
  BinFn r;
  const BinFn one(std::vector<Complex>{1, sqrt2 - 1});
  for (std::size_t i = 0; i < k; ++i)
    r = tensor(r, one);
  return r;
}

BinFn tensor(const BinFn& f, const BinFn& g)
{
  const std::size_t mf = f.dimension();
  std::vector<Complex> values(f.values().size() * g.values().size());
  for (std::size_t y = 0; y < g.values().size(); ++y)
    for (std::size_t x = 0; x < f.values().size(); ++x)
      values[x | (y << mf)] = f[x] * g[y];
  std::vector<std::string> ground = f.ground();
  ground.insert(ground.end(), g.ground().begin(), g.ground().end());
  return BinFn(std::move(ground), std::move(values));
}

bool proportional_eq(const BinFn& f, const BinFn& g, double tol)
{
  if (f.dimension() != g.dimension())
    throw Error("proportional_eq: dimensions differ");
  const auto& gv = g.values();
  const auto& fv = f.values();
  std::size_t k = 0;
  for (std::size_t i = 1; i < gv.size(); ++i)
    if (std::abs(gv[i]) > std::abs(gv[k]))
      k = i;
  if (gv[k] == Complex(0))
    throw Error("proportional_eq: second function is identically zero");
  const Complex c = fv[k] / gv[k];
  if (c == Complex(0))
    return false;
  double err = 0;
  for (std::size_t i = 0; i < fv.size(); ++i)
    err = std::max(err, std::abs(fv[i] - c * gv[i]));
  return err <= tol * std::max(1.0, inf_norm(fv));
}

BinFn solve_uniform_reduction(const BinFn& u, double tol)
{
  if (!u.is_normalized(tol))
    throw Error("solve_uniform_reduction: u is not normalized");
  const std::size_t k = u.dimension();
  if (k == 0)
    return ultraloop_bf(1);

  const std::size_t n = std::size_t{1} << (k + 1);
  const std::size_t full = n - 1;
  std::vector<Complex> f(n);
  for (std::size_t x = 0; x < full; ++x) {
    std::size_t i = 0;
    while (x & (std::size_t{1} << i))
      ++i;
    f[x] = u[remove_bit(x, i)];
  }
  // element 1 is outside {0}, so f({0}) is already set
  f[full] = f[1] * u[remove_bit(full, 0)];

  BinFn result(std::move(f));
  const Complex mus[] = {Complex(1), omega_scalar(), omega_scalar() * omega_scalar()};
  for (std::size_t i = 0; i <= k; ++i)
    for (const Complex& mu : mus) {
      bool ok = false;
      try {
        ok = proportional_eq(bf_minor(result, i, mu), u, tol);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok)
        throw Error("solve_uniform_reduction: no binary function reduces uniformly to u "
                    "(minor at element " + std::to_string(i) + " fails)");
    }
  return result;
}

} // namespace altdimap
