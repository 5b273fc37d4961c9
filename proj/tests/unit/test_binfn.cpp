#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "altdimap/binfn.hpp"
#include "altdimap/error.hpp"
#include "oracles.hpp"

using namespace altdimap;

namespace {

const double s2 = std::sqrt(2.0);
const Complex w = omega_scalar();

BinFn random_fn(std::size_t m, std::mt19937& rng)
{
  std::normal_distribution<double> nd;
  std::vector<Complex> v(std::size_t{1} << m);
  for (auto& x : v)
    x = {nd(rng), nd(rng)};
  return BinFn(std::move(v));
}

Complex random_scalar(std::mt19937& rng)
{
  std::normal_distribution<double> nd;
  return {nd(rng), nd(rng)};
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

} // namespace

TEST(MuMatrix, SpecialValues)
{
  const Matrix2 id{{{1, 0}, {0, 1}}};
  EXPECT_LT(max_abs_diff(mu_matrix(1), id), 1e-12);
  const double h = 1 / s2;
  const Matrix2 hadamard{{{h, h}, {h, -h}}};
  EXPECT_LT(max_abs_diff(mu_matrix(-1), hadamard), 1e-12);
}

TEST(MuMatrix, Multiplicative)
{
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Complex a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_LT(max_abs_diff(mu_matrix(a) * mu_matrix(b), mu_matrix(a * b)), 1e-10);
  }
}

TEST(MuMatrix, TrinityEigenvalues)
{
  auto ev = eigenvalues(mu_matrix(w));
  const bool order = std::abs(ev[0] - 1.0) < std::abs(ev[1] - 1.0);
  const Complex one = order ? ev[0] : ev[1];
  const Complex other = order ? ev[1] : ev[0];
  EXPECT_LT(std::abs(one - 1.0), 1e-10);
  EXPECT_LT(std::abs(other - w), 1e-10);
}

TEST(Lambda, Values)
{
  EXPECT_LT(std::abs(minor_lambda(1) - 1.0), 1e-15);
  EXPECT_LT(std::abs(minor_lambda(-1)), 1e-15);
  EXPECT_THROW(minor_lambda((s2 + 1) / (s2 - 1)), Error);
}

TEST(Transform, IdentityAndNaive)
{
  std::mt19937 rng(2);
  for (std::size_t m = 0; m <= 4; ++m) {
    const BinFn f = random_fn(m, rng);
    EXPECT_LT(max_diff(transform(f, 1).values(), f.values()), 1e-12);
    for (Complex mu : {Complex(-1), w, w * w, random_scalar(rng)})
      EXPECT_LT(max_diff(transform(f, mu).values(), oracle::naive_kronecker(f, mu)), 1e-12);
  }
}

TEST(Transform, Composition)
{
  std::mt19937 rng(3);
  for (std::size_t m = 1; m <= 10; ++m) {
    const BinFn f = random_fn(m, rng);
    const Complex a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_TRUE(proportional_eq(transform(transform(f, b), a), transform(f, a * b), 1e-10));
    EXPECT_TRUE(proportional_eq(transform(transform(transform(f, w), w), w), f, 1e-9));
  }
}

TEST(Transform, UltraloopFixedByTrinity)
{
  const BinFn u = ultraloop_bf(1);
  const BinFn t = transform(u, w);
  EXPECT_TRUE(proportional_eq(t, u, 1e-12));
  // the scale is exactly 1: the vector is an eigenvector for eigenvalue 1
  EXPECT_LT(max_diff(t.values(), u.values()), 1e-12);
}

TEST(Minor, LambdaOneAndZero)
{
  const BinFn f(std::vector<Complex>{1, 2, 3, 5});
  const BinFn plus = bf_minor(f, 0, 1);
  EXPECT_LT(std::abs(plus[1] - Complex(8.0 / 3)), 1e-12); // (3+5)/(1+2)
  const BinFn avoid = bf_minor(f, 0, -1);
  EXPECT_LT(std::abs(avoid[1] - Complex(3)), 1e-12);
  EXPECT_EQ(plus.ground(), std::vector<std::string>{"e1"});
}

TEST(Minor, Errors)
{
  const BinFn f(std::vector<Complex>{1, -1, 0, 0});
  EXPECT_THROW(bf_minor(f, 0, 1), Error); // f(0) + f(e) = 0
  EXPECT_THROW(bf_minor(f, 2, 1), Error);
}

TEST(Minor, CompatibleWithTransform)
{
  std::mt19937 rng(4);
  for (std::size_t m = 1; m <= 8; ++m) {
    const BinFn f = random_fn(m, rng);
    const Complex a = random_scalar(rng), b = random_scalar(rng);
    const std::size_t e = rng() % m;
    EXPECT_TRUE(proportional_eq(bf_minor(transform(f, a), e, b / a),
                                transform(bf_minor(f, e, b), a), 1e-9));
  }
}

TEST(Minor, DistinctElementsCommute)
{
  std::mt19937 rng(5);
  for (std::size_t m = 2; m <= 8; ++m) {
    const BinFn f = random_fn(m, rng);
    const std::size_t e = rng() % m;
    std::size_t g = rng() % (m - 1);
    if (g >= e)
      ++g;
    const Complex a = random_scalar(rng), b = random_scalar(rng);
    // after removing e, element g shifts down if it was above e
    const BinFn eg = bf_minor(bf_minor(f, e, a), g > e ? g - 1 : g, b);
    const BinFn ge = bf_minor(bf_minor(f, g, b), e > g ? e - 1 : e, a);
    EXPECT_TRUE(proportional_eq(eg, ge, 1e-10));
  }
}

TEST(Gf2, Indicators)
{
  const BinFn empty = indicator_from_gf2({}, 2);
  EXPECT_EQ(empty.values(), (std::vector<Complex>{1, 0, 0, 0}));
  const BinFn pair = indicator_from_gf2({{1, 1}}, 2);
  EXPECT_EQ(pair.values(), (std::vector<Complex>{1, 0, 0, 1}));
  EXPECT_THROW(indicator_from_gf2({{1, 2}}, 2), Error);
  EXPECT_THROW(indicator_from_gf2({{1}}, 2), Error);
  EXPECT_EQ(indicator_from_gf2({}, 2, {"p", "q"}).ground(), (std::vector<std::string>{"p", "q"}));
}

TEST(Gf2, HadamardDuality)
{
  // rowspace of N against its orthogonal complement
  const std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> cases = {
      {{{1, 0, 1}, {1, 1, 0}}, {{1, 1, 1}}},
      {{{1, 1, 0, 0}}, {{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {{}, {{1, 0}, {0, 1}}},
      {{{1, 0, 1, 1}, {0, 1, 1, 0}}, {{0, 1, 1, 1}, {1, 0, 0, 1}}},
  };
  for (const auto& [rows, dual] : cases) {
    const std::size_t m = rows.empty() ? dual[0].size() : rows[0].size();
    const BinFn f = indicator_from_gf2(rows, m);
    EXPECT_TRUE(proportional_eq(transform(f, -1), indicator_from_gf2(dual, m), 1e-10));
  }
}

TEST(Gf2, DeletionAndContraction)
{
  // cutset space of the triangle; [1] at an edge deletes it, [-1] contracts
  const BinFn cut = indicator_from_gf2({{1, 0, 1}, {1, 1, 0}}, 3);
  const BinFn path = indicator_from_gf2({{1, 0}, {0, 1}}, 2);
  const BinFn digon = indicator_from_gf2({{1, 1}}, 2);
  EXPECT_TRUE(proportional_eq(bf_minor(cut, 0, 1), path, 1e-12));
  EXPECT_TRUE(proportional_eq(bf_minor(cut, 0, -1), digon, 1e-12));
}

TEST(Ultraloop, TensorPowers)
{
  EXPECT_EQ(ultraloop_bf(0).values(), std::vector<Complex>{1});
  const BinFn u2 = ultraloop_bf(2);
  EXPECT_LT(std::abs(u2[1] - (s2 - 1)), 1e-15);
  EXPECT_LT(std::abs(u2[2] - (s2 - 1)), 1e-15);
  EXPECT_LT(std::abs(u2[3] - (s2 - 1) * (s2 - 1)), 1e-15);
  EXPECT_EQ(tensor(ultraloop_bf(1), ultraloop_bf(2)).values(), ultraloop_bf(3).values());
}

TEST(Ultraloop, EveryMinorIsAnUltraloop)
{
  for (std::size_t k = 0; k <= 5; ++k) {
    const BinFn f = ultraloop_bf(k + 1);
    for (std::size_t e = 0; e <= k; ++e)
      for (Complex mu : {Complex(1), w, w * w})
        EXPECT_TRUE(proportional_eq(bf_minor(f, e, mu), ultraloop_bf(k), 1e-12));
  }
}

TEST(Tensor, KroneckerRule)
{
  const BinFn f(std::vector<Complex>{1, 2});
  const BinFn g(std::vector<Complex>{1, 3, 5, 7});
  const BinFn t = tensor(f, g);
  EXPECT_EQ(t.dimension(), 3u);
  EXPECT_EQ(t[0b101], Complex(2 * 5));
  EXPECT_EQ(t[0b110], Complex(1 * 7));
}

TEST(Proportional, Basics)
{
  std::mt19937 rng(6);
  const BinFn f = random_fn(3, rng);
  BinFn twice = f;
  for (auto& v : twice.values())
    v *= 2.0;
  EXPECT_TRUE(proportional_eq(f, twice, 1e-12));
  BinFn moved = f;
  moved.values()[3] += 10.0;
  EXPECT_FALSE(proportional_eq(f, moved, 1e-12));
  EXPECT_THROW(proportional_eq(f, ultraloop_bf(2), 1e-12), Error);
  EXPECT_THROW(proportional_eq(f, BinFn(std::vector<Complex>(8, 0)), 1e-12), Error);
}

TEST(Proportional, TrinityCube)
{
  std::mt19937 rng(8);
  const BinFn f = random_fn(6, rng);
  EXPECT_TRUE(proportional_eq(transform(transform(transform(f, w), w), w), f, 1e-9));
}

TEST(Solve, UltraloopChain)
{
  EXPECT_LT(max_diff(solve_uniform_reduction(BinFn()).values(), ultraloop_bf(1).values()), 1e-12);
  for (std::size_t k = 0; k <= 6; ++k)
    EXPECT_TRUE(proportional_eq(solve_uniform_reduction(ultraloop_bf(k)), ultraloop_bf(k + 1), 1e-9));
}

TEST(Solve, IndicatorOfEmptySet)
{
  const BinFn u(std::vector<Complex>{1, 0});
  const BinFn f = solve_uniform_reduction(u);
  EXPECT_EQ(f.values(), (std::vector<Complex>{1, 0, 0, 0}));
}

TEST(Solve, Infeasible)
{
  EXPECT_THROW(solve_uniform_reduction(BinFn(std::vector<Complex>{2, 1})), Error);
  std::mt19937 rng(9);
  BinFn u = random_fn(2, rng).normalized();
  EXPECT_THROW(solve_uniform_reduction(u), Error);
}

TEST(BinFnType, Validation)
{
  EXPECT_THROW(BinFn(std::vector<Complex>{1, 2, 3}), Error);
  EXPECT_THROW(BinFn({"a"}, {1, 2, 3, 4}), Error);
  EXPECT_TRUE(BinFn().is_normalized());
  EXPECT_THROW(BinFn(std::vector<Complex>{0, 1}).normalized(), Error);
}
