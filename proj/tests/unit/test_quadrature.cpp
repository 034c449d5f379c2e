#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pompeiu/error.hpp"
#include "pompeiu/quadrature.hpp"

namespace pompeiu {
namespace {

TEST(GaussLegendre, ExactForPolynomials) {
  for (int n : {1, 2, 5, 16, 64, 512}) {
    const auto& g = gauss_legendre(n);
    ASSERT_EQ(g.nodes.size(), static_cast<std::size_t>(n));
    for (int p = 0; p <= std::min(2 * n - 1, 40); ++p) {
      long double s = 0;
      for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(static_cast<long double>(g.nodes[i]), p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      EXPECT_NEAR(static_cast<double>(s), exact, 1e-14) << "n=" << n << " p=" << p;
    }
  }
  EXPECT_EQ(&gauss_legendre(16), &gauss_legendre(16));
  EXPECT_THROW((void)gauss_legendre(0), Error);
}

TEST(Integrate, VolumesAndMoments) {
  const auto one = [](const Point&) { return Complex(1); };
  const std::vector<EuclideanSet> sets{
      EuclideanSet::ball(2, 1.3, {0.2, -1, 0}),
      EuclideanSet::annulus(2, 1, 2),
      EuclideanSet::ball(3, 0.7, {1, 1, 1}),
      EuclideanSet::annulus(3, 0.5, 1),
      EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}),
      EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
      EuclideanSet::polytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}),
  };
  for (const auto& s : sets) {
    const auto r = integrate(s, one);
    EXPECT_NEAR(r.value.real(), s.volume(), 1e-12 * s.volume()) << s.kind();
  }
  const auto disk = EuclideanSet::ball(2, 1);
  EXPECT_NEAR(integrate(disk, [](const Point& x) { return Complex(x[0] * x[0]); }).value.real(), std::numbers::pi / 4,
              1e-12);
  const auto cube = sets[6];
  EXPECT_NEAR(integrate(cube, [](const Point& x) { return Complex(x[0] * x[1] * x[2]); }).value.real(), 0.125, 1e-13);
  const auto ball = EuclideanSet::ball(3, 1);
  EXPECT_NEAR(integrate(ball, [](const Point& x) { return Complex(x[2] * x[2]); }).value.real(),
              4 * std::numbers::pi / 15, 1e-12);
}

TEST(Integrate, NonConvergenceIsReported) {
  const auto square = EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  QuadratureOptions opts;
  opts.max_order_2d = 32;
  try {
    (void)integrate(square, [](const Point& x) { return std::exp(Complex(0, 400 * x[0])); }, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuadratureNotConverged);
  }
}

}  // namespace
}  // namespace pompeiu
