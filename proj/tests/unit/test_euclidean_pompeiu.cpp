#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "pompeiu/bessel.hpp"
#include "pompeiu/error.hpp"
#include "pompeiu/euclidean_pompeiu.hpp"
#include "pompeiu/fourier_laplace.hpp"

namespace pompeiu {
namespace {

// Positive zeros of J_1 below 20.
const std::vector<double> kJ1Zeros{3.8317059702075123, 7.0155866698156188, 10.173468135062722,
                                   13.323691936314223, 16.470630050877633, 19.615858510468243};
// Positive roots of tan x = x below 15 (zeros of the spherical Bessel j_1).
const std::vector<double> kJ1SphericalZeros{4.4934094579090642, 7.7252518369377072, 10.904121659428899,
                                            14.066193912831473};

EuclideanSet unit_disk() { return EuclideanSet::ball(2, 1); }
EuclideanSet unit_square() { return EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}); }
EuclideanSet unit_triangle() { return EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}); }

double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200 && b - a > 1e-14; ++i) {
    const double m = (a + b) / 2, fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return (a + b) / 2;
}

TEST(OrbitDirections, UnitAndCounted) {
  for (int dim : {2, 3}) {
    const auto dirs = rotation_orbit_directions(dim);
    EXPECT_EQ(dirs.size(), dim == 2 ? kDefaultRotations2d : kDefaultRotations3d);
    for (const auto& d : dirs) EXPECT_NEAR(norm(d, dim), 1.0, 1e-14);
  }
  EXPECT_EQ(rotation_orbit_directions(2, 10).size(), 10u);
}

TEST(ComplexSphereVanishes, Examples) {
  const auto disk = unit_disk();
  const auto hit = complex_sphere_vanishes(disk, kJ1Zeros[0]);
  EXPECT_TRUE(hit.vanishes);
  EXPECT_LT(hit.max_magnitude, 1e-12);
  const auto miss = complex_sphere_vanishes(disk, 3.0);
  EXPECT_FALSE(miss.vanishes);
  EXPECT_NEAR(miss.max_magnitude, 2 * std::numbers::pi * std::abs(std::cyl_bessel_j(1.0, 3.0)) / 3.0, 1e-13);
  EXPECT_NEAR(miss.threshold, 1e-6 * std::numbers::pi, 1e-18);
  for (double l : {1.0, 2.5, 7.1}) EXPECT_FALSE(complex_sphere_vanishes(unit_square(), l, 64).vanishes) << l;
  try {
    (void)complex_sphere_vanishes(disk, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LambdaZero);
  }
}

TEST(ComplexSphereVanishes, OffCentreDiskStillVanishes) {
  const auto disk = EuclideanSet::ball(2, 1, {2.5, -1, 0});
  EXPECT_TRUE(complex_sphere_vanishes(disk, kJ1Zeros[2]).vanishes);
}

TEST(FindFailureLambdas, UnitDisk) {
  const auto roots = find_failure_lambdas(unit_disk(), 0, 20);
  ASSERT_EQ(roots.size(), kJ1Zeros.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    EXPECT_NEAR(roots[i], kJ1Zeros[i], 1e-10);
    EXPECT_NEAR(roots[i], bisect([](double x) { return std::cyl_bessel_j(1.0, x); }, kJ1Zeros[i] - 0.1, kJ1Zeros[i] + 0.1),
                1e-10);
    EXPECT_TRUE(complex_sphere_vanishes(unit_disk(), roots[i]).vanishes);
  }
}

TEST(FindFailureLambdas, DilationCovariance) {
  const auto r1 = find_failure_lambdas(unit_disk(), 0, 20);
  const auto r2 = find_failure_lambdas(EuclideanSet::ball(2, 2), 0, 10);
  ASSERT_EQ(r1.size(), r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) EXPECT_NEAR(r2[i], r1[i] / 2, 1e-10);
}

TEST(FindFailureLambdas, Annulus) {
  const auto ring = EuclideanSet::annulus(2, 1, 2);
  const auto roots = find_failure_lambdas(ring, 0, 20);
  auto profile = [](double l) { return 2 * std::cyl_bessel_j(1.0, 2 * l) - std::cyl_bessel_j(1.0, l); };
  std::vector<double> expected;
  for (double a = 0.05; a < 20; a += 0.01) {
    if ((profile(a) < 0) != (profile(a + 0.01) < 0)) expected.push_back(bisect(profile, a, a + 0.01));
  }
  ASSERT_EQ(roots.size(), expected.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    EXPECT_NEAR(roots[i], expected[i], 1e-9);
    EXPECT_NEAR(radial_profile(ring, roots[i]), 0.0, 1e-10);
  }
}

TEST(FindFailureLambdas, Ball3d) {
  const auto roots = find_failure_lambdas(EuclideanSet::ball(3, 1), 0, 15);
  ASSERT_EQ(roots.size(), kJ1SphericalZeros.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    EXPECT_NEAR(roots[i], kJ1SphericalZeros[i], 1e-10);
    EXPECT_NEAR(std::tan(roots[i]), roots[i], 1e-7);
  }
}

TEST(FindFailureLambdas, RejectsNonRadial) {
  try {
    (void)find_failure_lambdas(unit_square(), 0, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonRadial);
  }
}

TEST(RadialProfile, DerivativeMatchesFiniteDifference) {
  for (const auto& s : {unit_disk(), EuclideanSet::annulus(2, 1, 2), EuclideanSet::ball(3, 1.5)}) {
    for (double l = 0.3; l < 15; l += 0.7) {
      const double h = 1e-5;
      const double fd = (radial_profile(s, l + h) - radial_profile(s, l - h)) / (2 * h);
      EXPECT_NEAR(radial_profile_derivative(s, l), fd, 1e-7);
    }
  }
}

TEST(ConvolutionTest, Examples) {
  const auto samples = default_sample_points(2, 25, 3.0);
  ASSERT_EQ(samples.size(), 25u);
  for (const auto& p : samples) EXPECT_LE(norm(p, 2), 3.0 + 1e-12);
  EXPECT_LT(convolution_test(unit_disk(), kJ1Zeros[0], samples), 1e-6);
  EXPECT_GT(convolution_test(unit_disk(), 3.0, samples), 1e-2);
  for (const auto& s : {unit_disk(), unit_square(), EuclideanSet::ball(3, 1)}) {
    const auto pts = default_sample_points(s.dim(), 5, 2.0);
    EXPECT_NEAR(convolution_test(s, 0.0, pts), s.volume(), 1e-10);
  }
}

TEST(RandomMotions, DeterministicAndValid) {
  const auto a = random_motions(3, 50, 7), b = random_motions(3, 50, 7), c = random_motions(3, 50, 8);
  ASSERT_EQ(a.size(), 50u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(a[i].translation()[k], b[i].translation()[k]);
      EXPECT_LE(std::abs(a[i].translation()[k]), 3.0);
      differs = differs || a[i].translation()[k] != c[i].translation()[k];
    }
  }
  EXPECT_TRUE(differs);
  const auto m = random_motions(2, 10, 1);
  for (const auto& x : m) EXPECT_EQ(x.translation()[2], 0.0);
}

TEST(IntegralCheck, Examples) {
  const auto motions = random_motions(2, 100, 42);
  EXPECT_LT(pompeiu_integral_check(unit_disk(), kJ1Zeros[0], motions).max(), 1e-6);
  EXPECT_GT(pompeiu_integral_check(unit_disk(), 3.0, motions).max(), 1e-2);
  const std::vector<RigidMotion> identity{RigidMotion(2)};
  const auto r = pompeiu_integral_check(unit_square(), 0.0, identity);
  EXPECT_NEAR(r.max_spherical, 1.0, 1e-12);
  EXPECT_NEAR(r.max_plane_wave, 1.0, 1e-12);
}

TEST(EuclidDecide, UnitDisk) {
  EuclidOptions opts;
  opts.seed = 7;
  const auto r = euclid_decide(unit_disk(), opts);
  EXPECT_EQ(r.verdict, Verdict::NotPompeiu);
  EXPECT_TRUE(r.radial);
  ASSERT_EQ(r.lambda_witnesses.size(), kJ1Zeros.size());
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(r.lambda_witnesses[i], kJ1Zeros[i], 1e-8);
  for (const auto& w : r.witness_checks) {
    EXPECT_TRUE(w.confirmed);
    EXPECT_LT(w.convolution_residual, 1e-6);
    EXPECT_LT(w.integral_residual, 1e-6);
  }
  for (double l : r.lambda_witnesses) EXPECT_GT(l, 0.0);
}

TEST(EuclidDecide, UnitSquareAndTriangle) {
  EuclidOptions opts;
  opts.seed = 7;
  opts.rotations = 64;
  for (const auto& s : {unit_square(), unit_triangle()}) {
    const auto r = euclid_decide(s, opts);
    EXPECT_EQ(r.verdict, Verdict::NoFailureFoundInRange);
    EXPECT_FALSE(r.radial);
    EXPECT_TRUE(r.lambda_witnesses.empty());
    ASSERT_FALSE(r.landscape.empty());
    for (const auto& row : r.landscape) {
      EXPECT_GT(row.lambda, 0.0);
      EXPECT_GT(row.orbit_max, 1e-6 * s.volume()) << row.lambda;
    }
    EXPECT_FALSE(r.caveats.empty());
  }
}

TEST(EuclidDecide, AnnulusAndBall) {
  EuclidOptions opts;
  opts.seed = 3;
  opts.motion_count = 20;
  const auto ring = euclid_decide(EuclideanSet::annulus(2, 1, 2), opts);
  EXPECT_EQ(ring.verdict, Verdict::NotPompeiu);
  EXPECT_EQ(ring.lambda_witnesses, find_failure_lambdas(EuclideanSet::annulus(2, 1, 2), 0, 20));
  opts.lambda_hi = 15;
  const auto ball = euclid_decide(EuclideanSet::ball(3, 1), opts);
  ASSERT_EQ(ball.lambda_witnesses.size(), kJ1SphericalZeros.size());
  for (const auto& w : ball.witness_checks) EXPECT_TRUE(w.confirmed);
}

TEST(EuclidDecide, ComplexCandidatesAreChecked) {
  EuclidOptions opts;
  opts.seed = 1;
  opts.lambda_hi = 5;
  opts.motion_count = 10;
  opts.candidates = {Complex(kJ1Zeros[1], 0), Complex(3, 0.5)};
  const auto r = euclid_decide(unit_disk(), opts);
  ASSERT_EQ(r.candidate_checks.size(), 2u);
  EXPECT_TRUE(r.candidate_checks[0].confirmed);
  EXPECT_FALSE(r.candidate_checks[1].orbit_vanishes);
  EXPECT_FALSE(r.candidate_checks[1].confirmed);
}

TEST(EuclidDecide, NeverReportsZero) {
  EuclidOptions opts;
  opts.seed = 1;
  opts.lambda_lo = 0;
  opts.lambda_hi = 4;
  opts.verify_witnesses = false;
  for (const auto& s : {unit_disk(), EuclideanSet::annulus(2, 1, 2), EuclideanSet::ball(3, 1), unit_square()}) {
    const auto r = euclid_decide(s, opts);
    for (double l : r.lambda_witnesses) EXPECT_GT(l, 0.0);
    for (const auto& row : r.landscape) EXPECT_GT(row.lambda, 0.0);
  }
}

}  // namespace
}  // namespace pompeiu
