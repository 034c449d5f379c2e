#pragma once

// Pompeiu failure search on R^n = M(n)/SO(n), n = 2, 3.
//
// Frequencies follow S_C(lambda) = {z : z . z = lambda^2}, which contains
// lambda e_1. E fails the Pompeiu property at lambda != 0 iff L(chi_E)
// vanishes on S_C(lambda); the search samples the real rotation orbit
// {lambda k e_1 : k in SO(n)}.

#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pompeiu/decision.hpp"
#include "pompeiu/euclidean_set.hpp"
#include "pompeiu/parallel.hpp"
#include "pompeiu/quadrature.hpp"

namespace pompeiu {

/// phi_lambda(x), the normalized average of exp(i lambda x . w) over the unit
/// sphere: J_0(lambda |x|) for n = 2, sin(lambda |x|) / (lambda |x|) for n = 3.
Complex spherical_phi(Complex lambda, const Point& x, int dim);

/// Direct sphere average: `points` equispaced nodes on the circle (n = 2);
/// points/4 Gauss nodes in cos(theta) times points/2 in the azimuth (n = 3).
Complex spherical_phi_quadrature(Complex lambda, const Point& x, int dim, int points = 512);

inline constexpr std::size_t kDefaultRotations2d = 64;
inline constexpr std::size_t kDefaultRotations3d = 72;

/// Unit vectors k e_1 for the sampled rotations: equispaced angles in R^2,
/// a Fibonacci lattice on S^2 in R^3. `samples` = 0 picks the default.
std::vector<Point> rotation_orbit_directions(int dim, std::size_t samples = 0);

struct OrbitEvaluation {
  bool vanishes = false;
  double max_magnitude = 0;
  double min_magnitude = 0;
  /// Direction attaining max_magnitude.
  Point witness_direction{};
  double threshold = 0;
};

/// max over the sampled orbit of |L(chi_E)(lambda k e_1)| against
/// tolerance * volume. Throws LambdaZero for lambda = 0.
OrbitEvaluation complex_sphere_vanishes(const EuclideanSet& set, Complex lambda, std::size_t rotation_samples = 0,
                                        double tolerance = 1e-6, double imag_cap = 50.0);

/// L(chi_E)(lambda e_1) for the radial set re-centred at the origin (real for
/// real lambda), and its derivative in lambda. Throw NonRadial.
double radial_profile(const EuclideanSet& set, double lambda);
double radial_profile_derivative(const EuclideanSet& set, double lambda);

struct RootSearchOptions {
  double grid = 0.05;
  double tolerance = 1e-10;
  bool newton_polish = true;
  double vanish_tolerance = 1e-6;
  std::size_t max_count = std::numeric_limits<std::size_t>::max();
};

/// Positive roots of the radial profile in (lo, hi] by sign-change
/// bracketing, bisection and Newton polish. Throws NonRadial.
std::vector<double> find_failure_lambdas(const EuclideanSet& set, double lo, double hi,
                                         const RootSearchOptions& options = {});

/// Deterministic spiral of `count` points with |x| <= radius.
std::vector<Point> default_sample_points(int dim, std::size_t count = 25, double radius = 3.0);

/// max over the samples of |(phi_lambda * chi^_E)(x)| = |int_E phi_lambda(x + y) dy|,
/// by quadrature.
double convolution_test(const EuclideanSet& set, Complex lambda, std::span<const Point> samples,
                        const QuadratureOptions& options = {}, const ParallelFor& parallel = serial_for);

/// Rotations uniform on SO(n) and translations uniform in [-range, range]^n
/// from a seeded mt19937_64.
std::vector<RigidMotion> random_motions(int dim, std::size_t count, std::uint64_t seed, double range = 3.0);

struct IntegralCheck {
  double max_spherical = 0;   // f = phi_lambda
  double max_plane_wave = 0;  // f = exp(i lambda x_1)
  double max() const { return max_spherical > max_plane_wave ? max_spherical : max_plane_wave; }
};

/// max over motions sigma of |int_{sigma(E)} f| for both test functions.
IntegralCheck pompeiu_integral_check(const EuclideanSet& set, Complex lambda, std::span<const RigidMotion> motions,
                                     const QuadratureOptions& options = {}, const ParallelFor& parallel = serial_for);

struct EuclidOptions {
  double lambda_lo = 0.0;
  double lambda_hi = 20.0;
  double grid = 0.05;
  std::size_t rotations = 0;
  std::uint64_t seed = 0;
  double vanish_tolerance = 1e-6;
  double witness_tolerance = 1e-6;
  std::size_t motion_count = 100;
  std::size_t sample_count = 25;
  bool verify_witnesses = true;
  std::vector<Complex> candidates;
  double imag_cap = 50.0;
  QuadratureOptions quadrature;
};

struct LandscapeRow {
  double lambda;
  double orbit_max;
  double orbit_min;
};

struct WitnessCheck {
  Complex lambda;
  double orbit_max = 0;
  bool orbit_vanishes = false;
  bool verified = false;
  double convolution_residual = -1;
  double integral_residual = -1;
  bool confirmed = false;
};

struct EuclidReport {
  Verdict verdict = Verdict::NoFailureFoundInRange;
  Method method = Method::EuclideanSearch;
  bool radial = false;
  double volume = 0;
  std::size_t rotations = 0;
  std::vector<double> lambda_witnesses;
  std::vector<WitnessCheck> witness_checks;
  std::vector<WitnessCheck> candidate_checks;
  std::vector<LandscapeRow> landscape;
  std::vector<std::string> caveats;
  std::chrono::nanoseconds elapsed{0};
};

/// Radial sets: roots of the radial profile. Other sets: orbit scan of the
/// lambda grid with refinement at local minima, confirmed by convolution_test.
/// Never concludes Pompeiu; the best non-failure verdict is
/// NoFailureFoundInRange.
EuclidReport euclid_decide(const EuclideanSet& set, const EuclidOptions& options,
                           const ParallelFor& parallel = serial_for);

}  // namespace pompeiu
