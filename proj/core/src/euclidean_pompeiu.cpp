#include "pompeiu/euclidean_pompeiu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pompeiu/bessel.hpp"
#include "pompeiu/error.hpp"
#include "pompeiu/fourier_laplace.hpp"

namespace pompeiu {
namespace {

using Clock = std::chrono::steady_clock;
constexpr Complex kI(0.0, 1.0);

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Point add(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

double orbit_max(const EuclideanSet& set, double lambda, const std::vector<Point>& dirs, double imag_cap,
                 double* min_out = nullptr, Point* arg_max = nullptr) {
  double hi = 0, lo = INFINITY;
  for (const auto& d : dirs) {
    const double m = std::abs(fourier_laplace(set, ComplexVector::along(set.dim(), lambda, d), imag_cap));
    if (m > hi) {
      hi = m;
      if (arg_max) *arg_max = d;
    }
    lo = std::min(lo, m);
  }
  if (min_out) *min_out = lo;
  return hi;
}

std::vector<double> lambda_grid(double lo, double hi, double h) {
  std::vector<double> g;
  const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / h + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) g.push_back(lo + static_cast<double>(k) * h);
  if (g.back() < hi - 1e-12) g.push_back(hi);
  return g;
}

void validate_range(double lo, double hi, double grid) {
  if (!(lo >= 0) || !(hi > lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::InvalidArgument, "lambda range must satisfy 0 <= lo < hi");
  }
  if (!(grid > 0) || grid > hi - lo) throw Error(ErrorKind::InvalidArgument, "grid step must be in (0, hi - lo]");
}

}  // namespace

Complex spherical_phi(Complex lambda, const Point& x, int dim) {
  check_dimension(dim);
  const double r = norm(x, dim);
  if (dim == 2) {
    if (lambda.imag() == 0) return bessel_j(0, lambda.real() * r);
    return bessel_j(0, lambda * r);
  }
  if (lambda.imag() == 0) {
    const double w = lambda.real() * r;
    return std::abs(w) < 1e-4 ? 1.0 - w * w / 6.0 : std::sin(w) / w;
  }
  const Complex w = lambda * r;
  return sinc_of_square(w * w);
}

Complex spherical_phi_quadrature(Complex lambda, const Point& x, int dim, int points) {
  check_dimension(dim);
  if (points < 4) throw Error(ErrorKind::InvalidArgument, "sphere quadrature needs at least 4 points");
  if (dim == 2) {
    Complex sum = 0;
    for (int k = 0; k < points; ++k) {
      const double t = 2 * std::numbers::pi * k / points;
      sum += std::exp(kI * lambda * (x[0] * std::cos(t) + x[1] * std::sin(t)));
    }
    return sum / static_cast<double>(points);
  }
  const auto& g = gauss_legendre(points / 4);
  const int m = points / 2;
  Complex sum = 0;
  for (std::size_t e = 0; e < g.nodes.size(); ++e) {
    const double ct = g.nodes[e], st = std::sqrt(1 - ct * ct);
    Complex ring = 0;
    for (int b = 0; b < m; ++b) {
      const double p = 2 * std::numbers::pi * b / m;
      ring += std::exp(kI * lambda * (x[0] * st * std::cos(p) + x[1] * st * std::sin(p) + x[2] * ct));
    }
    sum += g.weights[e] * ring;
  }
  // d omega / 4 pi = (d cos theta / 2) (d phi / 2 pi)
  return sum / (2.0 * m);
}

std::vector<Point> rotation_orbit_directions(int dim, std::size_t samples) {
  check_dimension(dim);
  if (samples == 0) samples = dim == 2 ? kDefaultRotations2d : kDefaultRotations3d;
  std::vector<Point> dirs;
  dirs.reserve(samples);
  if (dim == 2) {
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
      dirs.push_back({std::cos(t), std::sin(t), 0.0});
    }
    return dirs;
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < samples; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(samples);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double p = golden * static_cast<double>(k);
    dirs.push_back({r * std::cos(p), r * std::sin(p), z});
  }
  return dirs;
}

OrbitEvaluation complex_sphere_vanishes(const EuclideanSet& set, Complex lambda, std::size_t rotation_samples,
                                        double tolerance, double imag_cap) {
  if (lambda == 0.0) {
    throw Error(ErrorKind::LambdaZero, "lambda = 0 is never a failure: L(chi_E)(0) is the volume of E");
  }
  OrbitEvaluation out;
  out.threshold = tolerance * set.volume();
  out.min_magnitude = INFINITY;
  for (const auto& d : rotation_orbit_directions(set.dim(), rotation_samples)) {
    const double m = std::abs(fourier_laplace(set, ComplexVector::along(set.dim(), lambda, d), imag_cap));
    if (m >= out.max_magnitude) {
      out.max_magnitude = m;
      out.witness_direction = d;
    }
    out.min_magnitude = std::min(out.min_magnitude, m);
  }
  out.vanishes = out.max_magnitude < out.threshold;
  return out;
}

double radial_profile(const EuclideanSet& set, double lambda) {
  return radial_transform(set, Complex(lambda * lambda, 0.0)).real();
}

double radial_profile_derivative(const EuclideanSet& set, double lambda) {
  double sum = 0;
  for (const auto& t : set.radial_terms()) {
    const double u = t.radius * lambda;
    if (u == 0) continue;
    const double r3 = t.radius * t.radius * t.radius;
    // d/dlambda of |B_R| * g(R lambda): 2D -2 pi R^3 J_2(u)/u, 3D -4 pi R^4 j_2(u)/u.
    const double d = set.dim() == 2 ? -2 * std::numbers::pi * r3 * bessel_j(2, u) / u
                                    : -4 * std::numbers::pi * r3 * t.radius * spherical_bessel_j2(u) / u;
    sum += t.sign * d;
  }
  return sum;
}

std::vector<double> find_failure_lambdas(const EuclideanSet& set, double lo, double hi,
                                         const RootSearchOptions& options) {
  validate_range(lo, hi, options.grid);
  set.radial_terms();  // NonRadial check
  const auto grid = lambda_grid(lo, hi, options.grid);
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = radial_profile(set, grid[k]);
  const double threshold = options.vanish_tolerance * set.volume();

  std::vector<double> roots;
  auto accept = [&](double x) {
    if (!(x > 0) || roots.size() >= options.max_count) return;
    if (!roots.empty() && std::abs(x - roots.back()) < 10 * options.tolerance) return;
    if (std::abs(radial_profile(set, x)) < threshold) roots.push_back(x);
  };
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    if (values[k] == 0) {
      accept(grid[k]);
      continue;
    }
    if (values[k] * values[k + 1] >= 0) continue;
    double a = grid[k], b = grid[k + 1], fa = values[k];
    while (b - a > options.tolerance) {
      const double m = 0.5 * (a + b);
      const double fm = radial_profile(set, m);
      if (fm == 0) {
        a = b = m;
        break;
      }
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    double x = 0.5 * (a + b);
    if (options.newton_polish) {
      for (int it = 0; it < 3; ++it) {
        const double fx = radial_profile(set, x);
        const double dfx = radial_profile_derivative(set, x);
        if (dfx == 0) break;
        const double y = x - fx / dfx;
        if (y < grid[k] || y > grid[k + 1] || std::abs(radial_profile(set, y)) > std::abs(fx)) break;
        x = y;
      }
    }
    accept(x);
  }
  if (values.back() == 0) accept(grid.back());
  return roots;
}

std::vector<Point> default_sample_points(int dim, std::size_t count, double radius) {
  check_dimension(dim);
  std::vector<Point> pts;
  pts.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < count; ++k) {
    const double frac = count > 1 ? static_cast<double>(k) / static_cast<double>(count - 1) : 0.0;
    if (dim == 2) {
      const double r = radius * std::sqrt(frac);
      const double t = golden * static_cast<double>(k);
      pts.push_back({r * std::cos(t), r * std::sin(t), 0.0});
    } else {
      const double r = radius * std::cbrt(frac);
      const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
      const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double t = golden * static_cast<double>(k);
      pts.push_back({r * s * std::cos(t), r * s * std::sin(t), r * z});
    }
  }
  return pts;
}

double convolution_test(const EuclideanSet& set, Complex lambda, std::span<const Point> samples,
                        const QuadratureOptions& options, const ParallelFor& parallel) {
  std::vector<double> mags(samples.size());
  const int dim = set.dim();
  parallel(samples.size(), [&](std::size_t i) {
    const Point x = samples[i];
    mags[i] = std::abs(
        integrate(set, [&](const Point& y) { return spherical_phi(lambda, add(x, y), dim); }, options).value);
  });
  return mags.empty() ? 0.0 : *std::max_element(mags.begin(), mags.end());
}

std::vector<RigidMotion> random_motions(int dim, std::size_t count, std::uint64_t seed, double range) {
  check_dimension(dim);
  std::mt19937_64 rng(seed);
  std::vector<RigidMotion> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (dim == 2) {
      const double angle = 2 * std::numbers::pi * unit_double(rng);
      Point t{};
      for (int k = 0; k < 2; ++k) t[k] = range * (2 * unit_double(rng) - 1);
      out.push_back(RigidMotion::rotation2d(angle, t));
    } else {
      const double u1 = unit_double(rng), u2 = unit_double(rng), u3 = unit_double(rng);
      const double a = std::sqrt(1 - u1), b = std::sqrt(u1);
      Point t{};
      for (int k = 0; k < 3; ++k) t[k] = range * (2 * unit_double(rng) - 1);
      out.push_back(RigidMotion::from_quaternion(a * std::sin(2 * std::numbers::pi * u2),
                                                 a * std::cos(2 * std::numbers::pi * u2),
                                                 b * std::sin(2 * std::numbers::pi * u3),
                                                 b * std::cos(2 * std::numbers::pi * u3), t));
    }
  }
  return out;
}

IntegralCheck pompeiu_integral_check(const EuclideanSet& set, Complex lambda, std::span<const RigidMotion> motions,
                                     const QuadratureOptions& options, const ParallelFor& parallel) {
  std::vector<IntegralCheck> per(motions.size());
  const int dim = set.dim();
  parallel(motions.size(), [&](std::size_t i) {
    const EuclideanSet moved = set.transformed(motions[i]);
    per[i].max_spherical =
        std::abs(integrate(moved, [&](const Point& x) { return spherical_phi(lambda, x, dim); }, options).value);
    per[i].max_plane_wave =
        std::abs(integrate(moved, [&](const Point& x) { return std::exp(kI * lambda * x[0]); }, options).value);
  });
  IntegralCheck out;
  for (const auto& c : per) {
    out.max_spherical = std::max(out.max_spherical, c.max_spherical);
    out.max_plane_wave = std::max(out.max_plane_wave, c.max_plane_wave);
  }
  return out;
}

namespace {

WitnessCheck check_witness(const EuclideanSet& set, Complex lambda, const EuclidOptions& o,
                           const std::vector<Point>& samples, const std::vector<RigidMotion>& motions,
                           const ParallelFor& parallel) {
  WitnessCheck w;
  w.lambda = lambda;
  const auto orbit = complex_sphere_vanishes(set, lambda, o.rotations, o.vanish_tolerance, o.imag_cap);
  w.orbit_max = orbit.max_magnitude;
  w.orbit_vanishes = orbit.vanishes;
  if (o.verify_witnesses && orbit.vanishes) {
    w.verified = true;
    w.convolution_residual = convolution_test(set, lambda, samples, o.quadrature, parallel);
    w.integral_residual = pompeiu_integral_check(set, lambda, motions, o.quadrature, parallel).max();
  }
  w.confirmed = orbit.vanishes && (!o.verify_witnesses || (w.convolution_residual < o.witness_tolerance &&
                                                           w.integral_residual < o.witness_tolerance));
  return w;
}

// Golden-section minimization of the orbit maximum on [a, b].
double refine_minimum(const EuclideanSet& set, double a, double b, const std::vector<Point>& dirs, double cap) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = orbit_max(set, x1, dirs, cap), f2 = orbit_max(set, x2, dirs, cap);
  for (int it = 0; it < 60 && b - a > 1e-11; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = orbit_max(set, x1, dirs, cap);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = orbit_max(set, x2, dirs, cap);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

EuclidReport euclid_decide(const EuclideanSet& set, const EuclidOptions& o, const ParallelFor& parallel) {
  const auto start = Clock::now();
  validate_range(o.lambda_lo, o.lambda_hi, o.grid);
  EuclidReport report;
  report.radial = set.is_radial();
  report.volume = set.volume();
  report.rotations = o.rotations != 0 ? o.rotations
                                      : (set.dim() == 2 ? kDefaultRotations2d : kDefaultRotations3d);
  const auto dirs = rotation_orbit_directions(set.dim(), report.rotations);
  const auto samples = default_sample_points(set.dim(), o.sample_count);
  const auto motions = random_motions(set.dim(), o.motion_count, o.seed);
  const double threshold = o.vanish_tolerance * set.volume();

  auto grid = lambda_grid(o.lambda_lo, o.lambda_hi, o.grid);
  grid.erase(std::remove(grid.begin(), grid.end(), 0.0), grid.end());
  report.landscape.resize(grid.size());

  std::vector<double> found;
  if (report.radial) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double v = std::abs(radial_profile(set, grid[k]));
      report.landscape[k] = {grid[k], v, v};
    }
    RootSearchOptions ro;
    ro.grid = o.grid;
    ro.vanish_tolerance = o.vanish_tolerance;
    found = find_failure_lambdas(set, o.lambda_lo, o.lambda_hi, ro);
  } else {
    parallel(grid.size(), [&](std::size_t k) {
      double mn = 0;
      const double mx = orbit_max(set, grid[k], dirs, o.imag_cap, &mn);
      report.landscape[k] = {grid[k], mx, mn};
    });
    const auto& l = report.landscape;
    for (std::size_t k = 0; k < l.size(); ++k) {
      const bool left = k == 0 || l[k].orbit_max <= l[k - 1].orbit_max;
      const bool right = k + 1 == l.size() || l[k].orbit_max <= l[k + 1].orbit_max;
      if (!left || !right) continue;
      const double a = k == 0 ? l[k].lambda : l[k - 1].lambda;
      const double b = k + 1 == l.size() ? l[k].lambda : l[k + 1].lambda;
      const double x = a < b ? refine_minimum(set, a, b, dirs, o.imag_cap) : l[k].lambda;
      if (x > 0 && orbit_max(set, x, dirs, o.imag_cap) < threshold) found.push_back(x);
    }
  }

  for (double lambda : found) {
    auto w = check_witness(set, lambda, o, samples, motions, parallel);
    if (w.confirmed) report.lambda_witnesses.push_back(lambda);
    report.witness_checks.push_back(w);
  }
  bool candidate_failure = false;
  for (Complex c : o.candidates) {
    if (c == 0.0) {
      report.caveats.push_back("candidate lambda = 0 skipped: never a failure for a set of positive measure");
      continue;
    }
    auto w = check_witness(set, c, o, samples, motions, parallel);
    candidate_failure |= w.confirmed;
    report.candidate_checks.push_back(w);
  }

  report.verdict =
      !report.lambda_witnesses.empty() || candidate_failure ? Verdict::NotPompeiu : Verdict::NoFailureFoundInRange;
  report.caveats.push_back("complex lambda searched only on the real axis and at user-supplied candidates");
  if (report.radial) {
    report.caveats.push_back("roots found by sign changes on the grid; even-order roots are not bracketed");
  } else {
    report.caveats.push_back("non-radial set: NoFailureFoundInRange is not a proof of the Pompeiu property");
  }
  if (report.witness_checks.size() != report.lambda_witnesses.size()) {
    report.caveats.push_back("some vanishing lambda failed witness verification and was not reported");
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

}  // namespace pompeiu
