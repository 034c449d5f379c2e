#include "pompeiu/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "pompeiu/error.hpp"

namespace pompeiu {
namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    // Recompute the derivative at the converged node.
    long double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Complex disk_rule(const Point& c, double r0, double r1, const Integrand& f, int order) {
  const auto& g = gauss_legendre(order);
  const int m = 2 * order;
  const double half = (r1 - r0) / 2, mid = (r1 + r0) / 2;
  Complex sum = 0;
  for (int a = 0; a < order; ++a) {
    const double r = mid + half * g.nodes[a];
    Complex ring = 0;
    for (int b = 0; b < m; ++b) {
      const double t = 2 * std::numbers::pi * b / m;
      ring += f({c[0] + r * std::cos(t), c[1] + r * std::sin(t), 0.0});
    }
    sum += g.weights[a] * r * ring;
  }
  return sum * half * (2 * std::numbers::pi / m);
}

Complex shell_rule(const Point& c, double r0, double r1, const Integrand& f, int order) {
  const auto& g = gauss_legendre(order);
  const int m = 2 * order;
  const double half = (r1 - r0) / 2, mid = (r1 + r0) / 2;
  std::vector<double> cp(m), sp(m);
  for (int b = 0; b < m; ++b) {
    cp[b] = std::cos(2 * std::numbers::pi * b / m);
    sp[b] = std::sin(2 * std::numbers::pi * b / m);
  }
  Complex sum = 0;
  for (int a = 0; a < order; ++a) {
    const double r = mid + half * g.nodes[a];
    Complex shell = 0;
    for (int e = 0; e < order; ++e) {
      const double ct = g.nodes[e], st = std::sqrt(1 - ct * ct);
      Complex ring = 0;
      for (int b = 0; b < m; ++b) ring += f({c[0] + r * st * cp[b], c[1] + r * st * sp[b], c[2] + r * ct});
      shell += g.weights[e] * ring;
    }
    sum += g.weights[a] * r * r * shell;
  }
  return sum * half * (2 * std::numbers::pi / m);
}

// Collapsed map from [0,1]^2: x = v0 + u (v1 - v0) + u w (v2 - v1), |J| = 2 A u.
Complex triangle_rule(const Simplex& s, const Integrand& f, int order) {
  const auto& g = gauss_legendre(order);
  const auto& v = s.vertices;
  Complex sum = 0;
  for (int a = 0; a < order; ++a) {
    const double u = (g.nodes[a] + 1) / 2;
    Complex inner = 0;
    for (int b = 0; b < order; ++b) {
      const double w = (g.nodes[b] + 1) / 2;
      Point x{};
      for (int k = 0; k < 2; ++k) x[k] = v[0][k] + u * (v[1][k] - v[0][k]) + u * w * (v[2][k] - v[1][k]);
      inner += g.weights[b] * f(x);
    }
    sum += g.weights[a] * u * inner;
  }
  return sum * (2 * s.volume / 4);
}

// x = v0 + u (v1 - v0) + u w (v2 - v1) + u w y (v3 - v2), |J| = 6 V u^2 w.
Complex tetra_rule(const Simplex& s, const Integrand& f, int order) {
  const auto& g = gauss_legendre(order);
  const auto& v = s.vertices;
  Complex sum = 0;
  for (int a = 0; a < order; ++a) {
    const double u = (g.nodes[a] + 1) / 2;
    Complex mid = 0;
    for (int b = 0; b < order; ++b) {
      const double w = (g.nodes[b] + 1) / 2;
      Complex inner = 0;
      for (int e = 0; e < order; ++e) {
        const double y = (g.nodes[e] + 1) / 2;
        Point x{};
        for (int k = 0; k < 3; ++k) {
          x[k] = v[0][k] + u * (v[1][k] - v[0][k]) + u * w * (v[2][k] - v[1][k]) + u * w * y * (v[3][k] - v[2][k]);
        }
        inner += g.weights[e] * f(x);
      }
      mid += g.weights[b] * w * inner;
    }
    sum += g.weights[a] * u * u * mid;
  }
  return sum * (6 * s.volume / 8);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Gauss rule needs at least one node");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const GaussRule>(compute_rule(n));
  return *slot;
}

Complex integrate_fixed(const EuclideanSet& set, const Integrand& f, int order) {
  const int dim = set.dim();
  if (const auto* b = std::get_if<Ball>(&set.shape())) {
    return dim == 2 ? disk_rule(b->center, 0, b->radius, f, order) : shell_rule(b->center, 0, b->radius, f, order);
  }
  if (const auto* a = std::get_if<Annulus>(&set.shape())) {
    return dim == 2 ? disk_rule(a->center, a->inner, a->outer, f, order)
                    : shell_rule(a->center, a->inner, a->outer, f, order);
  }
  if (const auto* p = std::get_if<Polytope>(&set.shape())) {
    Complex sum = 0;
    for (const auto& s : p->simplices) sum += dim == 2 ? triangle_rule(s, f, order) : tetra_rule(s, f, order);
    return sum;
  }
  Complex sum = 0;
  for (const auto& m : std::get<DisjointUnion>(set.shape()).members) sum += integrate_fixed(m, f, order);
  return sum;
}

QuadratureResult integrate(const EuclideanSet& set, const Integrand& f, const QuadratureOptions& options) {
  const int max_order = set.dim() == 2 ? options.max_order_2d : options.max_order_3d;
  int n = std::max(1, options.initial_order);
  Complex coarse = integrate_fixed(set, f, n);
  double err = INFINITY;
  while (2 * n <= max_order) {
    const Complex fine = integrate_fixed(set, f, 2 * n);
    err = std::abs(fine - coarse);
    if (err < options.tolerance * std::max(1.0, std::abs(fine))) return {fine, err, 2 * n};
    coarse = fine;
    n *= 2;
  }
  throw Error(ErrorKind::QuadratureNotConverged, "quadrature over " + set.kind() + " did not reach tolerance " +
                                                     std::to_string(options.tolerance) + " (last estimate " +
                                                     std::to_string(err) + " at order " + std::to_string(n) + ")");
}

}  // namespace pompeiu
