#pragma once

// Tensor quadrature over EuclideanSet regions with adaptive order doubling.
//   disk / annulus      Gauss in r, trapezoid in the angle
//   ball / shell (R^3)  Gauss in r and cos(theta), trapezoid in phi
//   triangle / tetra    Gauss on the cube through the collapsed (Duffy) map

#include <functional>
#include <vector>

#include "pompeiu/euclidean_set.hpp"

namespace pompeiu {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, computed once per n and cached.
const GaussRule& gauss_legendre(int n);

struct QuadratureOptions {
  double tolerance = 1e-8;
  int initial_order = 16;
  int max_order_2d = 512;
  int max_order_3d = 128;
};

struct QuadratureResult {
  Complex value;
  double error_estimate;
  int order;
};

using Integrand = std::function<Complex(const Point&)>;

/// Fixed-order rule: `order` Gauss nodes per radial/simplex axis and
/// 2 * order trapezoid nodes per periodic axis.
Complex integrate_fixed(const EuclideanSet& set, const Integrand& f, int order);

/// Doubles the order from options.initial_order until
/// |Q_2N - Q_N| < tolerance * max(1, |Q_2N|); throws QuadratureNotConverged
/// when the dimension's max order is reached first.
QuadratureResult integrate(const EuclideanSet& set, const Integrand& f, const QuadratureOptions& options = {});

}  // namespace pompeiu
