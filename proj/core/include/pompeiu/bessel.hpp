#pragma once

// Bessel functions of the first kind for small integer order, real and
// complex argument: power series for |z| <= kBesselSeriesLimit, Hankel
// asymptotic expansion beyond.

#include <complex>

namespace pompeiu {

using Complex = std::complex<double>;

inline constexpr double kBesselSeriesLimit = 12.0;

/// J_n(z) for n in {0, 1, 2}.
Complex bessel_j(int n, Complex z);
double bessel_j(int n, double x);

/// 2 J_1(w) / w as an entire function of s = w^2 (value 1 at s = 0).
Complex jinc_of_square(Complex s);
/// sin(w) / w as a function of s = w^2.
Complex sinc_of_square(Complex s);
/// 3 j_1(w) / w = 3 (sin w - w cos w) / w^3 as a function of s = w^2.
Complex sph_jinc_of_square(Complex s);

/// Spherical Bessel j_2(x), used by the radial-profile derivative in R^3.
double spherical_bessel_j2(double x);

}  // namespace pompeiu
