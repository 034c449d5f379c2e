#include "pompeiu/bessel.hpp"

#include <cmath>
#include <numbers>

#include "pompeiu/error.hpp"

namespace pompeiu {
namespace {

using LComplex = std::complex<long double>;

template <class T>
T series_j(int n, T z) {
  const T q = -z * z / static_cast<long double>(4);
  T term = 1;
  for (int k = 1; k <= n; ++k) term = term * (z / static_cast<long double>(2)) / static_cast<long double>(k);
  T sum = term;
  for (int k = 1; k < 200; ++k) {
    term = term * q / static_cast<long double>(k * (k + n));
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum)) break;
  }
  return sum;
}

// Hankel expansion, valid for Re z >= 0 and |z| large.
template <class T>
T hankel_j(int n, T z) {
  const long double mu = 4.0L * n * n;
  T p = 0, q = 0;
  T term = 1;
  long double last = INFINITY;
  for (int k = 0; k < 60; ++k) {
    const long double mag = std::abs(term);
    if (mag > last) break;
    if (k % 2 == 0) {
      p += (k / 2) % 2 == 0 ? term : -term;
    } else {
      q += (k / 2) % 2 == 0 ? term : -term;
    }
    if (mag < 1e-20L) break;
    last = mag;
    const long double odd = 2.0L * k + 1.0L;
    term = term * (mu - odd * odd) / (static_cast<long double>(k + 1) * 8.0L * z);
  }
  const long double pi = std::numbers::pi_v<long double>;
  const T chi = z - (static_cast<long double>(n) / 2.0L + 0.25L) * pi;
  return std::sqrt(static_cast<long double>(2) / (pi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

void check_order(int n) {
  if (n < 0 || n > 2) throw Error(ErrorKind::InvalidArgument, "Bessel order must be 0, 1 or 2");
}

}  // namespace

Complex bessel_j(int n, Complex z) {
  check_order(n);
  LComplex w(z.real(), z.imag());
  if (std::abs(w) <= kBesselSeriesLimit) return Complex(series_j(n, w));
  const bool flip = w.real() < 0;
  if (flip) w = -w;
  LComplex v = hankel_j(n, w);
  if (flip && n % 2 == 1) v = -v;
  return Complex(v);
}

double bessel_j(int n, double x) {
  check_order(n);
  long double w = x;
  if (std::abs(w) <= kBesselSeriesLimit) return static_cast<double>(series_j(n, w));
  const bool flip = w < 0;
  if (flip) w = -w;
  long double v = hankel_j(n, w);
  if (flip && n % 2 == 1) v = -v;
  return static_cast<double>(v);
}

Complex jinc_of_square(Complex s) {
  constexpr double limit = kBesselSeriesLimit * kBesselSeriesLimit;
  if (std::abs(s) <= limit) {
    const LComplex q = -LComplex(s.real(), s.imag()) / 4.0L;
    LComplex term = 1, sum = 1;
    for (int k = 1; k < 200; ++k) {
      term *= q / static_cast<long double>(k * (k + 1));
      sum += term;
      if (std::abs(term) <= 1e-21L * std::abs(sum)) break;
    }
    return Complex(sum);
  }
  const Complex w = std::sqrt(s);
  return 2.0 * bessel_j(1, w) / w;
}

Complex sinc_of_square(Complex s) {
  constexpr double limit = kBesselSeriesLimit * kBesselSeriesLimit;
  if (std::abs(s) <= limit) {
    const LComplex q = -LComplex(s.real(), s.imag());
    LComplex term = 1, sum = 1;
    for (int k = 1; k < 200; ++k) {
      term *= q / static_cast<long double>((2 * k) * (2 * k + 1));
      sum += term;
      if (std::abs(term) <= 1e-21L * std::abs(sum)) break;
    }
    return Complex(sum);
  }
  const Complex w = std::sqrt(s);
  return std::sin(w) / w;
}

Complex sph_jinc_of_square(Complex s) {
  constexpr double limit = kBesselSeriesLimit * kBesselSeriesLimit;
  if (std::abs(s) <= limit) {
    // 3 sum_m (-s)^m (2m + 2) / (2m + 3)!
    const LComplex q = -LComplex(s.real(), s.imag());
    LComplex power = 1, sum = 0;
    long double fact = 6.0L;  // (2m + 3)! at m = 0
    for (int m = 0; m < 200; ++m) {
      const LComplex term = power * static_cast<long double>(2 * m + 2) / fact;
      sum += term;
      if (m > 0 && std::abs(term) <= 1e-21L * std::abs(sum)) break;
      power *= q;
      fact *= static_cast<long double>((2 * m + 4) * (2 * m + 5));
    }
    return Complex(3.0L * sum);
  }
  const Complex w = std::sqrt(s);
  return 3.0 * (std::sin(w) - w * std::cos(w)) / (w * w * w);
}

double spherical_bessel_j2(double x) {
  if (std::abs(x) < 1.0) {
    // x^2 sum_k (-x^2/2)^k / (k! (2k + 5)!!)
    const long double q = -static_cast<long double>(x) * x / 2.0L;
    long double term = 1.0L / 15.0L, sum = term;
    for (int k = 1; k < 30; ++k) {
      term *= q / (static_cast<long double>(k) * (2 * k + 5));
      sum += term;
    }
    return static_cast<double>(static_cast<long double>(x) * x * sum);
  }
  const double s = std::sin(x), c = std::cos(x);
  return (3.0 / (x * x) - 1.0) * s / x - 3.0 * c / (x * x);
}

}  // namespace pompeiu
