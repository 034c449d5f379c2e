#include "pompeiu/fourier_laplace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "pompeiu/bessel.hpp"
#include "pompeiu/error.hpp"

namespace pompeiu {
namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kClusterRadius = 1.0;
constexpr int kTaylorTerms = 40;

Complex ball_profile(int dim, double radius, Complex s) {
  const Complex scaled = radius * radius * s;
  return ball_volume(dim, radius) * (dim == 2 ? jinc_of_square(scaled) : sph_jinc_of_square(scaled));
}

Complex taylor_divided_difference(std::span<const Complex> t) {
  const std::size_t m = t.size() - 1;
  Complex c = 0;
  for (auto v : t) c += v;
  c /= static_cast<double>(t.size());
  std::array<Complex, kTaylorTerms + 1> h{};
  h[0] = 1;
  for (auto v : t) {
    const Complex u = v - c;
    for (int k = 1; k <= kTaylorTerms; ++k) h[k] += u * h[k - 1];
  }
  // exp[u_0..u_m] = sum_k h_k(u) / (m + k)!
  double inv_fact = 1;
  for (std::size_t k = 2; k <= m; ++k) inv_fact /= static_cast<double>(k);
  Complex sum = 0;
  for (int k = 0; k <= kTaylorTerms; ++k) {
    sum += h[k] * inv_fact;
    inv_fact /= static_cast<double>(m + k + 1);
  }
  return std::exp(c) * sum;
}

}  // namespace

Complex exp_divided_difference(std::span<const Complex> t) {
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "divided difference needs at least one node");
  if (t.size() == 1) return std::exp(t[0]);
  Complex c = 0;
  for (auto v : t) c += v;
  c /= static_cast<double>(t.size());
  double spread = 0;
  for (auto v : t) spread = std::max(spread, std::abs(v - c));
  if (spread <= kClusterRadius) return taylor_divided_difference(t);

  std::size_t bi = 0, bj = 1;
  double best = -1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (std::abs(t[i] - t[j]) > best) {
        best = std::abs(t[i] - t[j]);
        bi = i;
        bj = j;
      }
    }
  }
  std::vector<Complex> without_i, without_j;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != bi) without_i.push_back(t[k]);
    if (k != bj) without_j.push_back(t[k]);
  }
  return (exp_divided_difference(without_j) - exp_divided_difference(without_i)) / (t[bi] - t[bj]);
}

Complex simplex_transform(const Simplex& simplex, const ComplexVector& z) {
  const int n = z.dim();
  std::array<Complex, 4> t{};
  for (int j = 0; j <= n; ++j) t[j] = -kI * z.dot(simplex.vertices[j]);
  const double factorial = n == 2 ? 2.0 : 6.0;
  return factorial * simplex.volume * exp_divided_difference(std::span<const Complex>(t.data(), n + 1));
}

Complex fourier_laplace(const EuclideanSet& set, const ComplexVector& z, double imag_cap) {
  if (z.dim() != set.dim()) throw Error(ErrorKind::InvalidArgument, "frequency and set of different dimension");
  if (z.max_abs_imag() > imag_cap) {
    throw Error(ErrorKind::ImaginaryPartCap, "|Im z| = " + std::to_string(z.max_abs_imag()) + " exceeds the cap " +
                                                 std::to_string(imag_cap));
  }
  const int dim = set.dim();
  const Complex s = z.bilinear_square();
  if (const auto* b = std::get_if<Ball>(&set.shape())) {
    return std::exp(-kI * z.dot(b->center)) * ball_profile(dim, b->radius, s);
  }
  if (const auto* a = std::get_if<Annulus>(&set.shape())) {
    return std::exp(-kI * z.dot(a->center)) * (ball_profile(dim, a->outer, s) - ball_profile(dim, a->inner, s));
  }
  Complex sum = 0;
  if (const auto* p = std::get_if<Polytope>(&set.shape())) {
    for (const auto& simplex : p->simplices) sum += simplex_transform(simplex, z);
    return sum;
  }
  for (const auto& m : std::get<DisjointUnion>(set.shape()).members) sum += fourier_laplace(m, z, imag_cap);
  return sum;
}

Complex fourier_laplace_quadrature(const EuclideanSet& set, const ComplexVector& z, const QuadratureOptions& options) {
  if (z.dim() != set.dim()) throw Error(ErrorKind::InvalidArgument, "frequency and set of different dimension");
  return integrate(set, [&z](const Point& x) { return std::exp(-kI * z.dot(x)); }, options).value;
}

Complex radial_transform(const EuclideanSet& set, Complex s) {
  Complex sum = 0;
  for (const auto& term : set.radial_terms()) sum += term.sign * ball_profile(set.dim(), term.radius, s);
  return sum;
}

}  // namespace pompeiu
