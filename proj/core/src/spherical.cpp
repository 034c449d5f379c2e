// Spherical functions as joint eigenvectors of the Hecke convolution
// operators L_i : nu -> e_i * nu acting on the class space.
//
// If v is a joint eigenvector with L_i v = chi_i v, then chi is a character
// of the Hecke algebra and chi_i = Phi_f(e_i) = f(g_i^-1) for the spherical
// function f, where g_i represents the i-th double coset.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "pompeiu/error.hpp"
#include "pompeiu/hecke.hpp"

namespace pompeiu {
namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

double structure_weight(const HeckeAlgebra& alg, const HeckeAlgebra::StructureCount& s, std::size_t c) {
  return static_cast<double>(s.count) * static_cast<double>(alg.class_size(c)) /
         (static_cast<double>(alg.class_size(s.i)) * static_cast<double>(alg.class_size(s.j)));
}

// Matrix of sum_i w_i L_i in the basis e_0..e_{d-1}.
CMatrix combined_operator(const HeckeAlgebra& alg, const std::vector<double>& w) {
  const auto d = static_cast<Eigen::Index>(alg.dimension());
  CMatrix a = CMatrix::Zero(d, d);
  for (std::size_t c = 0; c < alg.dimension(); ++c) {
    for (const auto& s : alg.structure_counts(c)) {
      if (w[s.i] == 0.0) continue;
      a(static_cast<Eigen::Index>(c), s.j) += w[s.i] * structure_weight(alg, s, c);
    }
  }
  return a;
}

CMatrix single_operator(const HeckeAlgebra& alg, std::size_t i) {
  std::vector<double> w(alg.dimension(), 0.0);
  w[i] = 1.0;
  return combined_operator(alg, w);
}

// Groups eigenvalues that agree to `tol`; returns (representative, members).
std::vector<std::pair<Complex, std::vector<Eigen::Index>>> cluster(const CVector& ev, double tol) {
  std::vector<std::pair<Complex, std::vector<Eigen::Index>>> out;
  std::vector<bool> used(static_cast<std::size_t>(ev.size()), false);
  for (Eigen::Index a = 0; a < ev.size(); ++a) {
    if (used[a]) continue;
    std::vector<Eigen::Index> members{a};
    used[a] = true;
    for (Eigen::Index b = a + 1; b < ev.size(); ++b) {
      if (!used[b] && std::abs(ev[a] - ev[b]) < tol) {
        used[b] = true;
        members.push_back(b);
      }
    }
    Complex mean = 0;
    for (auto m : members) mean += ev[m];
    out.emplace_back(mean / static_cast<double>(members.size()), std::move(members));
  }
  return out;
}

// Orthonormal basis (columns) of the approximate kernel of `m`, of the given
// dimension.
CMatrix kernel_basis(const CMatrix& m, Eigen::Index dim) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim);
}

void split_eigenspace(const HeckeAlgebra& alg, const CMatrix& basis, std::size_t next_op,
                      std::vector<CVector>& out) {
  if (basis.cols() == 1) {
    out.emplace_back(basis.col(0));
    return;
  }
  if (next_op >= alg.dimension()) {
    throw Error(ErrorKind::Internal, "joint eigenspace does not split; Hecke algebra is not semisimple");
  }
  const CMatrix restricted = basis.adjoint() * single_operator(alg, next_op) * basis;
  Eigen::ComplexEigenSolver<CMatrix> solver(restricted, false);
  const CVector ev = solver.eigenvalues();
  const double scale = 1.0 + ev.cwiseAbs().maxCoeff();
  for (const auto& [value, members] : cluster(ev, 1e-7 * scale)) {
    const auto k = static_cast<Eigen::Index>(members.size());
    CMatrix shifted = restricted - value * CMatrix::Identity(restricted.rows(), restricted.cols());
    const CMatrix sub = k == restricted.rows() ? CMatrix(CMatrix::Identity(k, k)) : kernel_basis(shifted, k);
    split_eigenspace(alg, basis * sub, next_op + 1, out);
  }
}

// chi_i = <v, L_i v> / <v, v> for every i.
std::vector<Complex> characters_of(const HeckeAlgebra& alg, const CVector& v) {
  const std::size_t d = alg.dimension();
  std::vector<std::vector<Complex>> w(d, std::vector<Complex>(d, 0.0));  // w[i][c] = (L_i v)_c
  for (std::size_t c = 0; c < d; ++c) {
    for (const auto& s : alg.structure_counts(c)) {
      w[s.i][c] += structure_weight(alg, s, c) * v[s.j];
    }
  }
  const Complex norm = v.squaredNorm();
  std::vector<Complex> chi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc = 0;
    for (std::size_t c = 0; c < d; ++c) acc += std::conj(v[static_cast<Eigen::Index>(c)]) * w[i][c];
    chi[i] = acc / norm;
  }
  return chi;
}

double residual_on_representatives(const HeckeAlgebra& alg, const std::vector<Complex>& values) {
  const FiniteGroup& g = alg.group();
  const CosetSpace& space = alg.space();
  const double w = 1.0 / static_cast<double>(space.k_order());
  double worst = 0;
  for (std::size_t a = 0; a < alg.dimension(); ++a) {
    for (std::size_t b = 0; b < alg.dimension(); ++b) {
      const Element x = alg.representative(a), y = alg.representative(b);
      Complex avg = 0;
      for (Element k : space.k_members()) avg += values[alg.class_of(g.mul(g.mul(x, k), y))];
      worst = std::max(worst, std::abs(avg * w - values[a] * values[b]));
    }
  }
  return worst;
}

std::optional<std::vector<Rational>> exact_values_of(const HeckeAlgebra& alg, const std::vector<Complex>& values) {
  std::vector<Rational> q(values.size());
  const auto max_den = static_cast<long long>(std::max<std::size_t>(alg.group().order(), 2)) * 1000;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (std::abs(values[c].imag()) > 1e-9) return std::nullopt;
    if (!rationalize(values[c].real(), max_den, 1e-9, q[c])) return std::nullopt;
  }
  if (q[0] != 1) return std::nullopt;
  const FiniteGroup& g = alg.group();
  const CosetSpace& space = alg.space();
  const Integer k_order(space.k_order());
  for (std::size_t a = 0; a < alg.dimension(); ++a) {
    for (std::size_t b = 0; b < alg.dimension(); ++b) {
      const Element x = alg.representative(a), y = alg.representative(b);
      Rational sum = 0;
      for (Element k : space.k_members()) sum += q[alg.class_of(g.mul(g.mul(x, k), y))];
      if (sum != q[a] * q[b] * k_order) return std::nullopt;
    }
  }
  return q;
}

std::pair<long long, long long> sort_key(Complex v) {
  constexpr double kGrid = 1e8;
  if (std::abs(v) < 1e-9) return {0, 0};
  double turn = std::arg(v) / (2.0 * std::numbers::pi);
  if (turn < 0) turn += 1.0;
  long long a = std::llround(turn * kGrid);
  if (a >= static_cast<long long>(kGrid)) a = 0;
  return {a, std::llround(std::abs(v) * kGrid)};
}

bool is_constant_one(const std::vector<Complex>& values) {
  return std::all_of(values.begin(), values.end(), [](Complex v) { return std::abs(v - 1.0) < 1e-8; });
}

}  // namespace

std::vector<SphericalFunction> spherical_functions(const HeckeAlgebra& algebra) {
  const GelfandCheck gelfand = is_gelfand_pair(algebra);
  if (!gelfand.is_gelfand) {
    const auto [x, y] = *gelfand.witness;
    throw Error(ErrorKind::NotGelfandPair,
                "Hecke algebra is not commutative: basis elements at " + algebra.group().label(x) + " and " +
                    algebra.group().label(y) + " do not commute");
  }
  const std::size_t d = algebra.dimension();

  std::vector<CVector> vectors;
  if (d == 1) {
    vectors.emplace_back(CVector::Ones(1));
  } else {
    // A generic real combination of the commuting operators separates all
    // characters; coincidences are resolved by the successive splitting.
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> coef(1.0, 2.0);
    std::vector<double> w(d);
    for (auto& x : w) x = coef(rng);
    const CMatrix a = combined_operator(algebra, w);
    Eigen::ComplexEigenSolver<CMatrix> solver(a, false);
    const CVector ev = solver.eigenvalues();
    const double scale = 1.0 + ev.cwiseAbs().maxCoeff();
    for (const auto& [value, members] : cluster(ev, 1e-7 * scale)) {
      const auto k = static_cast<Eigen::Index>(members.size());
      const CMatrix shifted = a - value * CMatrix::Identity(a.rows(), a.cols());
      split_eigenspace(algebra, kernel_basis(shifted, k), 1, vectors);
    }
  }
  if (vectors.size() != d) {
    throw Error(ErrorKind::Internal, "found " + std::to_string(vectors.size()) + " characters for a " +
                                         std::to_string(d) + "-dimensional Hecke algebra");
  }

  std::vector<SphericalFunction> out;
  out.reserve(d);
  for (const auto& v : vectors) {
    SphericalFunction f;
    f.eigenvalues = characters_of(algebra, v);
    f.values.resize(d);
    for (std::size_t c = 0; c < d; ++c) f.values[c] = f.eigenvalues[algebra.inverse_class(c)];
    if (auto q = exact_values_of(algebra, f.values)) {
      for (std::size_t c = 0; c < d; ++c) f.values[c] = Complex(static_cast<double>((*q)[c]), 0.0);
      for (std::size_t c = 0; c < d; ++c) f.eigenvalues[c] = f.values[algebra.inverse_class(c)];
      f.exact_values = std::move(q);
    }
    const double res = residual_on_representatives(algebra, f.values);
    if (res > 1e-9) {
      throw Error(ErrorKind::Internal, "spherical function fails the functional equation (residual " +
                                           std::to_string(res) + ")");
    }
    out.push_back(std::move(f));
  }

  auto constant = std::find_if(out.begin(), out.end(), [](const SphericalFunction& f) { return is_constant_one(f.values); });
  if (constant == out.end()) throw Error(ErrorKind::Internal, "constant spherical function not found");
  std::iter_swap(out.begin(), constant);
  std::sort(out.begin() + 1, out.end(), [](const SphericalFunction& a, const SphericalFunction& b) {
    for (std::size_t c = 1; c < a.values.size(); ++c) {
      const auto ka = sort_key(a.values[c]), kb = sort_key(b.values[c]);
      if (ka != kb) return ka < kb;
    }
    return false;
  });
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      double diff = 0;
      for (std::size_t c = 0; c < d; ++c) diff = std::max(diff, std::abs(out[a].values[c] - out[b].values[c]));
      if (diff < 1e-8) throw Error(ErrorKind::Internal, "duplicate spherical functions");
    }
  }
  return out;
}

}  // namespace pompeiu
