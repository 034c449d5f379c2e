#pragma once

// The Hecke algebra of K-biinvariant measures on a finite group G.
//
// Conventions (used consistently by every module):
//   * Haar measure on G is counting measure, and dk is the uniform average
//     over K.
//   * A measure is stored by its per-element density mu(x); for a
//     biinvariant measure this is one number per double coset.
//   * Pairing <f, mu> = sum_x f(x) mu(x); reversal mu^(x) = mu(x^-1).
//   * Convolution (mu * nu)(z) = sum_x mu(x) nu(x^-1 z).
//   * The Hecke basis element e_i = delta_g^# (g in the i-th double coset)
//     is the uniform probability measure on that double coset; e_0 is the
//     unit (density 1/|K| on K).

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pompeiu/exact_linalg.hpp"
#include "pompeiu/finite_group.hpp"

namespace pompeiu {

using Complex = std::complex<double>;

class BiinvariantMeasure;

class HeckeAlgebra {
 public:
  /// One structure count: #{x in D_i : x^-1 z in D_j} for z the
  /// representative of the output class.
  struct StructureCount {
    std::uint32_t i;
    std::uint32_t j;
    std::uint64_t count;
  };

  static std::shared_ptr<const HeckeAlgebra> create(std::shared_ptr<const CosetSpace> space);

  const CosetSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const CosetSpace>& space_ptr() const noexcept { return space_; }
  const FiniteGroup& group() const noexcept { return space_->group(); }
  const DoubleCosetPartition& partition() const noexcept { return partition_; }

  std::size_t dimension() const noexcept { return partition_.class_count(); }
  std::size_t class_of(Element x) const { return partition_.class_of[x]; }
  std::size_t class_size(std::size_t c) const { return partition_.class_sizes[c]; }
  Element representative(std::size_t c) const { return partition_.representatives[c]; }
  /// Class of x^-1 for x in class c.
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }

  std::span<const StructureCount> structure_counts(std::size_t out_class) const {
    return structure_[out_class];
  }
  /// Coefficient of e_c in e_i * e_j.
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t c) const;

  std::shared_ptr<const HeckeAlgebra> self() const { return self_.lock(); }

 private:
  HeckeAlgebra() = default;

  std::shared_ptr<const CosetSpace> space_;
  DoubleCosetPartition partition_;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::vector<StructureCount>> structure_;
  std::weak_ptr<const HeckeAlgebra> self_;
};

class BiinvariantMeasure {
 public:
  BiinvariantMeasure(std::shared_ptr<const HeckeAlgebra> algebra, std::vector<Complex> density);
  BiinvariantMeasure(std::shared_ptr<const HeckeAlgebra> algebra, std::vector<Rational> exact_density);

  /// Unit delta_e^#: density 1/|K| on K.
  static BiinvariantMeasure unit(const std::shared_ptr<const HeckeAlgebra>& algebra);
  /// delta_g^#, the uniform probability measure on KgK.
  static BiinvariantMeasure delta_sharp(const std::shared_ptr<const HeckeAlgebra>& algebra, Element g);
  /// The normalized indicator chi_K / |K|; equal to unit().
  static BiinvariantMeasure normalized_indicator(const std::shared_ptr<const HeckeAlgebra>& algebra);
  /// Hecke basis element e_i.
  static BiinvariantMeasure basis(const std::shared_ptr<const HeckeAlgebra>& algebra, std::size_t i);
  /// Accepts a per-element density table only if it is exactly biinvariant.
  static BiinvariantMeasure from_table(const std::shared_ptr<const HeckeAlgebra>& algebra,
                                       std::span<const Complex> table);
  static BiinvariantMeasure from_exact_table(const std::shared_ptr<const HeckeAlgebra>& algebra,
                                             std::span<const Rational> table);

  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const HeckeAlgebra>& algebra_ptr() const noexcept { return algebra_; }

  /// Density per double-coset class.
  std::span<const Complex> density() const noexcept { return density_; }
  /// Density times |K|: the coefficient that makes delta_e have coefficient 1
  /// on K.
  Complex coefficient(std::size_t c) const;
  const std::optional<std::vector<Rational>>& exact_density() const noexcept { return exact_; }
  bool is_exact() const noexcept { return exact_.has_value(); }

  std::vector<Complex> table() const;
  /// Total variation sum_x |mu(x)|.
  double l1_norm() const;
  BiinvariantMeasure scaled(Complex c) const;

 private:
  std::shared_ptr<const HeckeAlgebra> algebra_;
  std::vector<Complex> density_;
  std::optional<std::vector<Rational>> exact_;
};

BiinvariantMeasure convolve(const BiinvariantMeasure& mu, const BiinvariantMeasure& nu);
BiinvariantMeasure reverse_measure(const BiinvariantMeasure& mu);

/// f^#(x) = avg_{l,k in K} f(l x k).
std::vector<Complex> project_biinvariant(const CosetSpace& space, std::span<const Complex> f);

/// f^(x) = f(x^-1).
std::vector<Complex> reverse_function(const FiniteGroup& group, std::span<const Complex> f);

struct GelfandCheck {
  bool is_gelfand = false;
  /// Representatives of two basis double cosets whose basis elements do not
  /// commute; present iff !is_gelfand.
  std::optional<std::pair<Element, Element>> witness;
};

GelfandCheck is_gelfand_pair(const HeckeAlgebra& algebra);

/// A spherical function of a Gelfand pair, tabulated per double coset.
struct SphericalFunction {
  std::vector<Complex> values;
  /// Phi_f(e_i) for every Hecke basis element.
  std::vector<Complex> eigenvalues;
  /// Set when every value is rational and the functional equation was
  /// verified in exact arithmetic.
  std::optional<std::vector<Rational>> exact_values;

  bool is_exact() const noexcept { return exact_values.has_value(); }
  std::vector<Complex> table(const HeckeAlgebra& algebra) const;
};

/// All spherical functions of a Gelfand pair, one per double coset. The
/// constant function is always index 0; the rest are ordered by the argument
/// (then modulus) of their values on classes 1, 2, ... so that for (Z_n, {e})
/// index k is the character x -> exp(2 pi i k x / n).
///
/// Throws Error(NotGelfandPair) if the Hecke algebra is not commutative.
std::vector<SphericalFunction> spherical_functions(const HeckeAlgebra& algebra);

/// max over x, y in G of |avg_k f(x k y) - f(x) f(y)| for a value table f on G.
double check_spherical(const CosetSpace& space, std::span<const Complex> f);

/// Biinvariant, f(e) = 1 and functional-equation residual below tolerance.
bool is_spherical(const CosetSpace& space, std::span<const Complex> f, double tolerance = 1e-10);

SphericalFunction reverse_function(const HeckeAlgebra& algebra, const SphericalFunction& f);

struct PhiValue {
  Complex value;
  std::optional<Rational> exact;
};

/// Phi_f(mu) = <f, mu^> = sum_x f(x^-1) mu(x). Exact when both arguments are.
PhiValue phi_hom(const SphericalFunction& f, const BiinvariantMeasure& mu);

}  // namespace pompeiu
