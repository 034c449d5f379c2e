#pragma once

// Pompeiu decisions on a finite homogeneous space G/K, three ways:
//   oracle       the definition: no nonzero h on G/K sums to zero over every
//                translate tE (exact rank of the translate incidence matrix);
//   spectral     Z(I) is empty, I the right ideal generated by
//                chi^_E~ * chi_{gK}, g in the transversal;
//   convolution  no spherical f has f * chi^_E~ identically zero.
// For Gelfand pairs all three must agree; the sweep treats any disagreement
// as a hard failure.

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pompeiu/decision.hpp"
#include "pompeiu/hecke.hpp"
#include "pompeiu/parallel.hpp"

namespace pompeiu {

/// Nonzero function on G/K (one value per coset) integrating to zero over every
/// translate of E.
struct KernelWitness {
  std::vector<Rational> values;
};

/// Index into FiniteAnalyzer::spherical().
struct SphericalWitness {
  std::size_t index;
};

struct DecisionReport {
  Verdict verdict = Verdict::Pompeiu;
  Method method = Method::Oracle;
  std::variant<std::monostate, KernelWitness, SphericalWitness> witness;
  std::chrono::nanoseconds elapsed{0};
};

/// Relative zero threshold for floating Phi values: |Phi| < tol (1 + |mu|_1).
inline constexpr double kPhiZeroTolerance = 1e-9;

class FiniteAnalyzer {
 public:
  explicit FiniteAnalyzer(std::shared_ptr<const CosetSpace> space, double zero_tolerance = kPhiZeroTolerance);

  const CosetSpace& space() const noexcept { return algebra_->space(); }
  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const HeckeAlgebra>& algebra_ptr() const noexcept { return algebra_; }

  const GelfandCheck& gelfand() const noexcept { return gelfand_; }
  double zero_tolerance() const noexcept { return tolerance_; }
  /// Throws Error(NotGelfandPair) when the pair is not Gelfand.
  const std::vector<SphericalFunction>& spherical() const;

  /// Sorted, deduplicated copy of E; throws EmptySet / InvalidArgument.
  std::vector<std::size_t> normalize(std::span<const std::size_t> cosets) const;

  DecisionReport oracle(std::span<const std::size_t> cosets) const;
  std::vector<BiinvariantMeasure> ideal_generators(std::span<const std::size_t> cosets) const;
  std::vector<std::size_t> zero_set(const BiinvariantMeasure& mu) const;
  std::vector<std::size_t> zero_set_ideal(std::span<const std::size_t> cosets) const;
  DecisionReport spectral(std::span<const std::size_t> cosets) const;
  DecisionReport convolution(std::span<const std::size_t> cosets) const;
  /// Decides from the single measure chi^_E~ when chi_E~ is K-biinvariant;
  /// nullopt otherwise.
  std::optional<DecisionReport> radial_shortcut(std::span<const std::size_t> cosets) const;

  /// (f * chi^_E~)(x) = sum_{u in E~} f(x u) for every x in G.
  std::vector<Complex> convolve_with_lift(const SphericalFunction& f, std::span<const std::size_t> cosets) const;

  /// Re-verifies the witness carried by a NotPompeiu report.
  bool recheck(std::span<const std::size_t> cosets, const DecisionReport& report) const;

 private:
  bool vanishes(const PhiValue& phi, const BiinvariantMeasure& mu) const;

  std::shared_ptr<const HeckeAlgebra> algebra_;
  GelfandCheck gelfand_;
  double tolerance_;
  std::vector<SphericalFunction> spherical_;
};

struct SubsetOutcome {
  std::uint64_t mask = 0;
  std::vector<std::size_t> cosets;
  Verdict oracle = Verdict::Pompeiu;
  Verdict spectral = Verdict::Pompeiu;
  Verdict convolution = Verdict::Pompeiu;
  std::optional<Verdict> radial;
  std::optional<std::size_t> spherical_witness;
  bool agree = true;
};

struct SweepResult {
  std::vector<SubsetOutcome> rows;
  std::size_t pompeiu_count = 0;
  std::size_t not_pompeiu_count = 0;
  std::size_t disagreements = 0;
  std::size_t radial_applicable = 0;
  std::size_t radial_mismatches = 0;
};

inline constexpr std::size_t kMaxSweepCosets = 20;

/// Every nonempty E (optionally |E| <= max_size) through all methods. Rows are
/// ordered by bitmask regardless of how `parallel` schedules the work.
SweepResult enumerate_all(const FiniteAnalyzer& analyzer, std::optional<std::size_t> max_size = std::nullopt,
                          const ParallelFor& parallel = serial_for);

}  // namespace pompeiu
