#pragma once

// Report builders. Every JSON report carries schema_version; timings are only
// included on request so that identical runs give identical bytes.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pompeiu/euclidean_pompeiu.hpp"
#include "pompeiu/finite_pompeiu.hpp"

namespace pompeiu::harness {

inline constexpr int kSchemaVersion = 1;

struct FiniteCheck {
  std::vector<std::size_t> cosets;
  DecisionReport oracle;
  DecisionReport spectral;
  DecisionReport convolution;
  std::optional<DecisionReport> radial;
  bool agree = true;
};

FiniteCheck run_finite_check(const FiniteAnalyzer& analyzer, std::span<const std::size_t> cosets);

nlohmann::json finite_check_json(const FiniteAnalyzer& analyzer, const FiniteCheck& check, bool timings);
nlohmann::json sweep_summary_json(const FiniteAnalyzer& analyzer, const SweepResult& sweep);
std::string sweep_csv(const SweepResult& sweep);
std::string spherical_csv(const FiniteAnalyzer& analyzer);

nlohmann::json euclid_json(const EuclideanSet& set, const EuclidReport& report, const EuclidOptions& options,
                           bool timings);
std::string landscape_csv(const EuclidReport& report);
std::string residuals_csv(const EuclidReport& report);

/// Shortest round-trip decimal form; fixed across runs and platforms.
std::string format_double(double x);

/// Writes `text` to `path`, or to `out` when path is "-"; throws
/// std::runtime_error when the file cannot be written.
void write_text(const std::string& path, const std::string& text, std::ostream& out);

}  // namespace pompeiu::harness
