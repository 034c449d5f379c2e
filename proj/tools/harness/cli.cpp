#include "harness/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harness/executor.hpp"
#include "harness/report.hpp"
#include "harness/spec.hpp"
#include "pompeiu/error.hpp"

namespace pompeiu::harness {
namespace {

struct Shared {
  std::size_t threads = 0;
  bool timings = false;
};

struct FiniteArgs {
  std::string group;
  std::string set;
  std::string out = "-";
  std::string summary;
  std::optional<std::size_t> max_size;
  double zero_tolerance = kPhiZeroTolerance;
};

struct EuclidArgs {
  std::string set;
  std::string range = "0:20";
  std::string out = "-";
  std::string landscape;
  std::string residuals;
  std::vector<std::string> candidates;
  std::optional<std::uint64_t> seed;
  EuclidOptions options;
  bool no_verify = false;
};

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGelfandPair: return kExitNotGelfand;
    case ErrorKind::QuadratureNotConverged: return kExitQuadrature;
    case ErrorKind::SpaceTooLarge:
    case ErrorKind::OrderCapExceeded: return kExitSpec;
    default: return kExitFailure;
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Spec loading failures of any kind map onto exit code 2.
template <class F>
auto load_spec(F&& f) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
}

int finite_check(const FiniteArgs& a, const Shared&, std::ostream& out, bool timings) {
  const auto space = load_spec([&] { return load_group_spec(a.group); });
  const FiniteAnalyzer analyzer(space, a.zero_tolerance);
  const auto cosets = load_spec([&] { return analyzer.normalize(parse_coset_list(a.set)); });
  const auto result = run_finite_check(analyzer, cosets);
  write_text(a.out, dump(finite_check_json(analyzer, result, timings)), out);
  return result.agree ? kExitOk : kExitDisagreement;
}

int finite_sweep(const FiniteArgs& a, const Shared& s, std::ostream& out) {
  const auto space = load_spec([&] { return load_group_spec(a.group); });
  const FiniteAnalyzer analyzer(space, a.zero_tolerance);
  const auto sweep = enumerate_all(analyzer, a.max_size, make_executor(effective_threads(s.threads)));
  write_text(a.out, sweep_csv(sweep), out);
  if (!a.summary.empty()) write_text(a.summary, dump(sweep_summary_json(analyzer, sweep)), out);
  return sweep.disagreements == 0 ? kExitOk : kExitDisagreement;
}

int finite_spherical(const FiniteArgs& a, std::ostream& out) {
  const auto space = load_spec([&] { return load_group_spec(a.group); });
  const FiniteAnalyzer analyzer(space, a.zero_tolerance);
  write_text(a.out, spherical_csv(analyzer), out);
  return kExitOk;
}

int euclid_decide_cmd(EuclidArgs a, const Shared& s, std::ostream& out) {
  if (!a.seed) throw SpecError("--seed is required");
  const auto set = load_spec([&] { return load_set_spec(a.set); });
  const auto [lo, hi] = parse_range(a.range);
  a.options.lambda_lo = lo;
  a.options.lambda_hi = hi;
  a.options.seed = *a.seed;
  a.options.verify_witnesses = !a.no_verify;
  for (const auto& c : a.candidates) a.options.candidates.push_back(parse_complex(c));
  if (!(lo >= 0) || !(hi > lo)) throw SpecError("lambda range must satisfy 0 <= lo < hi");
  if (!(a.options.grid > 0)) throw SpecError("--grid must be positive");
  const auto report = euclid_decide(set, a.options, make_executor(effective_threads(s.threads)));
  write_text(a.out, dump(euclid_json(set, report, a.options, s.timings)), out);
  if (!a.landscape.empty()) write_text(a.landscape, landscape_csv(report), out);
  if (!a.residuals.empty()) write_text(a.residuals, residuals_csv(report), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pompeiu property decisions on finite Gelfand pairs and in R^n"};
  app.require_subcommand(1);
  Shared shared;
  app.add_option("--threads", shared.threads, "worker threads (0 = hardware; capped by POMPEIU_THREADS)");
  app.add_flag("--timings", shared.timings, "include elapsed times in JSON reports");

  FiniteArgs fa;
  auto* finite = app.add_subcommand("finite", "finite homogeneous spaces G/K");
  finite->require_subcommand(1);
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", fa.group, "group spec JSON")->required();
    c->add_option("--out", fa.out, "output path, - for stdout");
    c->add_option("--zero-tol", fa.zero_tolerance, "relative zero threshold for floating Phi values");
  };
  auto* check = finite->add_subcommand("check", "decide one subset E of G/K by all methods");
  add_group(check);
  check->add_option("--set", fa.set, "comma-separated coset indices")->required();
  auto* sweep = finite->add_subcommand("sweep", "all nonempty subsets of G/K");
  add_group(sweep);
  sweep->add_option("--summary", fa.summary, "summary JSON path");
  sweep->add_option("--max-size", fa.max_size, "only subsets with at most this many cosets");
  auto* spherical = finite->add_subcommand("spherical", "tabulate spherical functions");
  add_group(spherical);

  EuclidArgs ea;
  auto* euclid = app.add_subcommand("euclid", "compact sets in R^2 and R^3");
  euclid->require_subcommand(1);
  auto* decide = euclid->add_subcommand("decide", "search for Pompeiu failures");
  decide->add_option("--set", ea.set, "set spec JSON")->required();
  decide->add_option("--lambda-range", ea.range, "LO:HI");
  decide->add_option("--grid", ea.options.grid, "lambda grid step");
  decide->add_option("--rotations", ea.options.rotations, "rotation samples (0 = 64 in R^2, 72 in R^3)");
  decide->add_option("--seed", ea.seed, "seed for the random rigid motions");
  decide->add_option("--out", ea.out, "report path, - for stdout");
  decide->add_option("--landscape", ea.landscape, "CSV of (lambda, orbit max |L|)");
  decide->add_option("--residuals", ea.residuals, "CSV of witness residuals");
  decide->add_option("--candidate", ea.candidates, "extra lambda to test, RE or RE:IM (repeatable)");
  decide->add_option("--vanish-tol", ea.options.vanish_tolerance, "orbit threshold relative to the volume");
  decide->add_option("--witness-tol", ea.options.witness_tolerance, "max residual accepted for a witness");
  decide->add_option("--quad-tol", ea.options.quadrature.tolerance, "quadrature tolerance");
  decide->add_option("--motions", ea.options.motion_count, "random rigid motions per witness");
  decide->add_option("--samples", ea.options.sample_count, "convolution sample points per witness");
  decide->add_option("--imag-cap", ea.options.imag_cap, "cap on |Im z|");
  decide->add_flag("--no-verify", ea.no_verify, "skip quadrature verification of witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpec;
  }

  try {
    if (*check) return finite_check(fa, shared, out, shared.timings);
    if (*sweep) return finite_sweep(fa, shared, out);
    if (*spherical) return finite_spherical(fa, out);
    if (*decide) return euclid_decide_cmd(ea, shared, out);
    err << app.help();
    return kExitSpec;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace pompeiu::harness
