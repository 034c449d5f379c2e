#include "harness/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pompeiu::harness {
namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json method_json(const DecisionReport& r, bool timings) {
  json j;
  j["verdict"] = to_string(r.verdict);
  if (const auto* kw = std::get_if<KernelWitness>(&r.witness)) {
    json values = json::array();
    for (const auto& v : kw->values) values.push_back(to_string(v));
    j["kernel_witness"] = values;
  } else if (const auto* sw = std::get_if<SphericalWitness>(&r.witness)) {
    j["spherical_witness"] = sw->index;
  }
  if (timings) j["elapsed_ns"] = r.elapsed.count();
  return j;
}

std::string cosets_field(const std::vector<std::size_t>& cosets) {
  std::string s;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(cosets[i]);
  }
  return s;
}

json witness_json(const WitnessCheck& w) {
  json j;
  j["lambda"] = complex_json(w.lambda);
  j["orbit_max"] = w.orbit_max;
  j["orbit_vanishes"] = w.orbit_vanishes;
  j["verified"] = w.verified;
  j["convolution_residual"] = w.verified ? json(w.convolution_residual) : json(nullptr);
  j["integral_residual"] = w.verified ? json(w.integral_residual) : json(nullptr);
  j["confirmed"] = w.confirmed;
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

FiniteCheck run_finite_check(const FiniteAnalyzer& analyzer, std::span<const std::size_t> cosets) {
  analyzer.spherical();
  FiniteCheck c;
  c.cosets = analyzer.normalize(cosets);
  c.oracle = analyzer.oracle(c.cosets);
  c.spectral = analyzer.spectral(c.cosets);
  c.convolution = analyzer.convolution(c.cosets);
  c.radial = analyzer.radial_shortcut(c.cosets);
  c.agree = c.oracle.verdict == c.spectral.verdict && c.oracle.verdict == c.convolution.verdict &&
            (!c.radial || c.radial->verdict == c.spectral.verdict);
  return c;
}

json finite_check_json(const FiniteAnalyzer& analyzer, const FiniteCheck& check, bool timings) {
  const auto& space = analyzer.space();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "finite check";
  j["group"] = space.group().name();
  j["subgroup"] = space.subgroup_label();
  j["group_order"] = space.group().order();
  j["coset_count"] = space.coset_count();
  j["double_coset_count"] = analyzer.algebra().dimension();
  j["gelfand"] = analyzer.gelfand().is_gelfand;
  j["E"] = check.cosets;
  j["verdict"] = to_string(check.oracle.verdict);
  j["agreement"] = check.agree;
  auto pompeiu = [](const DecisionReport& r) { return r.verdict == Verdict::Pompeiu; };
  j["verdicts"] = {{"oracle", pompeiu(check.oracle)},
                   {"spectral", pompeiu(check.spectral)},
                   {"convolution", pompeiu(check.convolution)},
                   {"radial_shortcut", check.radial ? json(pompeiu(*check.radial)) : json(nullptr)}};
  json methods;
  methods["oracle"] = method_json(check.oracle, timings);
  methods["spectral"] = method_json(check.spectral, timings);
  methods["convolution"] = method_json(check.convolution, timings);
  methods["radial_shortcut"] = check.radial ? method_json(*check.radial, timings) : json(nullptr);
  j["methods"] = methods;
  j["witness"] = nullptr;
  if (const auto* sw = std::get_if<SphericalWitness>(&check.spectral.witness)) {
    const auto& f = analyzer.spherical()[sw->index];
    json values = json::array();
    for (auto v : f.values) values.push_back(complex_json(v));
    json w = {{"kind", "spherical_function"}, {"index", sw->index}, {"values_by_double_coset", values}};
    if (f.exact_values) {
      json exact = json::array();
      for (const auto& q : *f.exact_values) exact.push_back(to_string(q));
      w["exact_values"] = exact;
    }
    j["witness"] = w;
  } else if (const auto* kw = std::get_if<KernelWitness>(&check.oracle.witness)) {
    json values = json::array();
    for (const auto& v : kw->values) values.push_back(to_string(v));
    j["witness"] = {{"kind", "kernel_function"}, {"values_by_coset", values}};
  }
  j["tolerances"] = {{"phi_zero", analyzer.zero_tolerance()}};
  return j;
}

json sweep_summary_json(const FiniteAnalyzer& analyzer, const SweepResult& sweep) {
  const auto& space = analyzer.space();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "finite sweep";
  j["group"] = space.group().name();
  j["subgroup"] = space.subgroup_label();
  j["coset_count"] = space.coset_count();
  j["double_coset_count"] = analyzer.algebra().dimension();
  j["rows"] = sweep.rows.size();
  j["pompeiu"] = sweep.pompeiu_count;
  j["not_pompeiu"] = sweep.not_pompeiu_count;
  j["disagreements"] = sweep.disagreements;
  j["radial_applicable"] = sweep.radial_applicable;
  j["radial_mismatches"] = sweep.radial_mismatches;
  return j;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "mask,cosets,oracle,spectral,convolution,radial,spherical_witness,agree\n";
  for (const auto& r : sweep.rows) {
    out << r.mask << ',' << cosets_field(r.cosets) << ',' << to_string(r.oracle) << ',' << to_string(r.spectral)
        << ',' << to_string(r.convolution) << ',' << (r.radial ? to_string(*r.radial) : "") << ',';
    if (r.spherical_witness) out << *r.spherical_witness;
    out << ',' << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string spherical_csv(const FiniteAnalyzer& analyzer) {
  const auto& alg = analyzer.algebra();
  std::ostringstream out;
  out << "function,class,representative,re,im,exact\n";
  const auto& fs = analyzer.spherical();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t c = 0; c < alg.dimension(); ++c) {
      out << i << ',' << c << ',' << '"' << alg.group().label(alg.representative(c)) << '"' << ','
          << format_double(fs[i].values[c].real()) << ',' << format_double(fs[i].values[c].imag()) << ',';
      if (fs[i].exact_values) out << to_string((*fs[i].exact_values)[c]);
      out << '\n';
    }
  }
  return out.str();
}

json euclid_json(const EuclideanSet& set, const EuclidReport& report, const EuclidOptions& options, bool timings) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "euclid decide";
  j["set"] = {{"kind", set.kind()}, {"dim", set.dim()}, {"volume", set.volume()}, {"radial", report.radial}};
  j["verdict"] = to_string(report.verdict);
  j["method"] = to_string(report.method);
  j["lambda_witnesses"] = report.lambda_witnesses;
  j["searched_range"] = {options.lambda_lo, options.lambda_hi};
  j["grid"] = options.grid;
  j["rotations"] = report.rotations;
  j["seed"] = options.seed;
  j["motions"] = options.motion_count;
  j["sample_points"] = options.sample_count;
  j["tolerances"] = {{"vanish_relative_to_volume", options.vanish_tolerance},
                     {"witness", options.witness_tolerance},
                     {"quadrature", options.quadrature.tolerance},
                     {"root_bisection", 1e-10},
                     {"imag_cap", options.imag_cap}};
  json checks = json::array();
  for (const auto& w : report.witness_checks) checks.push_back(witness_json(w));
  j["witness_checks"] = checks;
  json cands = json::array();
  for (const auto& w : report.candidate_checks) cands.push_back(witness_json(w));
  j["candidate_checks"] = cands;
  double min_max = INFINITY;
  double arg = 0;
  for (const auto& row : report.landscape) {
    if (row.orbit_max < min_max) {
      min_max = row.orbit_max;
      arg = row.lambda;
    }
  }
  j["landscape_min"] = report.landscape.empty() ? json(nullptr) : json({{"lambda", arg}, {"orbit_max", min_max}});
  j["caveats"] = report.caveats;
  if (timings) j["elapsed_ns"] = report.elapsed.count();
  return j;
}

std::string landscape_csv(const EuclidReport& report) {
  std::ostringstream out;
  out << "lambda,orbit_max,orbit_min\n";
  for (const auto& r : report.landscape) {
    out << format_double(r.lambda) << ',' << format_double(r.orbit_max) << ',' << format_double(r.orbit_min) << '\n';
  }
  return out.str();
}

std::string residuals_csv(const EuclidReport& report) {
  std::ostringstream out;
  out << "kind,lambda_re,lambda_im,orbit_max,convolution_residual,integral_residual,confirmed\n";
  auto row = [&](const char* kind, const WitnessCheck& w) {
    out << kind << ',' << format_double(w.lambda.real()) << ',' << format_double(w.lambda.imag()) << ','
        << format_double(w.orbit_max) << ',' << (w.verified ? format_double(w.convolution_residual) : "") << ','
        << (w.verified ? format_double(w.integral_residual) : "") << ',' << (w.confirmed ? "true" : "false") << '\n';
  };
  for (const auto& w : report.witness_checks) row("root", w);
  for (const auto& w : report.candidate_checks) row("candidate", w);
  return out.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace pompeiu::harness
