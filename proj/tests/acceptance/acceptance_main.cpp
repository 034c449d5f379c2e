// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harness/cli.hpp"
#include "harness/spec.hpp"
#include "pompeiu/error.hpp"
#include "pompeiu/euclidean_pompeiu.hpp"
#include "pompeiu/finite_pompeiu.hpp"
#include "pompeiu/fourier_laplace.hpp"
#include "support.hpp"

namespace {

using namespace pompeiu;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << "CRITERION " << id << ' ' << (ok ? "PASS" : "FAIL") << ": " << detail << std::endl;
  if (!ok) ++failures;
}

template <class F>
void guarded(int id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

struct Instance {
  std::string name;
  std::shared_ptr<const CosetSpace> space;
};

std::vector<Instance> finite_suite() {
  std::vector<Instance> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back({"Z_" + std::to_string(n), test::trivial_space(FiniteGroup::cyclic(n))});
  out.push_back({"S_3/S_2", test::s3_s2()});
  out.push_back({"S_4/S_3", test::sn_sn1(4)});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"D_" + std::to_string(n) + "/<s>", test::dihedral_reflection(n)});
  return out;
}

std::vector<SweepResult> sweeps;

void criterion1() {
  const auto start = Clock::now();
  std::size_t subsets = 0, disagreements = 0;
  std::string worst;
  for (const auto& inst : finite_suite()) {
    const FiniteAnalyzer analyzer(inst.space);
    sweeps.push_back(enumerate_all(analyzer));
    subsets += sweeps.back().rows.size();
    disagreements += sweeps.back().disagreements;
    if (sweeps.back().disagreements) worst += " " + inst.name;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << finite_suite().size() << " instances, " << subsets << " subsets, " << disagreements << " disagreements" << worst
    << ", " << t << " s";
  report(1, disagreements == 0 && t < 60, d.str());
}

void criterion2() {
  std::size_t functions = 0;
  double worst = 0, worst_rev = 0;
  bool ok = true;
  for (const auto& inst : finite_suite()) {
    const auto algebra = HeckeAlgebra::create(inst.space);
    const auto fs = spherical_functions(*algebra);
    if (fs.size() != algebra->dimension()) ok = false;
    for (const auto& f : fs) {
      ++functions;
      if (std::abs(f.values[0] - 1.0) != 0) ok = false;
      worst = std::max(worst, check_spherical(*inst.space, f.table(*algebra)));
      worst_rev = std::max(worst_rev, check_spherical(*inst.space, reverse_function(*algebra, f).table(*algebra)));
    }
  }
  ok = ok && worst < 1e-12 && worst_rev < 1e-12;
  std::ostringstream d;
  d << functions << " spherical functions, counts match double cosets, max residual " << worst << ", reversed "
    << worst_rev;
  report(2, ok, d.str());
}

double j1_root(double a, double b) {
  double fa = std::cyl_bessel_j(1.0, a);
  for (int i = 0; i < 200; ++i) {
    const double m = (a + b) / 2, fm = std::cyl_bessel_j(1.0, m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return (a + b) / 2;
}

void criterion3() {
  const auto start = Clock::now();
  EuclidOptions opts;
  opts.seed = 7;
  opts.motion_count = 100;
  opts.rotations = 64;
  const auto r = euclid_decide(EuclideanSet::ball(2, 1), opts);
  std::vector<double> reference;
  for (double a = 0.05; a < 19.95 && reference.size() < 5; a += 0.05) {
    if ((std::cyl_bessel_j(1.0, a) < 0) != (std::cyl_bessel_j(1.0, a + 0.05) < 0)) reference.push_back(j1_root(a, a + 0.05));
  }
  bool ok = r.verdict == Verdict::NotPompeiu && r.lambda_witnesses.size() >= 5 && reference.size() == 5;
  double root_err = 0, conv = 0, integral = 0;
  for (std::size_t i = 0; ok && i < 5; ++i) {
    root_err = std::max(root_err, std::abs(r.lambda_witnesses[i] - reference[i]));
    const auto& w = r.witness_checks[i];
    ok = ok && w.verified;
    conv = std::max(conv, w.convolution_residual);
    integral = std::max(integral, w.integral_residual);
  }
  const double t = seconds_since(start);
  ok = ok && root_err < 1e-8 && conv < 1e-6 && integral < 1e-6 && t < 120;
  std::ostringstream d;
  d.precision(10);
  d << "witnesses";
  for (std::size_t i = 0; i < std::min<std::size_t>(5, r.lambda_witnesses.size()); ++i) d << ' ' << r.lambda_witnesses[i];
  d.precision(3);
  d << "; max root error " << root_err << ", convolution residual " << conv << ", integral residual over 100 motions "
    << integral << ", " << t << " s";
  report(3, ok, d.str());
}

void criterion4() {
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, EuclideanSet>> sets{
      {"square", EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}})},
      {"triangle", EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, set] : sets) {
    double min_max = INFINITY, at = 0;
    for (int k = 1; k <= 400; ++k) {
      const double lambda = 0.05 * k;
      const auto orbit = complex_sphere_vanishes(set, lambda, 64, 1e-6);
      if (orbit.vanishes) ok = false;
      if (orbit.max_magnitude < min_max) {
        min_max = orbit.max_magnitude;
        at = lambda;
      }
    }
    ok = ok && min_max > 1e-6 * set.volume();
    d << name << " min orbit-max " << min_max << " at lambda " << at << "; ";
  }
  const double t = seconds_since(start);
  d << t << " s";
  report(4, ok && t < 60, d.str());
}

void criterion5() {
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> u(-1, 1), angle(0, 2 * std::numbers::pi);
  std::normal_distribution<double> gauss(0, 1);
  auto random_z = [&](int dim, double re, double im) {
    ComplexVector z(dim);
    for (int k = 0; k < dim; ++k) z[k] = {re * u(rng), im * u(rng)};
    return z;
  };
  auto random_rotation = [&](int dim) {
    if (dim == 2) return RigidMotion::rotation2d(angle(rng));
    double q[4];
    double s = 0;
    for (auto& v : q) {
      v = gauss(rng);
      s += v * v;
    }
    s = std::sqrt(s);
    return RigidMotion::from_quaternion(q[0] / s, q[1] / s, q[2] / s, q[3] / s);
  };
  const std::vector<EuclideanSet> shapes{
      EuclideanSet::ball(2, 1),
      EuclideanSet::annulus(2, 1, 2),
      EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}),
      EuclideanSet::polytope(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
      EuclideanSet::ball(3, 1),
      EuclideanSet::polytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})};
  const Complex i(0, 1);
  auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  double rot = 0, trans = 0, radial = 0, quad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& set = shapes[trial % shapes.size()];
    const int dim = set.dim();
    const auto k = random_rotation(dim);
    const auto z = random_z(dim, 8, 2);
    rot = std::max(rot, rel(fourier_laplace(set.transformed(k), z), fourier_laplace(set, k.rotate_inverse(z))));

    const Point t{3 * u(rng), 3 * u(rng), dim == 3 ? 3 * u(rng) : 0.0};
    const RigidMotion shift(dim, {1, 0, 0, 0, 1, 0, 0, 0, 1}, t);
    trans = std::max(trans, rel(fourier_laplace(set.transformed(shift), z), std::exp(-i * z.dot(t)) * fourier_laplace(set, z)));

    // Radial sets: equal bilinear squares give equal transforms.
    const auto& round = shapes[(trial % 3 == 0) ? 0 : (trial % 3 == 1 ? 1 : 4)];
    const auto zr = random_z(round.dim(), 8, 1.5);
    const auto kr = random_rotation(round.dim());
    ComplexVector w = kr.rotate(zr);
    const double h = 0.5 * u(rng);
    const Complex a = w[0], b = w[1];
    w[0] = a * std::cosh(h) + i * b * std::sinh(h);
    w[1] = -i * a * std::sinh(h) + b * std::cosh(h);
    radial = std::max(radial, rel(fourier_laplace(round, w), fourier_laplace(round, zr)));

    // Closed form against quadrature on balls and squares.
    const auto& q = (trial % 2 == 0) ? shapes[0] : shapes[2];
    const auto zq = random_z(2, 6, 1);
    quad = std::max(quad, std::abs(fourier_laplace(q, zq) - fourier_laplace_quadrature(q, zq)));
  }
  std::ostringstream d;
  d << "200 trials each: rotation " << rot << " (< 1e-10), translation " << trans << " (< 1e-10), radial s-dependence "
    << radial << " (< 1e-10), closed form vs quadrature " << quad << " (< 1e-8)";
  report(5, rot < 1e-10 && trans < 1e-10 && radial < 1e-10 && quad < 1e-8, d.str());
}

void criterion6() {
  std::size_t applicable = 0, mismatches = 0;
  for (const auto& s : sweeps) {
    applicable += s.radial_applicable;
    mismatches += s.radial_mismatches;
  }
  std::ostringstream d;
  d << applicable << " biinvariant subsets over the suite, " << mismatches << " shortcut/spectral mismatches";
  report(6, !sweeps.empty() && applicable > 0 && mismatches == 0, d.str());
}

void criterion7() {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(std::string(POMPEIU_DATA_DIR) + "/sets")) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  bool ok = !files.empty();
  double worst = 0;
  std::size_t reported = 0;
  for (const auto& f : files) {
    const auto set = harness::load_set_spec(f.string());
    const Complex v = fourier_laplace(set, ComplexVector(set.dim()));
    worst = std::max(worst, std::abs(v - set.volume()) / set.volume());
    try {
      (void)complex_sphere_vanishes(set, 0.0);
      ok = false;
    } catch (const Error& e) {
      ok = ok && e.kind() == ErrorKind::LambdaZero;
    }
    EuclidOptions opts;
    opts.seed = 1;
    opts.lambda_lo = 0;
    opts.lambda_hi = 5;
    opts.verify_witnesses = false;
    opts.candidates = {0.0};
    const auto r = euclid_decide(set, opts);
    for (double l : r.lambda_witnesses) ok = ok && l > 0;
    for (const auto& row : r.landscape) ok = ok && row.lambda > 0;
    for (const auto& c : r.candidate_checks) ok = ok && !c.confirmed && !c.orbit_vanishes;
    reported += r.lambda_witnesses.size();
  }
  std::ostringstream d;
  d << files.size() << " shipped shapes, max |L(0) - volume| / volume " << worst << ", " << reported
    << " positive witnesses in [0, 5], lambda = 0 never reported";
  report(7, ok && worst < 1e-12, d.str());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void criterion8() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("pompeiu_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string data = POMPEIU_DATA_DIR;
  const std::vector<std::vector<std::string>> commands{
      {"finite", "sweep", "--group", data + "/groups/d6_reflection.json", "--out", "@sweep.csv", "--summary", "@sweep.json"},
      {"finite", "sweep", "--group", data + "/groups/z8.json", "--out", "@z8.csv"},
      {"finite", "check", "--group", data + "/groups/s4_s3.json", "--set", "0,1", "--out", "@check.json"},
      {"euclid", "decide", "--set", data + "/sets/unit_disk.json", "--lambda-range", "0:20", "--grid", "0.05",
       "--rotations", "64", "--seed", "7", "--out", "@disk.json", "--landscape", "@disk_land.csv", "--residuals",
       "@disk_res.csv"},
      {"euclid", "decide", "--set", data + "/sets/unit_square.json", "--lambda-range", "0:20", "--seed", "7", "--out",
       "@square.json", "--landscape", "@square_land.csv"},
      {"euclid", "decide", "--set", data + "/sets/unit_ball3.json", "--lambda-range", "0:8", "--seed", "3", "--motions",
       "20", "--out", "@ball.json"},
  };
  std::string baseline;
  bool ok = true;
  int runs = 0;
  for (const char* width : {"1", "4", "16"}) {
    for (int repeat = 0; repeat < 2; ++repeat) {
      const fs::path run_dir = dir / (std::string("w") + width + "_" + std::to_string(repeat));
      fs::create_directories(run_dir);
      std::string combined;
      for (const auto& cmd : commands) {
        std::vector<std::string> args{"pompeiu", "--threads", width};
        std::vector<fs::path> outputs;
        for (const auto& a : cmd) {
          if (!a.empty() && a[0] == '@') {
            outputs.push_back(run_dir / a.substr(1));
            args.push_back(outputs.back().string());
          } else {
            args.push_back(a);
          }
        }
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        if (harness::run_cli(static_cast<int>(argv.size()), argv.data(), out, err) != 0) {
          ok = false;
          std::cerr << err.str();
        }
        for (const auto& p : outputs) combined += p.filename().string() + "\n" + slurp(p);
      }
      ++runs;
      if (baseline.empty()) {
        baseline = combined;
      } else if (combined != baseline) {
        ok = false;
      }
    }
  }
  fs::remove_all(dir);
  std::ostringstream d;
  d << runs << " runs at widths 1, 4, 16 (two each), " << commands.size() << " commands, " << baseline.size()
    << " bytes per run, " << (ok ? "byte-identical" : "outputs differ");
  report(8, ok && !baseline.empty(), d.str());
}

}  // namespace

int main() {
  const auto start = Clock::now();
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << " ("
            << seconds_since(start) << " s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
