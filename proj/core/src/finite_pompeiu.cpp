#include "pompeiu/finite_pompeiu.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pompeiu/error.hpp"
#include "pompeiu/exact_linalg.hpp"

namespace pompeiu {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

std::vector<bool> lift_mask(const CosetSpace& space, std::span<const std::size_t> cosets) {
  std::vector<bool> in_e(space.coset_count(), false);
  for (auto c : cosets) in_e[c] = true;
  std::vector<bool> lifted(space.group().order(), false);
  for (Element x = 0; x < space.group().order(); ++x) lifted[x] = in_e[space.coset_of(x)];
  return lifted;
}

// Distinct indicators of gE on G/K over all g in G, in order of first
// appearance.
std::vector<std::vector<bool>> translate_rows(const CosetSpace& space, std::span<const std::size_t> cosets) {
  std::vector<std::vector<bool>> rows;
  std::set<std::vector<bool>> seen;
  for (Element g = 0; g < space.group().order(); ++g) {
    std::vector<bool> row(space.coset_count(), false);
    for (auto c : cosets) row[space.act(g, c)] = true;
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pompeiu: return "Pompeiu";
    case Verdict::NotPompeiu: return "NotPompeiu";
    case Verdict::NoFailureFoundInRange: return "NoFailureFoundInRange";
  }
  return "Unknown";
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Spectral: return "spectral";
    case Method::Convolution: return "convolution";
    case Method::RadialShortcut: return "radial_shortcut";
    case Method::EuclideanSearch: return "euclidean_search";
  }
  return "unknown";
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

FiniteAnalyzer::FiniteAnalyzer(std::shared_ptr<const CosetSpace> space, double zero_tolerance)
    : algebra_(HeckeAlgebra::create(std::move(space))),
      gelfand_(is_gelfand_pair(*algebra_)),
      tolerance_(zero_tolerance) {
  if (!(zero_tolerance > 0)) throw Error(ErrorKind::InvalidArgument, "zero tolerance must be positive");
  if (gelfand_.is_gelfand) spherical_ = spherical_functions(*algebra_);
}

const std::vector<SphericalFunction>& FiniteAnalyzer::spherical() const {
  if (!gelfand_.is_gelfand) {
    const auto [x, y] = *gelfand_.witness;
    throw Error(ErrorKind::NotGelfandPair, "(" + algebra_->group().name() + ", " + space().subgroup_label() +
                                               ") is not a Gelfand pair: " + algebra_->group().label(x) +
                                               " and " + algebra_->group().label(y) + " do not commute");
  }
  return spherical_;
}

std::vector<std::size_t> FiniteAnalyzer::normalize(std::span<const std::size_t> cosets) const {
  std::vector<std::size_t> e(cosets.begin(), cosets.end());
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  if (e.empty()) throw Error(ErrorKind::EmptySet, "E must be nonempty");
  if (e.back() >= space().coset_count()) {
    throw Error(ErrorKind::InvalidArgument, "coset index " + std::to_string(e.back()) + " out of range (" +
                                                std::to_string(space().coset_count()) + " cosets)");
  }
  return e;
}

DecisionReport FiniteAnalyzer::oracle(std::span<const std::size_t> cosets) const {
  const auto start = Clock::now();
  const auto e = normalize(cosets);
  const CosetSpace& sp = space();
  const std::size_t m = sp.coset_count();
  const auto rows = translate_rows(sp, e);
  IntegerMatrix a(rows.size(), m, Integer(0));
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t c = 0; c < m; ++c)
      if (rows[t][c]) a(t, c) = 1;
  DecisionReport r;
  r.method = Method::Oracle;
  if (exact_rank(a) == m) {
    r.verdict = Verdict::Pompeiu;
  } else {
    RationalMatrix q(rows.size(), m, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) q(i, j) = Rational(a(i, j));
    auto kernel = exact_nullspace(std::move(q));
    r.verdict = Verdict::NotPompeiu;
    r.witness = KernelWitness{std::move(kernel.front())};
  }
  r.elapsed = since(start);
  return r;
}

std::vector<BiinvariantMeasure> FiniteAnalyzer::ideal_generators(std::span<const std::size_t> cosets) const {
  const auto e = normalize(cosets);
  const CosetSpace& sp = space();
  const FiniteGroup& g = sp.group();
  const auto lifted = lift_set(sp, e);
  const Integer k_order(sp.k_order());
  std::vector<BiinvariantMeasure> gens;
  gens.reserve(sp.coset_count());
  std::vector<std::int64_t> counts(g.order());
  for (std::size_t t = 0; t < sp.coset_count(); ++t) {
    // (chi^_E~ * chi_{gK})(z) = #{u in E~ : u z in gK}; the normalized indicator
    // of gK divides this by |K|.
    for (Element z = 0; z < g.order(); ++z) {
      std::int64_t n = 0;
      for (Element u : lifted) n += sp.coset_of(g.mul(u, z)) == t ? 1 : 0;
      counts[z] = n;
    }
    std::vector<Rational> density(algebra_->dimension());
    for (std::size_t c = 0; c < density.size(); ++c) {
      density[c] = Rational(Integer(counts[algebra_->representative(c)]), k_order);
    }
    for (Element z = 0; z < g.order(); ++z) {
      if (counts[z] != counts[algebra_->representative(algebra_->class_of(z))]) {
        throw Error(ErrorKind::Internal, "ideal generator is not K-biinvariant");
      }
    }
    gens.emplace_back(algebra_, std::move(density));
  }
  return gens;
}

bool FiniteAnalyzer::vanishes(const PhiValue& phi, const BiinvariantMeasure& mu) const {
  if (phi.exact) return *phi.exact == 0;
  return std::abs(phi.value) < tolerance_ * (1.0 + mu.l1_norm());
}

std::vector<std::size_t> FiniteAnalyzer::zero_set(const BiinvariantMeasure& mu) const {
  const auto& fs = spherical();
  if (&mu.algebra() != algebra_.get()) throw Error(ErrorKind::SpaceMismatch, "measure from another space");
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (vanishes(phi_hom(fs[i], mu), mu)) z.push_back(i);
  }
  return z;
}

std::vector<std::size_t> FiniteAnalyzer::zero_set_ideal(std::span<const std::size_t> cosets) const {
  const auto& fs = spherical();
  const auto gens = ideal_generators(cosets);
  std::vector<bool> alive(fs.size(), true);
  for (const auto& mu : gens) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (alive[i] && !vanishes(phi_hom(fs[i], mu), mu)) alive[i] = false;
    }
  }
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (alive[i]) z.push_back(i);
  return z;
}

DecisionReport FiniteAnalyzer::spectral(std::span<const std::size_t> cosets) const {
  const auto start = Clock::now();
  const auto z = zero_set_ideal(cosets);
  DecisionReport r;
  r.method = Method::Spectral;
  if (z.empty()) {
    r.verdict = Verdict::Pompeiu;
  } else {
    r.verdict = Verdict::NotPompeiu;
    r.witness = SphericalWitness{z.front()};
  }
  r.elapsed = since(start);
  return r;
}

std::vector<Complex> FiniteAnalyzer::convolve_with_lift(const SphericalFunction& f,
                                                        std::span<const std::size_t> cosets) const {
  const auto e = normalize(cosets);
  const CosetSpace& sp = space();
  const FiniteGroup& g = sp.group();
  const auto lifted = lift_set(sp, e);
  std::vector<Complex> out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Complex acc = 0;
    for (Element u : lifted) acc += f.values[algebra_->class_of(g.mul(x, u))];
    out[x] = acc;
  }
  return out;
}

namespace {

bool convolution_vanishes(const HeckeAlgebra& alg, const SphericalFunction& f, std::span<const Element> lifted,
                          double tolerance) {
  const FiniteGroup& g = alg.group();
  if (f.exact_values) {
    const auto& q = *f.exact_values;
    for (Element x = 0; x < g.order(); ++x) {
      Rational acc = 0;
      for (Element u : lifted) acc += q[alg.class_of(g.mul(x, u))];
      if (acc != 0) return false;
    }
    return true;
  }
  const double tol = tolerance * (1.0 + static_cast<double>(lifted.size()));
  for (Element x = 0; x < g.order(); ++x) {
    Complex acc = 0;
    for (Element u : lifted) acc += f.values[alg.class_of(g.mul(x, u))];
    if (std::abs(acc) >= tol) return false;
  }
  return true;
}

}  // namespace

DecisionReport FiniteAnalyzer::convolution(std::span<const std::size_t> cosets) const {
  const auto start = Clock::now();
  const auto& fs = spherical();
  const auto e = normalize(cosets);
  const auto lifted = lift_set(space(), e);
  DecisionReport r;
  r.method = Method::Convolution;
  r.verdict = Verdict::Pompeiu;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (convolution_vanishes(*algebra_, fs[i], lifted, tolerance_)) {
      r.verdict = Verdict::NotPompeiu;
      r.witness = SphericalWitness{i};
      break;
    }
  }
  r.elapsed = since(start);
  return r;
}

std::optional<DecisionReport> FiniteAnalyzer::radial_shortcut(std::span<const std::size_t> cosets) const {
  const auto start = Clock::now();
  spherical();
  const auto e = normalize(cosets);
  const CosetSpace& sp = space();
  const FiniteGroup& g = sp.group();
  const auto mask = lift_mask(sp, e);
  // chi_E~ is right K-invariant by construction; biinvariance needs the left side.
  for (Element u = 0; u < g.order(); ++u) {
    if (!mask[u]) continue;
    for (Element k : sp.k_members()) {
      if (!mask[g.mul(k, u)]) return std::nullopt;
    }
  }
  std::vector<Rational> density(algebra_->dimension(), Rational(0));
  for (std::size_t c = 0; c < density.size(); ++c) {
    // chi^_E~(x) = chi_E~(x^-1)
    if (mask[g.inv(algebra_->representative(c))]) density[c] = 1;
  }
  const BiinvariantMeasure mu(algebra_, std::move(density));
  const auto z = zero_set(mu);
  DecisionReport r;
  r.method = Method::RadialShortcut;
  if (z.empty()) {
    r.verdict = Verdict::Pompeiu;
  } else {
    r.verdict = Verdict::NotPompeiu;
    r.witness = SphericalWitness{z.front()};
  }
  r.elapsed = since(start);
  return r;
}

bool FiniteAnalyzer::recheck(std::span<const std::size_t> cosets, const DecisionReport& report) const {
  if (report.verdict != Verdict::NotPompeiu) return true;
  const auto e = normalize(cosets);
  if (const auto* kw = std::get_if<KernelWitness>(&report.witness)) {
    const CosetSpace& sp = space();
    if (kw->values.size() != sp.coset_count()) return false;
    if (std::all_of(kw->values.begin(), kw->values.end(), [](const Rational& v) { return v == 0; })) return false;
    for (const auto& row : translate_rows(sp, e)) {
      Rational sum = 0;
      for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c]) sum += kw->values[c];
      if (sum != 0) return false;
    }
    return true;
  }
  if (const auto* sw = std::get_if<SphericalWitness>(&report.witness)) {
    const auto& fs = spherical();
    if (sw->index >= fs.size()) return false;
    const auto lifted = lift_set(space(), e);
    return convolution_vanishes(*algebra_, fs[sw->index], lifted, tolerance_);
  }
  return false;
}

SweepResult enumerate_all(const FiniteAnalyzer& analyzer, std::optional<std::size_t> max_size,
                          const ParallelFor& parallel) {
  const std::size_t m = analyzer.space().coset_count();
  if (m > kMaxSweepCosets) {
    throw Error(ErrorKind::SpaceTooLarge, "exhaustive sweep needs at most " + std::to_string(kMaxSweepCosets) +
                                              " cosets, got " + std::to_string(m));
  }
  analyzer.spherical();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (max_size && static_cast<std::size_t>(__builtin_popcountll(mask)) > *max_size) continue;
    masks.push_back(mask);
  }
  SweepResult result;
  result.rows.resize(masks.size());
  parallel(masks.size(), [&](std::size_t idx) {
    SubsetOutcome row;
    row.mask = masks[idx];
    for (std::size_t c = 0; c < m; ++c)
      if (row.mask >> c & 1U) row.cosets.push_back(c);
    row.oracle = analyzer.oracle(row.cosets).verdict;
    const auto spec = analyzer.spectral(row.cosets);
    row.spectral = spec.verdict;
    if (const auto* sw = std::get_if<SphericalWitness>(&spec.witness)) row.spherical_witness = sw->index;
    row.convolution = analyzer.convolution(row.cosets).verdict;
    if (auto rad = analyzer.radial_shortcut(row.cosets)) row.radial = rad->verdict;
    row.agree = row.oracle == row.spectral && row.oracle == row.convolution &&
                (!row.radial || *row.radial == row.spectral);
    result.rows[idx] = std::move(row);
  });
  for (const auto& row : result.rows) {
    (row.oracle == Verdict::Pompeiu ? result.pompeiu_count : result.not_pompeiu_count)++;
    if (!row.agree) ++result.disagreements;
    if (row.radial) {
      ++result.radial_applicable;
      if (*row.radial != row.spectral) ++result.radial_mismatches;
    }
  }
  return result;
}

}  // namespace pompeiu
