#include "pompeiu/hecke.hpp"

#include <algorithm>
#include <cmath>

#include "pompeiu/error.hpp"

namespace pompeiu {
namespace {

std::vector<Complex> to_complex(std::span<const Rational> q) {
  std::vector<Complex> out;
  out.reserve(q.size());
  for (const auto& v : q) out.emplace_back(static_cast<double>(v), 0.0);
  return out;
}

void require_same(const HeckeAlgebra& a, const HeckeAlgebra& b) {
  if (&a != &b) throw Error(ErrorKind::SpaceMismatch, "measures live on different coset spaces");
}

}  // namespace

std::shared_ptr<const HeckeAlgebra> HeckeAlgebra::create(std::shared_ptr<const CosetSpace> space) {
  if (!space) throw Error(ErrorKind::InvalidArgument, "null coset space");
  std::shared_ptr<HeckeAlgebra> alg(new HeckeAlgebra());
  alg->space_ = std::move(space);
  alg->partition_ = double_cosets(*alg->space_);
  const FiniteGroup& g = alg->space_->group();
  const std::size_t d = alg->partition_.class_count();

  alg->inverse_class_.resize(d);
  for (std::size_t c = 0; c < d; ++c) {
    alg->inverse_class_[c] = alg->partition_.class_of[g.inv(alg->partition_.representatives[c])];
  }

  // For each output class c with representative z, count pairs (i, j) over
  // x in G with x in D_i and x^-1 z in D_j.
  alg->structure_.resize(d);
  for (std::size_t c = 0; c < d; ++c) {
    const Element z = alg->partition_.representatives[c];
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (i * d + j, count)
    pairs.reserve(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      const std::uint64_t i = alg->partition_.class_of[x];
      const std::uint64_t j = alg->partition_.class_of[g.mul(g.inv(x), z)];
      pairs.emplace_back(i * d + j, 1);
    }
    std::sort(pairs.begin(), pairs.end());
    auto& out = alg->structure_[c];
    for (const auto& [key, one] : pairs) {
      const auto i = static_cast<std::uint32_t>(key / d);
      const auto j = static_cast<std::uint32_t>(key % d);
      if (!out.empty() && out.back().i == i && out.back().j == j) {
        out.back().count += one;
      } else {
        out.push_back({i, j, one});
      }
    }
  }
  alg->self_ = alg;
  return alg;
}

Rational HeckeAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t c) const {
  const auto& counts = structure_[c];
  auto it = std::lower_bound(counts.begin(), counts.end(), std::pair<std::size_t, std::size_t>(i, j),
                             [](const StructureCount& s, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair<std::size_t, std::size_t>(s.i, s.j) < key;
                             });
  if (it == counts.end() || it->i != i || it->j != j) return Rational(0);
  // density of e_i * e_j at class c is count / (|D_i| |D_j|); e_c has density 1 / |D_c|.
  return Rational(Integer(it->count) * Integer(class_size(c)),
                  Integer(class_size(i)) * Integer(class_size(j)));
}

BiinvariantMeasure::BiinvariantMeasure(std::shared_ptr<const HeckeAlgebra> algebra,
                                       std::vector<Complex> density)
    : algebra_(std::move(algebra)), density_(std::move(density)) {
  if (!algebra_) throw Error(ErrorKind::InvalidArgument, "null algebra");
  if (density_.size() != algebra_->dimension()) {
    throw Error(ErrorKind::SpaceMismatch, "density has the wrong number of classes");
  }
}

BiinvariantMeasure::BiinvariantMeasure(std::shared_ptr<const HeckeAlgebra> algebra,
                                       std::vector<Rational> exact_density)
    : algebra_(std::move(algebra)), density_(to_complex(exact_density)), exact_(std::move(exact_density)) {
  if (!algebra_) throw Error(ErrorKind::InvalidArgument, "null algebra");
  if (density_.size() != algebra_->dimension()) {
    throw Error(ErrorKind::SpaceMismatch, "density has the wrong number of classes");
  }
}

BiinvariantMeasure BiinvariantMeasure::unit(const std::shared_ptr<const HeckeAlgebra>& algebra) {
  return delta_sharp(algebra, algebra->group().identity());
}

BiinvariantMeasure BiinvariantMeasure::delta_sharp(const std::shared_ptr<const HeckeAlgebra>& algebra,
                                                   Element g) {
  if (g >= algebra->group().order()) throw Error(ErrorKind::InvalidArgument, "element out of range");
  std::vector<Rational> q(algebra->dimension(), Rational(0));
  const std::size_t c = algebra->class_of(g);
  q[c] = Rational(Integer(1), Integer(algebra->class_size(c)));
  return BiinvariantMeasure(algebra, std::move(q));
}

BiinvariantMeasure BiinvariantMeasure::normalized_indicator(const std::shared_ptr<const HeckeAlgebra>& algebra) {
  return unit(algebra);
}

BiinvariantMeasure BiinvariantMeasure::basis(const std::shared_ptr<const HeckeAlgebra>& algebra, std::size_t i) {
  if (i >= algebra->dimension()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  return delta_sharp(algebra, algebra->representative(i));
}

BiinvariantMeasure BiinvariantMeasure::from_table(const std::shared_ptr<const HeckeAlgebra>& algebra,
                                                  std::span<const Complex> table) {
  if (table.size() != algebra->group().order()) {
    throw Error(ErrorKind::SpaceMismatch, "table size differs from group order");
  }
  std::vector<Complex> d(algebra->dimension());
  for (std::size_t c = 0; c < d.size(); ++c) d[c] = table[algebra->representative(c)];
  for (Element x = 0; x < table.size(); ++x) {
    if (table[x] != d[algebra->class_of(x)]) {
      throw Error(ErrorKind::InvalidArgument, "table is not K-biinvariant");
    }
  }
  return BiinvariantMeasure(algebra, std::move(d));
}

BiinvariantMeasure BiinvariantMeasure::from_exact_table(const std::shared_ptr<const HeckeAlgebra>& algebra,
                                                        std::span<const Rational> table) {
  if (table.size() != algebra->group().order()) {
    throw Error(ErrorKind::SpaceMismatch, "table size differs from group order");
  }
  std::vector<Rational> d(algebra->dimension());
  for (std::size_t c = 0; c < d.size(); ++c) d[c] = table[algebra->representative(c)];
  for (Element x = 0; x < table.size(); ++x) {
    if (table[x] != d[algebra->class_of(x)]) {
      throw Error(ErrorKind::InvalidArgument, "table is not K-biinvariant");
    }
  }
  return BiinvariantMeasure(algebra, std::move(d));
}

Complex BiinvariantMeasure::coefficient(std::size_t c) const {
  return density_.at(c) * static_cast<double>(algebra_->space().k_order());
}

std::vector<Complex> BiinvariantMeasure::table() const {
  const std::size_t n = algebra_->group().order();
  std::vector<Complex> t(n);
  for (Element x = 0; x < n; ++x) t[x] = density_[algebra_->class_of(x)];
  return t;
}

double BiinvariantMeasure::l1_norm() const {
  double s = 0;
  for (std::size_t c = 0; c < density_.size(); ++c) {
    s += std::abs(density_[c]) * static_cast<double>(algebra_->class_size(c));
  }
  return s;
}

BiinvariantMeasure BiinvariantMeasure::scaled(Complex c) const {
  std::vector<Complex> d(density_);
  for (auto& v : d) v *= c;
  return BiinvariantMeasure(algebra_, std::move(d));
}

BiinvariantMeasure convolve(const BiinvariantMeasure& mu, const BiinvariantMeasure& nu) {
  require_same(mu.algebra(), nu.algebra());
  const HeckeAlgebra& alg = mu.algebra();
  const std::size_t d = alg.dimension();
  if (mu.is_exact() && nu.is_exact()) {
    const auto& a = *mu.exact_density();
    const auto& b = *nu.exact_density();
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t c = 0; c < d; ++c) {
      for (const auto& s : alg.structure_counts(c)) {
        if (a[s.i] == 0 || b[s.j] == 0) continue;
        out[c] += a[s.i] * b[s.j] * Integer(s.count);
      }
    }
    return BiinvariantMeasure(mu.algebra_ptr(), std::move(out));
  }
  const auto a = mu.density();
  const auto b = nu.density();
  std::vector<Complex> out(d);
  for (std::size_t c = 0; c < d; ++c) {
    Complex acc = 0;
    for (const auto& s : alg.structure_counts(c)) {
      acc += a[s.i] * b[s.j] * static_cast<double>(s.count);
    }
    out[c] = acc;
  }
  return BiinvariantMeasure(mu.algebra_ptr(), std::move(out));
}

BiinvariantMeasure reverse_measure(const BiinvariantMeasure& mu) {
  const HeckeAlgebra& alg = mu.algebra();
  const std::size_t d = alg.dimension();
  if (mu.is_exact()) {
    std::vector<Rational> out(d);
    for (std::size_t c = 0; c < d; ++c) out[c] = (*mu.exact_density())[alg.inverse_class(c)];
    return BiinvariantMeasure(mu.algebra_ptr(), std::move(out));
  }
  std::vector<Complex> out(d);
  for (std::size_t c = 0; c < d; ++c) out[c] = mu.density()[alg.inverse_class(c)];
  return BiinvariantMeasure(mu.algebra_ptr(), std::move(out));
}

std::vector<Complex> project_biinvariant(const CosetSpace& space, std::span<const Complex> f) {
  const FiniteGroup& g = space.group();
  if (f.size() != g.order()) throw Error(ErrorKind::SpaceMismatch, "table size differs from group order");
  const double w = 1.0 / static_cast<double>(space.k_order() * space.k_order());
  std::vector<Complex> out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Complex acc = 0;
    for (Element l : space.k_members()) {
      const Element lx = g.mul(l, x);
      for (Element k : space.k_members()) acc += f[g.mul(lx, k)];
    }
    out[x] = acc * w;
  }
  return out;
}

std::vector<Complex> reverse_function(const FiniteGroup& group, std::span<const Complex> f) {
  if (f.size() != group.order()) throw Error(ErrorKind::SpaceMismatch, "table size differs from group order");
  std::vector<Complex> out(f.size());
  for (Element x = 0; x < f.size(); ++x) out[x] = f[group.inv(x)];
  return out;
}

GelfandCheck is_gelfand_pair(const HeckeAlgebra& algebra) {
  const auto count_of = [&](std::size_t c, std::uint32_t i, std::uint32_t j) -> std::uint64_t {
    const auto counts = algebra.structure_counts(c);
    auto it = std::lower_bound(counts.begin(), counts.end(), std::make_pair(i, j),
                               [](const HeckeAlgebra::StructureCount& s, const std::pair<std::uint32_t, std::uint32_t>& key) {
                                 return std::make_pair(s.i, s.j) < key;
                               });
    return (it != counts.end() && it->i == i && it->j == j) ? it->count : 0;
  };
  std::optional<std::pair<std::uint32_t, std::uint32_t>> first;
  for (std::size_t c = 0; c < algebra.dimension(); ++c) {
    for (const auto& s : algebra.structure_counts(c)) {
      if (s.i == s.j || count_of(c, s.j, s.i) == s.count) continue;
      const auto key = std::make_pair(std::min(s.i, s.j), std::max(s.i, s.j));
      if (!first || key < *first) first = key;
    }
  }
  if (!first) return {true, std::nullopt};
  return {false, std::make_pair(algebra.representative(first->first), algebra.representative(first->second))};
}

std::vector<Complex> SphericalFunction::table(const HeckeAlgebra& algebra) const {
  const std::size_t n = algebra.group().order();
  std::vector<Complex> t(n);
  for (Element x = 0; x < n; ++x) t[x] = values[algebra.class_of(x)];
  return t;
}

double check_spherical(const CosetSpace& space, std::span<const Complex> f) {
  const FiniteGroup& g = space.group();
  if (f.size() != g.order()) throw Error(ErrorKind::SpaceMismatch, "table size differs from group order");
  const double w = 1.0 / static_cast<double>(space.k_order());
  double worst = 0;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      Complex avg = 0;
      for (Element k : space.k_members()) avg += f[g.mul(g.mul(x, k), y)];
      worst = std::max(worst, std::abs(avg * w - f[x] * f[y]));
    }
  }
  return worst;
}

bool is_spherical(const CosetSpace& space, std::span<const Complex> f, double tolerance) {
  if (f.size() != space.group().order()) return false;
  if (std::abs(f[space.group().identity()] - Complex(1.0)) > tolerance) return false;
  const auto projected = project_biinvariant(space, f);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (std::abs(projected[x] - f[x]) > tolerance) return false;
  }
  return check_spherical(space, f) < tolerance;
}

SphericalFunction reverse_function(const HeckeAlgebra& algebra, const SphericalFunction& f) {
  const std::size_t d = algebra.dimension();
  SphericalFunction out;
  out.values.resize(d);
  out.eigenvalues.resize(d);
  for (std::size_t c = 0; c < d; ++c) {
    out.values[c] = f.values[algebra.inverse_class(c)];
    out.eigenvalues[c] = f.values[c];
  }
  if (f.exact_values) {
    std::vector<Rational> q(d);
    for (std::size_t c = 0; c < d; ++c) q[c] = (*f.exact_values)[algebra.inverse_class(c)];
    out.exact_values = std::move(q);
  }
  return out;
}

PhiValue phi_hom(const SphericalFunction& f, const BiinvariantMeasure& mu) {
  const HeckeAlgebra& alg = mu.algebra();
  const std::size_t d = alg.dimension();
  if (f.values.size() != d) throw Error(ErrorKind::SpaceMismatch, "spherical function from another space");
  PhiValue out{};
  // f(x^-1) is constant on each class: x in D_c means x^-1 in D_{inv(c)}.
  Complex acc = 0;
  for (std::size_t c = 0; c < d; ++c) {
    acc += mu.density()[c] * static_cast<double>(alg.class_size(c)) * f.values[alg.inverse_class(c)];
  }
  out.value = acc;
  if (f.is_exact() && mu.is_exact()) {
    Rational q = 0;
    for (std::size_t c = 0; c < d; ++c) {
      const Rational& m = (*mu.exact_density())[c];
      if (m == 0) continue;
      q += m * Integer(alg.class_size(c)) * (*f.exact_values)[alg.inverse_class(c)];
    }
    out.exact = q;
    out.value = Complex(static_cast<double>(q), 0.0);
  }
  return out;
}

}  // namespace pompeiu
