#include "pompeiu/finite_group.hpp"

#include <algorithm>
#include <sstream>

#include "pompeiu/error.hpp"

namespace pompeiu {
namespace {

std::string perm_key(const Permutation& p) {
  std::string key;
  key.reserve(p.size() * sizeof(std::uint32_t));
  for (auto v : p) key.append(reinterpret_cast<const char*>(&v), sizeof(v));
  return key;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "group order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(cap));
  }
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream out;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) {
      seen[start] = true;
      continue;
    }
    out << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out << ' ';
      out << (i + 1);
      first = false;
      i = p[i];
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "e" : s;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group needs n >= 1");
  check_cap(n, order_cap);
  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.mul_[a * n + b] = static_cast<Element>((a + b) % n);
  for (std::size_t a = 0; a < n; ++a) g.labels_.push_back(std::to_string(a));
  g.name_ = "Z" + std::to_string(n);
  g.finish_inverses();
  return g;
}

FiniteGroup FiniteGroup::dihedral(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dihedral group needs n >= 1");
  check_cap(2 * n, order_cap);
  FiniteGroup g;
  g.order_ = 2 * n;
  g.mul_.resize(g.order_ * g.order_);
  for (std::size_t a = 0; a < g.order_; ++a) {
    const std::size_t ka = a % n, ja = a / n;
    for (std::size_t b = 0; b < g.order_; ++b) {
      const std::size_t kb = b % n, jb = b / n;
      // r^ka s^ja r^kb s^jb = r^(ka + (-1)^ja kb) s^(ja + jb)
      const std::size_t k = ja == 0 ? (ka + kb) % n : (ka + n - kb) % n;
      const std::size_t j = (ja + jb) % 2;
      g.mul_[a * g.order_ + b] = static_cast<Element>(k + n * j);
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::string rot = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
      if (j == 0) {
        g.labels_.push_back(rot.empty() ? "e" : rot);
      } else {
        g.labels_.push_back(rot.empty() ? "s" : rot + " s");
      }
    }
  }
  g.name_ = "D" + std::to_string(n);
  g.finish_inverses();
  return g;
}

FiniteGroup FiniteGroup::symmetric(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "symmetric group needs n >= 1");
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    order *= i;
    check_cap(order, order_cap);
  }
  std::vector<Permutation> gens;
  Permutation transposition(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    transposition[i] = static_cast<std::uint32_t>(i);
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  if (n >= 2) std::swap(transposition[0], transposition[1]);
  gens.push_back(transposition);
  if (n >= 3) gens.push_back(cycle);
  FiniteGroup g = from_permutations(gens, order_cap);
  g.name_ = "S" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::span<const Permutation> generators,
                                           std::size_t order_cap) {
  if (generators.empty()) {
    throw Error(ErrorKind::InvalidArgument, "at least one generator is required");
  }
  const std::size_t degree = generators.front().size();
  if (degree == 0) throw Error(ErrorKind::NotPermutation, "empty permutation");
  for (const auto& p : generators) {
    if (p.size() != degree) {
      throw Error(ErrorKind::NotPermutation, "generators act on different domains");
    }
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) {
        throw Error(ErrorKind::NotPermutation,
                    "generator is not a permutation of {0.." +
                        std::to_string(degree - 1) + "}");
      }
      hit[v] = true;
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  g.perms_.push_back(id);
  g.perm_index_.emplace(perm_key(id), 0);

  // Breadth-first closure under right multiplication by generators. Each new
  // element remembers (parent, generator) so the table can be filled by
  // mul(a, b) = right[mul(a, parent(b))][gen(b)].
  const std::size_t ngen = generators.size();
  std::vector<Element> right;  // right[x * ngen + j] = x * gen_j
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t x = 0; x < g.perms_.size(); ++x) {
    for (std::size_t j = 0; j < ngen; ++j) {
      Permutation y = compose(g.perms_[x], generators[j]);
      auto key = perm_key(y);
      auto it = g.perm_index_.find(key);
      Element idx;
      if (it == g.perm_index_.end()) {
        idx = static_cast<Element>(g.perms_.size());
        check_cap(g.perms_.size() + 1, order_cap);
        g.perm_index_.emplace(std::move(key), idx);
        g.perms_.push_back(std::move(y));
        parent.push_back(static_cast<Element>(x));
        via.push_back(j);
      } else {
        idx = it->second;
      }
      right.push_back(idx);
    }
  }

  g.order_ = g.perms_.size();
  const std::size_t n = g.order_;
  g.mul_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    g.mul_[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const Element ap = g.mul_[a * n + parent[b]];
      g.mul_[a * n + b] = right[std::size_t{ap} * ngen + via[b]];
    }
  }
  for (const auto& p : g.perms_) g.labels_.push_back(cycle_notation(p));
  g.name_ = "Perm" + std::to_string(degree) + "_order" + std::to_string(n);
  g.finish_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> mul,
                                    std::vector<std::string> labels, std::string name) {
  if (order == 0 || mul.size() != order * order) {
    throw Error(ErrorKind::InvalidArgument, "multiplication table has the wrong size");
  }
  for (auto v : mul) {
    if (v >= order) throw Error(ErrorKind::InvalidArgument, "table entry out of range");
  }
  FiniteGroup g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  if (labels.empty()) {
    for (std::size_t a = 0; a < order; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != order) throw Error(ErrorKind::InvalidArgument, "label count mismatch");
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.inv_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order && !found; ++b) {
      if (g.mul_[a * order + b] == 0) {
        g.inv_[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidArgument, "element without inverse");
  }
  if (auto why = g.axiom_violation()) throw Error(ErrorKind::InvalidArgument, *why);
  return g;
}

void FiniteGroup::finish_inverses() {
  inv_.assign(order_, 0);
  if (has_permutations()) {
    for (std::size_t a = 0; a < order_; ++a) {
      const Permutation& p = perms_[a];
      Permutation q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint32_t>(i);
      inv_[a] = perm_index_.at(perm_key(q));
    }
    return;
  }
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (mul_[a * order_ + b] == 0) {
        inv_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (std::size_t a = 0; a < order_; ++a) {
    if (labels_[a] == label) return static_cast<Element>(a);
  }
  return std::nullopt;
}

std::optional<Element> FiniteGroup::find_permutation(const Permutation& p) const {
  auto it = perm_index_.find(perm_key(p));
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> FiniteGroup::axiom_violation() const {
  const std::size_t n = order_;
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(0, static_cast<Element>(x)) != x || mul(static_cast<Element>(x), 0) != x) {
      return "identity law fails at element " + std::to_string(x);
    }
    const Element xi = inv_[x];
    if (mul(static_cast<Element>(x), xi) != 0 || mul(xi, static_cast<Element>(x)) != 0) {
      return "inverse law fails at element " + std::to_string(x);
    }
  }
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            return "associativity fails at (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")";
          }
        }
      }
  }
  return std::nullopt;
}

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::Cyclic: return FiniteGroup::cyclic(spec.n, spec.order_cap);
    case GroupFamily::Dihedral: return FiniteGroup::dihedral(spec.n, spec.order_cap);
    case GroupFamily::Symmetric: return FiniteGroup::symmetric(spec.n, spec.order_cap);
    case GroupFamily::Permutations:
      return FiniteGroup::from_permutations(spec.generators, spec.order_cap);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group family");
}

}  // namespace pompeiu
