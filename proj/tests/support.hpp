#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "pompeiu/finite_group.hpp"

namespace pompeiu::test {

inline std::shared_ptr<const CosetSpace> make_space(FiniteGroup group, std::vector<std::string_view> k_labels) {
  auto g = std::make_shared<const FiniteGroup>(std::move(group));
  std::vector<Element> gens;
  for (auto label : k_labels) gens.push_back(g->find_label(label).value());
  return std::make_shared<const CosetSpace>(g, gens);
}

inline std::shared_ptr<const CosetSpace> trivial_space(FiniteGroup group) { return make_space(std::move(group), {}); }

inline std::shared_ptr<const CosetSpace> s3_s2() { return make_space(FiniteGroup::symmetric(3), {"(1 2)"}); }

inline std::shared_ptr<const CosetSpace> dihedral_reflection(std::size_t n) {
  return make_space(FiniteGroup::dihedral(n), {"s"});
}

/// S_n with K the stabilizer of the last point.
inline std::shared_ptr<const CosetSpace> sn_sn1(std::size_t n) {
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
  std::vector<Element> gens;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    Permutation p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint32_t>(k);
    std::swap(p[i], p[i + 1]);
    gens.push_back(g->find_permutation(p).value());
  }
  return std::make_shared<const CosetSpace>(g, gens);
}

}  // namespace pompeiu::test
