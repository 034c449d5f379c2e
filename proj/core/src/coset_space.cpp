#include <algorithm>

#include "pompeiu/error.hpp"
#include "pompeiu/finite_group.hpp"

namespace pompeiu {

CosetSpace::CosetSpace(std::shared_ptr<const FiniteGroup> group,
                       std::span<const Element> k_generators)
    : group_(std::move(group)) {
  if (!group_) throw Error(ErrorKind::InvalidArgument, "null group");
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();
  for (Element k : k_generators) {
    if (k >= n) {
      throw Error(ErrorKind::InvalidArgument,
                  "subgroup generator " + std::to_string(k) + " is not an element");
    }
  }

  in_k_.assign(n, false);
  in_k_[g.identity()] = true;
  std::vector<Element> members{g.identity()};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element k : k_generators) {
      const Element y = g.mul(members[i], k);
      if (!in_k_[y]) {
        in_k_[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  k_members_ = std::move(members);

  coset_of_.assign(n, UINT32_MAX);
  for (Element x = 0; x < n; ++x) {
    if (coset_of_[x] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(transversal_.size());
    transversal_.push_back(x);
    for (Element k : k_members_) coset_of_[g.mul(x, k)] = c;
  }

  const std::size_t m = transversal_.size();
  action_.resize(n * m);
  for (Element h = 0; h < n; ++h) {
    for (std::size_t c = 0; c < m; ++c) {
      action_[std::size_t{h} * m + c] = coset_of_[g.mul(h, transversal_[c])];
    }
  }

  std::vector<Element> nontrivial;
  for (Element k : k_generators) {
    if (k != g.identity() && std::find(nontrivial.begin(), nontrivial.end(), k) == nontrivial.end()) {
      nontrivial.push_back(k);
    }
  }
  if (nontrivial.empty()) {
    subgroup_label_ = "{e}";
  } else {
    subgroup_label_ = "<";
    for (std::size_t i = 0; i < nontrivial.size(); ++i) {
      if (i) subgroup_label_ += ", ";
      subgroup_label_ += g.label(nontrivial[i]);
    }
    subgroup_label_ += ">";
  }
}

DoubleCosetPartition double_cosets(const CosetSpace& space) {
  const FiniteGroup& g = space.group();
  const std::size_t n = g.order();
  DoubleCosetPartition part;
  part.class_of.assign(n, SIZE_MAX);
  for (Element x = 0; x < n; ++x) {
    if (part.class_of[x] != SIZE_MAX) continue;
    const std::size_t d = part.representatives.size();
    part.representatives.push_back(x);
    std::size_t size = 0;
    for (Element k : space.k_members()) {
      const Element kx = g.mul(k, x);
      for (Element l : space.k_members()) {
        const Element y = g.mul(kx, l);
        if (part.class_of[y] == SIZE_MAX) {
          part.class_of[y] = d;
          ++size;
        }
      }
    }
    part.class_sizes.push_back(size);
  }
  return part;
}

std::vector<Element> lift_set(const CosetSpace& space, std::span<const std::size_t> cosets) {
  std::vector<bool> in_e(space.coset_count(), false);
  for (auto c : cosets) {
    if (c >= space.coset_count()) {
      throw Error(ErrorKind::InvalidArgument, "coset index " + std::to_string(c) + " out of range");
    }
    in_e[c] = true;
  }
  std::vector<Element> lifted;
  for (Element x = 0; x < space.group().order(); ++x) {
    if (in_e[space.coset_of(x)]) lifted.push_back(x);
  }
  return lifted;
}

}  // namespace pompeiu
