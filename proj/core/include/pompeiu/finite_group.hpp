#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pompeiu {

/// Index of a group element. The identity is always element 0.
using Element = std::uint32_t;

/// One-line image notation on {0, ..., degree-1}: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 5040;

enum class GroupFamily { Cyclic, Dihedral, Symmetric, Permutations };

struct GroupSpec {
  GroupFamily family = GroupFamily::Cyclic;
  std::size_t n = 1;
  std::vector<Permutation> generators;  // only for GroupFamily::Permutations
  std::size_t order_cap = kDefaultOrderCap;
};

/// A finite group stored as a dense multiplication table.
///
/// Elements are numbered identity first, then in construction order, so two
/// builds from the same spec are index-for-index identical. Groups built from
/// permutations keep the permutation of every element; products follow the
/// composition convention (g h)(i) = g(h(i)).
class FiniteGroup {
 public:
  static FiniteGroup cyclic(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
  /// Symmetries of the regular n-gon, order 2n. Element r^k s^j has index
  /// k + n j, where r is the rotation and s a reflection (s r s = r^-1).
  static FiniteGroup dihedral(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
  static FiniteGroup symmetric(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
  static FiniteGroup from_permutations(std::span<const Permutation> generators,
                                       std::size_t order_cap = kDefaultOrderCap);
  /// Validates the table against the group axioms before accepting it.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> mul,
                                std::vector<std::string> labels, std::string name);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const { return mul_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }

  const std::string& name() const noexcept { return name_; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::optional<Element> find_label(std::string_view label) const;

  bool has_permutations() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Element a) const { return perms_.at(a); }
  std::optional<Element> find_permutation(const Permutation& p) const;

  /// Exhaustive check of closure, identity, inverse and (for order <= 256)
  /// associativity. Returns a description of the first violation, if any.
  std::optional<std::string> axiom_violation() const;

 private:
  FiniteGroup() = default;
  void finish_inverses();

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::unordered_map<std::string, Element> perm_index_;
};

FiniteGroup build_group(const GroupSpec& spec);

/// Cycle notation with 1-based points, e.g. "(1 2 3)"; identity is "e".
std::string cycle_notation(const Permutation& p);

/// Left cosets xK of a subgroup K together with the G-action g (xK) = (gx)K.
/// Coset 0 is K itself; coset c is represented by transversal()[c], the
/// smallest element index in it.
class CosetSpace {
 public:
  CosetSpace(std::shared_ptr<const FiniteGroup> group,
             std::span<const Element> k_generators);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }

  std::span<const Element> k_members() const noexcept { return k_members_; }
  std::size_t k_order() const noexcept { return k_members_.size(); }
  bool in_k(Element g) const { return in_k_[g]; }

  std::size_t coset_count() const noexcept { return transversal_.size(); }
  std::span<const Element> transversal() const noexcept { return transversal_; }
  std::size_t coset_of(Element g) const { return coset_of_[g]; }
  std::size_t act(Element g, std::size_t coset) const {
    return action_[std::size_t{g} * transversal_.size() + coset];
  }

  const std::string& subgroup_label() const noexcept { return subgroup_label_; }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Element> k_members_;
  std::vector<bool> in_k_;
  std::vector<Element> transversal_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<std::uint32_t> action_;
  std::string subgroup_label_;
};

/// Partition of G into double cosets KxK. Class 0 is K.
struct DoubleCosetPartition {
  std::vector<std::size_t> class_of;
  std::vector<Element> representatives;
  std::vector<std::size_t> class_sizes;

  std::size_t class_count() const noexcept { return representatives.size(); }
};

DoubleCosetPartition double_cosets(const CosetSpace& space);

/// Lift of a set of cosets to G: {g in G : gK in E}, sorted.
std::vector<Element> lift_set(const CosetSpace& space, std::span<const std::size_t> cosets);

enum class Side { Left, Right, Bi };

/// Exact invariance test of a value table on G under K.
template <class T>
bool check_function_invariance(const CosetSpace& space, std::span<const T> f, Side side) {
  const FiniteGroup& g = space.group();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element k : space.k_members()) {
      if ((side == Side::Right || side == Side::Bi) && !(f[g.mul(x, k)] == f[x])) return false;
      if ((side == Side::Left || side == Side::Bi) && !(f[g.mul(k, x)] == f[x])) return false;
    }
  }
  return true;
}

}  // namespace pompeiu
