#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace burnside {

/// A bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
public:
  Permutation() = default;
  /// Throws DegreeMismatch when `images` is not a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Builds a permutation from disjoint cycles given with 0-based points.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition, applying `rhs` first: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

using ElementId = std::uint32_t;

/// A finite permutation group with all elements enumerated. Elements are
/// listed breadth-first from the identity, multiplying on the right by the
/// generators in their given order; element 0 is the identity.
class PermGroup {
public:
  static constexpr std::size_t kDefaultOrderCap = 200;

  /// Throws DegreeMismatch or CapExceeded.
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t order_cap = kDefaultOrderCap, std::string name = {});

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  ElementId identity() const { return 0; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * order() + b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// g * h * g^-1
  ElementId conj(ElementId g, ElementId h) const { return mul(mul(g, h), inverse_[g]); }
  int element_order(ElementId a) const { return orders_[a]; }
  const Permutation& element(ElementId a) const { return elements_[a]; }
  std::optional<ElementId> find(const Permutation& p) const;

private:
  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, ElementId> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<int> orders_;
};

/// A subgroup, as a sorted set of element ids of its parent group.
class Subgroup {
public:
  Subgroup() = default;
  /// Validates closure and throws InvalidSubgroup otherwise.
  static Subgroup from_elements(const PermGroup& g, std::vector<ElementId> elements);
  /// Smallest subgroup containing `generators`.
  static Subgroup generated_by(const PermGroup& g, std::span<const ElementId> generators);
  static Subgroup whole(const PermGroup& g);
  static Subgroup trivial(const PermGroup& g);

  std::size_t order() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  bool contains(ElementId e) const { return e < mask_.size() && mask_[e]; }
  bool is_subset_of(const Subgroup& other) const;

  auto operator<=>(const Subgroup& o) const { return elements_ <=> o.elements_; }
  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
  Subgroup(std::vector<ElementId> sorted, std::size_t parent_order);
  std::vector<ElementId> elements_;
  std::vector<char> mask_;
};

Subgroup conjugate(const PermGroup& g, const Subgroup& h, ElementId by);
/// {g in G : g H g^-1 = H}
Subgroup normalizer(const PermGroup& g, const Subgroup& h);
/// The subgroup generated by the elements of H of order prime to p; this is
/// the smallest normal subgroup of H with p-group quotient.
Subgroup o_p(const PermGroup& g, const Subgroup& h, int p);
/// True when some conjugate of J lies in H.
bool is_subconjugate(const PermGroup& g, const Subgroup& j, const Subgroup& h);

struct SubgroupClass {
  std::string label;
  Subgroup representative;       ///< lexicographically least member
  std::vector<Subgroup> members; ///< all conjugates, sorted
  std::size_t order() const { return representative.order(); }
};

/// Conjugacy classes of subgroups in the fixed class order: non-decreasing
/// subgroup order, ties broken by representative. The trivial class is first
/// and the class of G last.
class SubgroupClassTable {
public:
  explicit SubgroupClassTable(std::vector<SubgroupClass> classes);

  std::size_t size() const { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::vector<std::string> labels() const;

  /// Class index of an arbitrary subgroup; nullopt when not a subgroup of G.
  std::optional<std::size_t> class_of(const Subgroup& h) const;
  /// Throws InvalidLabel.
  std::size_t index_of_label(const std::string& label) const;

private:
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<ElementId>, std::size_t> lookup_;
};

/// All subgroups by closing cyclic subgroups under joins, grouped into
/// conjugacy classes.
SubgroupClassTable subgroup_classes(const PermGroup& g);

/// Rebuilds a class table from known representatives (e.g. read from the
/// cache). The representatives must already be in class order.
SubgroupClassTable classes_from_representatives(const PermGroup& g,
                                                std::vector<Subgroup> representatives);

/// The action of G on the left cosets G/H.
struct CosetAction {
  std::vector<std::vector<ElementId>> cosets;  ///< coset k as a sorted element list
  std::vector<Permutation> action;             ///< action[x] permutes the cosets
  Subgroup kernel;                             ///< core of H

  std::size_t degree() const { return cosets.size(); }
  std::size_t fixed_points(const Subgroup& j) const;
};

CosetAction coset_action(const PermGroup& g, const Subgroup& h);

}  // namespace burnside
