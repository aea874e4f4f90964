#include "burnside/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw DegreeMismatch("image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree)
        throw DegreeMismatch("cycle point out of range");
      if (used[a]) throw DegreeMismatch("cycles are not disjoint");
      used[a] = 1;
      im[a] = b;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw DegreeMismatch("composing permutations of different degree");
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[rhs.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators,
                              std::size_t order_cap, std::string name) {
  if (degree < 1) throw DegreeMismatch("degree must be at least 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generator " + g.cycle_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));
  PermGroup grp;
  grp.degree_ = degree;
  grp.name_ = std::move(name);
  grp.generators_ = std::move(generators);

  grp.elements_.push_back(Permutation::identity(degree));
  grp.index_.emplace(grp.elements_.front(), 0);
  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (const auto& gen : grp.generators_) {
      Permutation next = grp.elements_[head] * gen;
      if (grp.index_.count(next)) continue;
      if (grp.elements_.size() >= order_cap)
        throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
      grp.index_.emplace(next, static_cast<ElementId>(grp.elements_.size()));
      grp.elements_.push_back(std::move(next));
    }
  }

  const std::size_t n = grp.elements_.size();
  grp.table_.resize(n * n);
  // x * y as images: compose image arrays, then look up
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grp.table_[a * n + b] = grp.index_.at(grp.elements_[a] * grp.elements_[b]);
  grp.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) grp.inverse_[a] = grp.index_.at(grp.elements_[a].inverse());
  grp.orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    ElementId x = static_cast<ElementId>(a);
    while (x != 0) {
      x = grp.mul(x, static_cast<ElementId>(a));
      ++k;
    }
    grp.orders_[a] = k;
  }
  return grp;
}

std::optional<ElementId> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subgroup::Subgroup(std::vector<ElementId> sorted, std::size_t parent_order)
    : elements_(std::move(sorted)), mask_(parent_order, 0) {
  for (auto e : elements_) mask_[e] = 1;
}

Subgroup Subgroup::from_elements(const PermGroup& g, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto e : elements)
    if (e >= g.order()) throw InvalidSubgroup("element id out of range");
  Subgroup h(std::move(elements), g.order());
  if (!h.contains(g.identity())) throw InvalidSubgroup("missing identity");
  for (auto a : h.elements_)
    for (auto b : h.elements_)
      if (!h.contains(g.mul(a, b))) throw InvalidSubgroup("not closed under composition");
  return h;
}

Subgroup Subgroup::generated_by(const PermGroup& g, std::span<const ElementId> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElementId> found{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < found.size(); ++head)
    for (auto s : generators) {
      ElementId x = g.mul(found[head], s);
      if (!in[x]) {
        in[x] = 1;
        found.push_back(x);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(found), g.order());
}

Subgroup Subgroup::whole(const PermGroup& g) {
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return Subgroup(std::move(all), g.order());
}

Subgroup Subgroup::trivial(const PermGroup& g) { return Subgroup({g.identity()}, g.order()); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (auto e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

namespace {

void require_subgroup_of(const PermGroup& g, const Subgroup& h) {
  if (h.order() == 0 || h.elements().back() >= g.order())
    throw InvalidSubgroup("subgroup does not belong to this group");
}

}  // namespace

Subgroup conjugate(const PermGroup& g, const Subgroup& h, ElementId by) {
  std::vector<ElementId> out;
  out.reserve(h.order());
  for (auto x : h.elements()) out.push_back(g.conj(by, x));
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : h.elements())
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup o_p(const PermGroup& g, const Subgroup& h, int p) {
  if (p < 2) throw InvalidPrime(std::to_string(p) + " is not prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidPrime(std::to_string(p) + " is not prime");
  require_subgroup_of(g, h);
  std::vector<ElementId> gens;
  for (auto x : h.elements())
    if (g.element_order(x) % p != 0) gens.push_back(x);
  return Subgroup::generated_by(g, gens);
}

bool is_subconjugate(const PermGroup& g, const Subgroup& j, const Subgroup& h) {
  if (h.order() % j.order() != 0) return false;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (auto y : j.elements())
      if (!h.contains(g.conj(x, y))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

SubgroupClassTable::SubgroupClassTable(std::vector<SubgroupClass> classes)
    : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (const auto& m : classes_[i].members) lookup_.emplace(m.elements(), i);
}

std::vector<std::string> SubgroupClassTable::labels() const {
  std::vector<std::string> out;
  for (const auto& c : classes_) out.push_back(c.label);
  return out;
}

std::optional<std::size_t> SubgroupClassTable::class_of(const Subgroup& h) const {
  auto it = lookup_.find(h.elements());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupClassTable::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  std::string known;
  for (const auto& c : classes_) known += (known.empty() ? "" : ", ") + c.label;
  throw InvalidLabel("no subgroup class labelled '" + label + "' (known: " + known + ")");
}

namespace {

std::vector<Subgroup> all_conjugates(const PermGroup& g, const Subgroup& h) {
  std::set<Subgroup> seen;
  for (ElementId x = 0; x < g.order(); ++x) seen.insert(conjugate(g, h, x));
  return {seen.begin(), seen.end()};
}

SubgroupClassTable label_classes(std::vector<SubgroupClass> classes) {
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.representative < b.representative;
  });
  for (std::size_t i = 0; i < classes.size();) {
    std::size_t j = i;
    while (j < classes.size() && classes[j].order() == classes[i].order()) ++j;
    for (std::size_t k = i; k < j; ++k) {
      classes[k].label = std::to_string(classes[k].order());
      if (j - i > 1) {
        // a..z, then aa, ab, ...
        std::size_t idx = k - i;
        std::string suffix;
        do {
          suffix.insert(suffix.begin(), static_cast<char>('a' + idx % 26));
          idx = idx / 26;
        } while (idx-- > 0);
        classes[k].label += suffix;
      }
    }
    i = j;
  }
  return SubgroupClassTable(std::move(classes));
}

}  // namespace

SubgroupClassTable subgroup_classes(const PermGroup& g) {
  // cyclic subgroups with one generator each
  std::map<Subgroup, std::vector<ElementId>> found;
  std::vector<ElementId> cyclic_gens;
  for (ElementId x = 0; x < g.order(); ++x) {
    const ElementId gen[] = {x};
    Subgroup c = Subgroup::generated_by(g, gen);
    if (found.emplace(c, std::vector<ElementId>{x}).second) cyclic_gens.push_back(x);
  }
  std::vector<Subgroup> frontier;
  for (const auto& [s, gens] : found) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& a : frontier) {
      const auto base = found.at(a);
      for (auto x : cyclic_gens) {
        if (a.contains(x)) continue;
        auto gens = base;
        gens.push_back(x);
        Subgroup joined = Subgroup::generated_by(g, gens);
        if (found.emplace(joined, gens).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgroupClass> classes;
  std::set<Subgroup> assigned;
  for (const auto& [s, gens] : found) {
    if (assigned.count(s)) continue;
    SubgroupClass cls;
    cls.members = all_conjugates(g, s);
    cls.representative = cls.members.front();
    assigned.insert(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return label_classes(std::move(classes));
}

SubgroupClassTable classes_from_representatives(const PermGroup& g,
                                                std::vector<Subgroup> representatives) {
  std::vector<SubgroupClass> classes;
  for (auto& rep : representatives) {
    SubgroupClass cls;
    cls.members = all_conjugates(g, rep);
    cls.representative = cls.members.front();
    if (!(cls.representative == rep))
      throw InvalidSubgroup("representative is not the least member of its class");
    classes.push_back(std::move(cls));
  }
  return label_classes(std::move(classes));
}

CosetAction coset_action(const PermGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  CosetAction out;
  std::vector<std::size_t> coset_of(g.order(), SIZE_MAX);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != SIZE_MAX) continue;
    std::vector<ElementId> coset;
    for (auto y : h.elements()) coset.push_back(g.mul(x, y));
    std::sort(coset.begin(), coset.end());
    for (auto y : coset) coset_of[y] = out.cosets.size();
    out.cosets.push_back(std::move(coset));
  }
  std::vector<ElementId> kernel;
  for (ElementId x = 0; x < g.order(); ++x) {
    std::vector<int> im(out.cosets.size());
    bool trivial = true;
    for (std::size_t k = 0; k < out.cosets.size(); ++k) {
      im[k] = static_cast<int>(coset_of[g.mul(x, out.cosets[k].front())]);
      if (im[k] != static_cast<int>(k)) trivial = false;
    }
    if (trivial) kernel.push_back(x);
    out.action.emplace_back(std::move(im));
  }
  out.kernel = Subgroup::from_elements(g, std::move(kernel));
  return out;
}

std::size_t CosetAction::fixed_points(const Subgroup& j) const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < cosets.size(); ++k) {
    bool fixed = true;
    for (auto x : j.elements())
      if (action[x](static_cast<int>(k)) != static_cast<int>(k)) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

}  // namespace burnside
