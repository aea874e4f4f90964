#include "burnside/marks.hpp"

#include "burnside/error.hpp"

namespace burnside {

MarksTable::MarksTable(std::string group_name, std::size_t group_order,
                       SubgroupClassTable classes, IntMatrix matrix)
    : group_name_(std::move(group_name)),
      group_order_(group_order),
      classes_(std::move(classes)),
      matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(classes_.size());
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw BasisMismatch("marks matrix does not match the class table");
}

namespace {

// |{g in G : g^-1 J g <= H}| / |H|
std::int64_t double_count(const PermGroup& g, const Subgroup& h, const Subgroup& j) {
  std::int64_t count = 0;
  for (ElementId x = 0; x < g.order(); ++x) {
    const ElementId xi = g.inv(x);
    bool inside = true;
    for (auto y : j.elements())
      if (!h.contains(g.conj(xi, y))) {
        inside = false;
        break;
      }
    if (inside) ++count;
  }
  return count / static_cast<std::int64_t>(h.order());
}

}  // namespace

MarksTable table_of_marks(const PermGroup& g, const SubgroupClassTable& classes, bool verify) {
  const auto n = static_cast<Eigen::Index>(classes.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index h = 0; h < n; ++h) {
    const auto action = coset_action(g, classes[h].representative);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(h, j) = static_cast<std::int64_t>(action.fixed_points(classes[j].representative));
      if (verify) {
        const auto alt = double_count(g, classes[h].representative, classes[j].representative);
        if (alt != m(h, j))
          throw Error("mark cross-check failed at (" + classes[h].label + ", " +
                      classes[j].label + ")");
      }
    }
  }
  return MarksTable(g.name(), g.order(), classes, std::move(m));
}

MarksTable table_of_marks(const PermGroup& g) { return table_of_marks(g, subgroup_classes(g)); }

BurnsideElement basis_element(const MarksTable& t, std::size_t h) {
  BurnsideElement x{BigVector::Zero(static_cast<Eigen::Index>(t.size()))};
  x.coeffs(static_cast<Eigen::Index>(h)) = 1;
  return x;
}

BurnsideElement unit_element(const MarksTable& t) { return basis_element(t, t.size() - 1); }

BigVector ghost(const MarksTable& t, const BurnsideElement& x) {
  const auto n = static_cast<Eigen::Index>(t.size());
  if (x.coeffs.size() != n) throw BasisMismatch("coefficient vector has wrong length");
  BigVector out = BigVector::Zero(n);
  for (Eigen::Index h = 0; h < n; ++h) {
    if (x.coeffs(h) == 0) continue;
    for (Eigen::Index j = 0; j <= h; ++j) out(j) += x.coeffs(h) * t(h, j);
  }
  return out;
}

BurnsideElement decompose(const MarksTable& t, const BigVector& v) {
  const auto n = static_cast<Eigen::Index>(t.size());
  if (v.size() != n) throw BasisMismatch("ghost vector has wrong length");
  // v_j = sum_{h >= j} c_h M(h, j); solve from the last column down
  BigVector c = BigVector::Zero(n);
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    BigInt rest = v(j);
    for (Eigen::Index h = j + 1; h < n; ++h) rest -= c(h) * t(h, j);
    const std::int64_t diag = t(j, j);
    if (rest % diag != 0)
      throw NonIntegralSolution("coefficient of [G/" + t.classes()[j].label + "] would be " +
                                rest.str() + "/" + std::to_string(diag));
    c(j) = rest / diag;
  }
  return BurnsideElement{std::move(c)};
}

BurnsideElement multiply(const MarksTable& t, const BurnsideElement& x, const BurnsideElement& y) {
  return decompose(t, ghost(t, x).cwiseProduct(ghost(t, y)));
}

nlohmann::json to_json(const PermGroup& g, const MarksTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes().classes()) {
    nlohmann::json rep = nlohmann::json::array();
    for (auto e : c.representative.elements()) rep.push_back(g.element(e).images());
    classes.push_back({{"label", c.label}, {"order", c.order()}, {"representative", rep}});
  }
  nlohmann::json matrix = nlohmann::json::array();
  for (Eigen::Index h = 0; h < t.matrix().rows(); ++h) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < t.matrix().cols(); ++j) row.push_back(t(h, j));
    matrix.push_back(std::move(row));
  }
  return {{"group", t.group_name()}, {"classes", classes}, {"matrix", matrix}};
}

MarksTable marks_from_json(const PermGroup& g, const nlohmann::json& j) {
  std::vector<Subgroup> reps;
  for (const auto& c : j.at("classes")) {
    std::vector<ElementId> ids;
    for (const auto& images : c.at("representative")) {
      auto id = g.find(Permutation(images.get<std::vector<int>>()));
      if (!id) throw InvalidSubgroup("cached representative is not an element of the group");
      ids.push_back(*id);
    }
    reps.push_back(Subgroup::from_elements(g, std::move(ids)));
  }
  auto classes = classes_from_representatives(g, std::move(reps));
  std::size_t k = 0;
  for (const auto& c : j.at("classes"))
    if (c.at("label").get<std::string>() != classes[k++].label)
      throw BasisMismatch("cached class labels disagree with the recomputed ones");
  const auto n = static_cast<Eigen::Index>(classes.size());
  IntMatrix m(n, n);
  const auto& rows = j.at("matrix");
  if (static_cast<Eigen::Index>(rows.size()) != n) throw BasisMismatch("matrix size");
  for (Eigen::Index h = 0; h < n; ++h) {
    if (static_cast<Eigen::Index>(rows[h].size()) != n) throw BasisMismatch("matrix size");
    for (Eigen::Index c = 0; c < n; ++c) m(h, c) = rows[h][c].get<std::int64_t>();
  }
  return MarksTable(j.at("group").get<std::string>(), g.order(), std::move(classes), std::move(m));
}

}  // namespace burnside
