#pragma once

#include <string>

#include <json.hpp>

#include "burnside/perm.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

/// Table of marks: matrix()(h, j) = |(G/H_h)^{J_j}|, rows and columns indexed
/// by the subgroup classes in class order. Row h is the ghost vector of
/// [G/H_h], so the rows form a Z-basis of the Burnside ring inside the ghost
/// ring. The matrix is lower triangular with diagonal [N_G H : H].
class MarksTable {
public:
  MarksTable(std::string group_name, std::size_t group_order, SubgroupClassTable classes,
             IntMatrix matrix);

  const std::string& group_name() const { return group_name_; }
  std::size_t group_order() const { return group_order_; }
  const SubgroupClassTable& classes() const { return classes_; }
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return classes_.size(); }
  std::int64_t operator()(std::size_t h, std::size_t j) const { return matrix_(h, j); }

private:
  std::string group_name_;
  std::size_t group_order_;
  SubgroupClassTable classes_;
  IntMatrix matrix_;
};

/// Counts fixed cosets through the coset action. With `verify` set, every
/// entry is re-derived as |{g : g^-1 J g <= H}| / |H| and compared.
MarksTable table_of_marks(const PermGroup& g, const SubgroupClassTable& classes,
                          bool verify = false);
MarksTable table_of_marks(const PermGroup& g);

/// An element of A(G) in the basis {[G/H]} of transitive G-sets.
struct BurnsideElement {
  BigVector coeffs;
  bool operator==(const BurnsideElement& o) const { return coeffs == o.coeffs; }
};

BurnsideElement basis_element(const MarksTable& t, std::size_t h);
BurnsideElement unit_element(const MarksTable& t);

/// Mark vector (pi_{(J)}(x))_J; linear in x.
BigVector ghost(const MarksTable& t, const BurnsideElement& x);
/// Inverse of ghost on its image, by back-substitution against the
/// triangular table. Throws NonIntegralSolution outside the image.
BurnsideElement decompose(const MarksTable& t, const BigVector& ghost_vector);
/// Product of G-sets, computed pointwise on ghost vectors.
BurnsideElement multiply(const MarksTable& t, const BurnsideElement& x, const BurnsideElement& y);

nlohmann::json to_json(const PermGroup& g, const MarksTable& t);
/// Inverse of to_json; validates the classes against `g`.
MarksTable marks_from_json(const PermGroup& g, const nlohmann::json& j);

}  // namespace burnside
