#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "burnside/bring.hpp"
#include "burnside/linalg/fp.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

/// R/pR as an F_p-algebra in the reduced Z-basis of R, together with the
/// evaluation map theta: R/pR -> prod_E k_E onto the ~p classes.
class ModPAlgebra {
public:
  /// Throws InvalidPrime.
  static ModPAlgebra build(const BRing& r, const CongruenceMatrix& d, int p);

  int p() const { return p_; }
  std::size_t dim() const { return static_cast<std::size_t>(theta_.cols()); }
  const PrimeEquivalence& classes() const { return classes_; }
  /// |classes| x dim; row E evaluates a basis element at any index of E.
  const FpMatrix& theta() const { return theta_; }
  /// structure(s)(t, u): coefficient of b_u in b_s * b_t.
  const FpMatrix& structure(std::size_t s) const { return structure_[s]; }

  FpVector multiply(const FpVector& x, const FpVector& y) const;
  FpVector one() const { return one_; }
  FpVector power(FpVector x, std::int64_t e) const;
  /// The dim x dim matrix of y -> x * y (acting on column vectors).
  FpMatrix multiplication_matrix(const FpVector& x) const;

private:
  int p_ = 0;
  PrimeEquivalence classes_;
  FpMatrix theta_;
  std::vector<FpMatrix> structure_;
  FpVector one_;
};

/// Basis (rows) of ker theta, the Jacobson radical. Nilpotency is asserted.
FpMatrix radical(const ModPAlgebra& a);

/// Span (rows, echelon) of all nilpotent elements, found by enumerating the
/// whole algebra. Only for small p^dim; independent of theta.
FpMatrix nilradical_by_enumeration(const ModPAlgebra& a, std::size_t max_elements = 1u << 20);

/// An indecomposable summand e * (R/pR) of R/pR. It is local with residue
/// field F_p. Local coordinates use the basis u_0 = e, u_1..u_{dim-1}
/// spanning the maximal ideal.
class LocalBlock {
public:
  LocalBlock(int p, std::vector<std::size_t> indices, FpVector idempotent, FpMatrix ambient_basis,
             std::vector<FpMatrix> structure);

  int p() const { return p_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  const FpVector& idempotent() const { return idempotent_; }
  std::size_t dim() const { return structure_.size(); }
  /// Rows: u_0..u_{dim-1} in the ambient basis of R/pR.
  const FpMatrix& ambient_basis() const { return ambient_basis_; }
  /// structure(a)(b, c): coefficient of u_c in u_a * u_b.
  const FpMatrix& structure(std::size_t a) const { return structure_[a]; }

  FpVector multiply(const FpVector& x, const FpVector& y) const;

private:
  int p_;
  std::vector<std::size_t> indices_;
  FpVector idempotent_;
  FpMatrix ambient_basis_;
  std::vector<FpMatrix> structure_;
};

/// The element of R/pR that is 1 on the class E and 0 on every other class
/// modulo the radical, built as a product of (b - b(j))^{p-1}.
FpVector class_indicator(const BRing& r, const ModPAlgebra& a, std::size_t cls);

/// One block per ~p class, in class order. Idempotents come from lifting
/// class_indicator through repeated p-th powers. Throws
/// IdempotentLiftDivergence or NotLocal.
std::vector<LocalBlock> blocks(const BRing& r, const ModPAlgebra& a);

struct BlockInvariants {
  std::size_t dim = 0;
  std::size_t m_mod_m2_dim = 0;  ///< embedding dimension dim M/M^2
  std::size_t m2_dim = 0;        ///< dim M^2
  std::size_t m3_dim = 0;        ///< dim M^3
  std::size_t socle_dim = 0;     ///< dim ann(M)
  bool symmetric = false;        ///< socle_dim == 1
  bool tor_bounded = false;      ///< m_mod_m2_dim <= 1 (Krull dimension 0)
};

BlockInvariants block_invariants(const LocalBlock& b);

/// Basis (rows, local coordinates) of M^k.
FpMatrix maximal_ideal_power(const LocalBlock& b, int k);

/// For blocks with dim M/M^2 <= 1 the block is k[t]/(t^{q+1}); the functional
/// reading off the t^q coefficient has no nonzero ideal in its kernel. Returns
/// whether that bilinear form is nondegenerate, or nullopt when dim M/M^2 > 1.
std::optional<bool> symmetric_by_truncated_polynomial_functional(const LocalBlock& b);

nlohmann::json blocks_to_json(const BRing& r, const ModPAlgebra& a,
                              const std::vector<LocalBlock>& bs);

}  // namespace burnside
