#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/linalg/integer.hpp"
#include "burnside/marks.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

/// A subring R of the ghost ring Gh(I) = Z^I given by a Z-basis (one basis
/// vector per row of basis()). Construction checks that the rows are
/// independent, that the span contains the unit and is closed under pointwise
/// products, and that every pair of indices is separated: for i != j there is
/// r in R with r(i) != 0 and r(j) = 0.
class BRing {
public:
  /// Throws InvalidBRing or SeparationFailure.
  BRing(std::vector<std::string> labels, BigMatrix basis);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const BigMatrix& basis() const { return basis_; }
  std::size_t index_of(const std::string& label) const;

  /// Ghost vector of the element with coordinates `coeffs`.
  BigVector element(const BigVector& coeffs) const;
  /// Coordinates of a ghost vector; nullopt when it lies outside R.
  std::optional<BigVector> coordinates(const BigVector& ghost) const;
  const BigVector& unit_coordinates() const { return unit_coords_; }

  /// Coordinates of b_s * b_t.
  const BigVector& product_coordinates(std::size_t s, std::size_t t) const {
    return products_[s * size() + t];
  }

  /// Witness r with r(i) != 0 and r(j) = 0, as a ghost vector. Prefers a basis
  /// vector; otherwise uses b(j)*1 - b for a basis vector separating (j, i),
  /// otherwise b - b(j)*1 for any b with b(i) != b(j).
  BigVector separating_element(std::size_t i, std::size_t j) const;

private:
  std::vector<std::string> labels_;
  BigMatrix basis_;
  linalg::HermiteForm<BigInt> hermite_;
  BigVector unit_coords_;
  std::vector<BigVector> products_;
};

/// Z-basis = rows of the marks matrix, indices = class labels. Separation is
/// checked with the classical witnesses [G/H] and [N_G J : J][G/G] - [G/J].
BRing from_marks(const MarksTable& t);

/// d(i, j): the largest modulus with r(i) = r(j) mod d(i, j) for all r in R.
/// Only distinct pairs are represented.
class CongruenceMatrix {
public:
  explicit CongruenceMatrix(BigMatrix d) : d_(std::move(d)) {}
  std::size_t size() const { return static_cast<std::size_t>(d_.rows()); }
  /// Throws std::invalid_argument for i == j.
  const BigInt& operator()(std::size_t i, std::size_t j) const;

private:
  BigMatrix d_;
};

/// gcd over basis vectors of |r(i) - r(j)|; by linearity this is d over all
/// of R.
CongruenceMatrix congruence_d(const BRing& r);

/// The equivalence ~p: i ~p j iff i = j or p | d(i, j). Classes are sorted by
/// their least index; members ascending.
struct PrimeEquivalence {
  int p = 0;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;  ///< index -> class number
  bool related(std::size_t i, std::size_t j) const { return class_of[i] == class_of[j]; }
};

/// Throws InvalidPrime.
PrimeEquivalence p_classes(const BRing& r, const CongruenceMatrix& d, int p);

/// Elements s_i vanishing exactly off i, and N with N * Gh(I) inside R.
struct SeparatorSystem {
  std::vector<BigVector> ghost;   ///< ghost vector of s_i
  std::vector<BigVector> coords;  ///< coordinates of s_i in the basis
  BigInt n;                       ///< product of the s_i(i)
};

/// s_i = prod_{j != i} r_{i,j} with the witnesses of BRing::separating_element.
/// Verifies N * e_i in R for every i.
SeparatorSystem separators(const BRing& r);

/// The least positive value s(i) over all s in R vanishing off i, i.e. the
/// generator of R intersected with Z e_i. Every separator value s_i(i) is a
/// multiple of it, and it annihilates Ext/Tor between Z_i and Z_i in positive
/// degree.
BigInt min_separator_value(const BRing& r, std::size_t i);

nlohmann::json dmatrix_to_json(const BRing& r, const CongruenceMatrix& d,
                               const std::vector<PrimeEquivalence>& partitions);

}  // namespace burnside
