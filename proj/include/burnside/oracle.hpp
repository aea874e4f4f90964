#pragma once

#include <vector>

#include "burnside/bring.hpp"
#include "burnside/ext_tor.hpp"

namespace burnside {

/// A free resolution ... -> R^{m_1} -> R^{m_0} = R -> Z_i over the integers.
/// Every kernel is taken as a Z-lattice and a full Z-basis of it becomes the
/// next set of R-generators, so the resolution is far from minimal. Elements
/// of R^m are stored as integer vectors of length m * n (generator-major, in
/// the ring basis).
class IntegralResolution {
public:
  /// Builds F_0 .. F_length and checks d o d = 0 and exactness by Smith
  /// forms. Throws ResolutionTooLarge when some m_l * n exceeds max_rank.
  static IntegralResolution build(const BRing& r, std::size_t i, int length,
                                  std::size_t max_rank = 2000);

  std::size_t source() const { return source_; }
  int length() const { return static_cast<int>(ranks_.size()) - 1; }
  /// m_0 .. m_length
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Images of the generators of F_l in F_{l-1}, one per row (1 <= l <= length).
  const BigMatrix& generators(int l) const { return generators_[static_cast<std::size_t>(l - 1)]; }
  /// The m_l x m_{l-1} integer matrix of pi_j applied to the coefficients of
  /// the generator images: the differential of Hom(F, Z_j) and F (x) Z_j.
  BigMatrix evaluated(int l, std::size_t j) const;

private:
  IntegralResolution(const BRing& r, std::size_t i) : ring_(&r), source_(i) {}
  const BRing* ring_;
  std::size_t source_;
  std::vector<std::size_t> ranks_;
  std::vector<BigMatrix> generators_;
};

/// Ext^l_R(Z_i, Z_j) for 0 <= l <= L by Smith forms of the Hom complex.
std::vector<AbelianGroup> oracle_ext(const IntegralResolution& res, std::size_t j, int max_degree);
/// Tor_l^R(Z_i, Z_j) for 0 <= l <= L.
std::vector<AbelianGroup> oracle_tor(const IntegralResolution& res, std::size_t j, int max_degree);

std::vector<AbelianGroup> oracle_ext(const BRing& r, std::size_t i, std::size_t j, int max_degree);
std::vector<AbelianGroup> oracle_tor(const BRing& r, std::size_t i, std::size_t j, int max_degree);

/// dim_{F_p} Ext^l_R(Z_i, k_j) for 0 <= l <= L, where k_j is F_p with R
/// acting through pi_j mod p.
std::vector<std::int64_t> oracle_ext_mod_p(const IntegralResolution& res, std::size_t j, int p,
                                           int max_degree);

}  // namespace burnside
