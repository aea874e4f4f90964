#pragma once

#include <cstdint>
#include <vector>

#include "burnside/modp.hpp"

namespace burnside {

/// Limits for direct minimal resolutions. Work counts the matrix entries
/// touched by row operations, so it is deterministic; max_entries caps the
/// size of any single dense F_p matrix.
struct ResolutionBudget {
  double max_work = 3e9;
  double max_entries = 1.2e8;
  /// Work spent confirming the quadratic-dual series when it applies.
  double confirm_work = 2e8;
};

/// Minimal free resolution ... -> F_1 -> F_0 = B -> k of the residue field
/// over a local block B. differential(l) has one row per generator of F_l,
/// holding its image in F_{l-1} = B^{n_{l-1}} in local coordinates (block t
/// of the row is the component along the t-th generator).
class MinimalResolution {
public:
  MinimalResolution(LocalBlock block, std::vector<std::size_t> betti,
                    std::vector<FpMatrix> differentials)
      : block_(std::move(block)), betti_(std::move(betti)), differentials_(std::move(differentials)) {}

  const LocalBlock& block() const { return block_; }
  /// Highest degree computed.
  int length() const { return static_cast<int>(betti_.size()) - 1; }
  const std::vector<std::size_t>& betti() const { return betti_; }
  /// d_l : F_l -> F_{l-1} for 1 <= l <= length().
  const FpMatrix& differential(int l) const { return differentials_[static_cast<std::size_t>(l - 1)]; }

  /// d_l reduced mod M: the n_l x n_{l-1} matrix over k obtained by applying
  /// - (x) k. Zero for a minimal resolution.
  FpMatrix reduced_differential(int l) const;

private:
  LocalBlock block_;
  std::vector<std::size_t> betti_;
  std::vector<FpMatrix> differentials_;
};

/// Throws ResolutionTooLarge when the budget is exhausted before degree L,
/// unless `allow_partial` is set, in which case the resolution stops at the
/// last degree that fit.
MinimalResolution minimal_resolution(const LocalBlock& b, int max_degree,
                                     const ResolutionBudget& budget = {}, bool allow_partial = false);

/// Checks d_{l-1} d_l = 0, exactness by rank count and minimality on every
/// computed degree; throws Error describing the first failure.
void validate_resolution(const MinimalResolution& r);

/// Hilbert series coefficients (A_0, ..., A_D) of the quadratic dual
/// k<xi_1..xi_e> / (sum_ab mu^c_ab xi_a xi_b) of a block with M^3 = 0, where
/// mu are the structure constants of M/M^2 x M/M^2 -> M^2. Uses a
/// degree-truncated homogeneous Groebner basis and counts normal words.
std::vector<std::int64_t> quadratic_dual_hilbert(const LocalBlock& b, int max_degree);

/// Betti numbers from 1/P(t) = (1 + 1/t)/A(t) - H(-t)/t, valid when M^3 = 0,
/// where H(t) = 1 + e t + w t^2 is the Hilbert series of the block. Throws
/// Error when M^3 != 0.
std::vector<std::int64_t> betti_via_quadratic_dual(const LocalBlock& b, int max_degree);

enum class BettiMethod { Auto, Direct, QuadraticDual };

struct BettiNumbers {
  std::vector<std::int64_t> values;  ///< b_0 .. b_L
  int direct_degree = -1;            ///< last degree confirmed by a direct resolution
  bool quadratic_dual = false;       ///< whether the series route supplied values
};

/// b_l = dim Ext^l_B(k, k) for l <= L. Auto resolves directly while the
/// budget allows and continues with the quadratic-dual series, requiring the
/// two to agree where both are available. When M^3 = 0 the direct part is
/// limited to confirm_work.
BettiNumbers betti_sequence(const LocalBlock& b, int max_degree, BettiMethod method = BettiMethod::Auto,
                            const ResolutionBudget& budget = {});

/// dim Ext^l_{R/pR}(k_i, k_j), l <= L: the block's Betti numbers when i ~p j,
/// zero otherwise.
std::vector<std::int64_t> ext_dims_pair(const ModPAlgebra& a, const std::vector<LocalBlock>& blocks,
                                        std::size_t i, std::size_t j, int max_degree,
                                        const ResolutionBudget& budget = {});

/// dim Tor_l^B(k, k), l <= L, as the homology of res (x) k. Needs
/// res.length() > L.
std::vector<std::int64_t> tor_dims(const MinimalResolution& res, int max_degree);

/// dim Tor_l^{R/pR}(k_i, k_j), l <= L, as the homology of the direct minimal
/// resolution tensored with k (zero across blocks). Throws
/// ResolutionTooLarge when the resolution does not fit the budget.
std::vector<std::int64_t> tor_dims_pair(const ModPAlgebra& a, const std::vector<LocalBlock>& blocks,
                                        std::size_t i, std::size_t j, int max_degree,
                                        const ResolutionBudget& budget = {});

}  // namespace burnside
