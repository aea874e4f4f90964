#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "burnside/bring.hpp"
#include "burnside/marks.hpp"
#include "burnside/modp.hpp"
#include "burnside/resolution.hpp"

namespace burnside {

/// Everything derived from one group: marks, the Burnside ring as a B-ring,
/// congruence numbers, and lazily per prime the mod-p algebra, its blocks and
/// their Betti numbers. Lazy parts are memoized behind a mutex, so a const
/// Analysis can be shared between threads.
class Analysis {
public:
  Analysis(PermGroup group, MarksTable marks);
  explicit Analysis(PermGroup group);

  const PermGroup& group() const { return group_; }
  const MarksTable& marks() const { return marks_; }
  const BRing& ring() const { return ring_; }
  const CongruenceMatrix& d() const { return d_; }
  std::size_t size() const { return ring_.size(); }
  const std::vector<std::string>& labels() const { return ring_.labels(); }
  /// Throws InvalidLabel.
  std::size_t index_of(const std::string& label) const { return ring_.index_of(label); }

  /// Prime divisors of |G|, ascending.
  const std::vector<int>& primes() const { return primes_; }
  bool square_free() const;

  struct PrimeData {
    ModPAlgebra algebra;
    std::vector<LocalBlock> blocks;
  };
  /// Throws InvalidPrime.
  const PrimeData& at(int p) const;
  /// The block of R/pR containing index i.
  const LocalBlock& block_of(int p, std::size_t i) const;

  /// b_0..b_L of the block containing i, extended on demand.
  std::vector<std::int64_t> betti(int p, std::size_t i, int max_degree) const;

  /// dim Tor_l^{R/pR}(k_i, k_i) for l <= L from a direct resolution of the
  /// block of i, or nullopt when that exceeds `budget`. A failure is
  /// remembered per block and reused for higher degrees and smaller budgets.
  std::optional<std::vector<std::int64_t>> residue_tor(int p, std::size_t i, int max_degree,
                                                       const ResolutionBudget& budget) const;

  /// Least positive c with c e_i in R.
  const BigInt& separator_bound(std::size_t i) const;

  const ResolutionBudget& budget() const { return budget_; }
  void set_budget(const ResolutionBudget& b) { budget_ = b; }

private:
  PermGroup group_;
  MarksTable marks_;
  BRing ring_;
  CongruenceMatrix d_;
  std::vector<int> primes_;
  ResolutionBudget budget_;

  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<PrimeData>> primes_data_;
  mutable std::map<std::pair<int, std::size_t>, std::vector<std::int64_t>> betti_;
  mutable std::map<std::pair<int, std::size_t>, std::vector<std::int64_t>> residue_tor_;
  struct Failure {
    int degree;
    ResolutionBudget budget;
  };
  mutable std::map<std::pair<int, std::size_t>, std::vector<Failure>> residue_tor_failed_;
  mutable std::map<std::size_t, BigInt> separator_bounds_;
};

/// Prime divisors of n, ascending.
std::vector<int> prime_divisors(std::uint64_t n);

/// Exponent of p in x (x != 0).
int valuation(const BigInt& x, int p);

}  // namespace burnside
