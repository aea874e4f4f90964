#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/analysis.hpp"

namespace burnside {

/// A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with
/// invariant factors 1 < d_1 | d_2 | ... | d_k.
class AbelianGroup {
public:
  AbelianGroup() = default;
  /// Drops unit factors; the rest must already divide each other.
  AbelianGroup(int free_rank, std::vector<BigInt> invariant_factors);

  static AbelianGroup zero() { return {}; }
  static AbelianGroup integers() { return AbelianGroup(1, {}); }
  static AbelianGroup cyclic(const BigInt& n);
  /// The direct sum over p of (Z/p)^{ranks[p]}.
  static AbelianGroup elementary(const std::map<int, std::int64_t>& ranks);

  int free_rank() const { return free_rank_; }
  const std::vector<BigInt>& invariant_factors() const { return factors_; }
  bool is_zero() const { return free_rank_ == 0 && factors_.empty(); }
  /// Number of cyclic summands of the p-part.
  std::int64_t p_rank(int p) const;

  /// "0", "Z", "Z^2", "Z/6", "Z/2 + Z/6", "Z + Z/2".
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;

private:
  int free_rank_ = 0;
  std::vector<BigInt> factors_;
};

/// Hom_R(Z_i, Z_j): Z when i = j, otherwise 0.
AbelianGroup hom_base(const Analysis& a, std::size_t i, std::size_t j);
/// Z_i (x)_R Z_j: Z when i = j, otherwise Z/d(i, j).
AbelianGroup tensor_base(const Analysis& a, std::size_t i, std::size_t j);

/// p-ranks indexed by degree: values[l] for 0 <= l <= max_degree.
struct RankSequence {
  int p = 0;
  std::vector<std::int64_t> values;
  std::int64_t operator[](int l) const { return values[static_cast<std::size_t>(l)]; }
  int max_degree() const { return static_cast<int>(values.size()) - 1; }
};

/// a_l = p-rank of Ext^l_R(Z_i, Z_j), l <= L (a_0 = 0). a_1 is 0 for i = j,
/// 1 for i ~p j distinct, and everything vanishes for i and j in different
/// ~p classes; then a_{l+1} = b_l - a_l. Throws NegativeRank.
RankSequence ext_ranks(const Analysis& a, std::size_t i, std::size_t j, int p, int max_degree);

/// z_l = p-rank of Tor_l^R(Z_i, Z_j), l <= L. z_0 comes from tensor_base and
/// z_l = a_{l+1} for l >= 1. Checks z_l + z_{l+1} = y_{l+1} against
/// dim Tor^{R/pR}(k_i, k_j) from a direct resolution when one fits
/// `check_budget`, and against the Betti numbers otherwise.
RankSequence tor_ranks(const Analysis& a, std::size_t i, std::size_t j, int p, int max_degree,
                       const ResolutionBudget& check_budget = {2e8, 2e7});

/// Annihilator of Ext^l and Tor_l in positive degree: d(i, j) for i != j and
/// the least separator value for i = j.
BigInt exponent_bound(const Analysis& a, std::size_t i, std::size_t j);

enum class Provenance { ClosedForm, Recurrence, Oracle };
std::string to_string(Provenance p);

struct PPart {
  int p = 0;
  std::int64_t rank = 0;
  BigInt exponent_bound;  ///< p^{v_p(bound)}
  bool exact = false;     ///< the p-part is (Z/p)^rank
};

struct DegreeEntry {
  int degree = 0;
  std::vector<PPart> p_parts;
  std::optional<AbelianGroup> module;  ///< set when every p-part is determined
  Provenance provenance = Provenance::Recurrence;
};

enum class Functor { Ext, Tor };

struct HomologyReport {
  Functor functor = Functor::Ext;
  std::string group;
  std::size_t source = 0, target = 0;
  std::string source_label, target_label;
  std::vector<DegreeEntry> degrees;
  const DegreeEntry& at(int l) const { return degrees[static_cast<std::size_t>(l)]; }
};

struct ReportOptions {
  /// Replace degrees up to oracle_degree by the integral oracle.
  bool oracle = false;
  int oracle_degree = 3;
};

/// Ext^l_R(Z_i, Z_j) for 0 <= l <= L. Degree 0 is hom_base. In positive
/// degree each prime p | |G| with i ~p j contributes a p-part of rank a_l; a
/// p-part is exact, namely (Z/p)^{a_l}, when it vanishes or p^2 does not
/// divide the exponent bound. The module is given when all p-parts are
/// exact, with provenance closed-form when |G| is square-free.
HomologyReport ext_report(const Analysis& a, std::size_t i, std::size_t j, int max_degree,
                          const ReportOptions& options = {});
/// As ext_report with z_l in place of a_l and tensor_base in degree 0.
HomologyReport tor_report(const Analysis& a, std::size_t i, std::size_t j, int max_degree,
                          const ReportOptions& options = {});

nlohmann::json to_json(const HomologyReport& r);
/// Aligned plain-text table.
std::string to_table(const HomologyReport& r);

}  // namespace burnside
