#include "burnside/ext_tor.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <iomanip>
#include <sstream>

#include "burnside/error.hpp"
#include "burnside/linalg/fp.hpp"
#include "burnside/oracle.hpp"

namespace burnside {

AbelianGroup::AbelianGroup(int free_rank, std::vector<BigInt> invariant_factors)
    : free_rank_(free_rank) {
  if (free_rank < 0) throw std::invalid_argument("negative free rank");
  for (auto& d : invariant_factors) {
    if (d < 0) d = -d;
    if (d == 0) throw std::invalid_argument("zero invariant factor");
    if (d != 1) factors_.push_back(std::move(d));
  }
  for (std::size_t k = 1; k < factors_.size(); ++k)
    if (factors_[k] % factors_[k - 1] != 0)
      throw std::invalid_argument("invariant factors must divide each other");
}

AbelianGroup AbelianGroup::cyclic(const BigInt& n) {
  if (n == 0) return integers();
  return AbelianGroup(0, {n});
}

AbelianGroup AbelianGroup::elementary(const std::map<int, std::int64_t>& ranks) {
  std::int64_t count = 0;
  for (const auto& [p, r] : ranks) {
    if (r < 0) throw std::invalid_argument("negative rank");
    count = std::max(count, r);
  }
  // the k-th largest invariant factor collects every p with at least k summands
  std::vector<BigInt> factors;
  for (std::int64_t k = count; k >= 1; --k) {
    BigInt f = 1;
    for (const auto& [p, r] : ranks)
      if (r >= k) f *= p;
    factors.push_back(f);
  }
  return AbelianGroup(0, std::move(factors));
}

std::int64_t AbelianGroup::p_rank(int p) const {
  return std::count_if(factors_.begin(), factors_.end(), [p](const BigInt& d) { return d % p == 0; });
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : factors_) parts.push_back("Z/" + d.str());
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
  return out;
}

AbelianGroup hom_base(const Analysis& a, std::size_t i, std::size_t j) {
  if (i >= a.size() || j >= a.size()) throw InvalidLabel("index out of range");
  return i == j ? AbelianGroup::integers() : AbelianGroup::zero();
}

AbelianGroup tensor_base(const Analysis& a, std::size_t i, std::size_t j) {
  if (i >= a.size() || j >= a.size()) throw InvalidLabel("index out of range");
  return i == j ? AbelianGroup::integers() : AbelianGroup::cyclic(a.d()(i, j));
}

RankSequence ext_ranks(const Analysis& a, std::size_t i, std::size_t j, int p, int max_degree) {
  fp::require_prime(p);
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  RankSequence out{p, std::vector<std::int64_t>(static_cast<std::size_t>(max_degree) + 1, 0)};
  if (max_degree == 0 || a.group().order() % static_cast<std::size_t>(p) != 0) return out;
  if (!a.at(p).algebra.classes().related(i, j)) return out;
  const auto b = a.betti(p, i, max_degree - 1);
  out.values[1] = i == j ? 0 : 1;
  for (int l = 1; l < max_degree; ++l) {
    const auto next = b[static_cast<std::size_t>(l)] - out[l];
    if (next < 0)
      throw NegativeRank("a_" + std::to_string(l + 1) + " = " + std::to_string(next) + " at p = " +
                         std::to_string(p));
    out.values[static_cast<std::size_t>(l) + 1] = next;
  }
  return out;
}

RankSequence tor_ranks(const Analysis& a, std::size_t i, std::size_t j, int p, int max_degree,
                       const ResolutionBudget& check_budget) {
  const auto ext = ext_ranks(a, i, j, p, max_degree + 1);
  RankSequence out{p, std::vector<std::int64_t>(static_cast<std::size_t>(max_degree) + 1, 0)};
  out.values[0] = tensor_base(a, i, j).p_rank(p);
  for (int l = 1; l <= max_degree; ++l) out.values[static_cast<std::size_t>(l)] = ext[l + 1];
  if (max_degree == 0 || std::all_of(ext.values.begin(), ext.values.end(),
                                     [](std::int64_t v) { return v == 0; }))
    return out;

  // k_i and k_j coincide when i ~p j, so y depends only on the block
  auto residue = a.residue_tor(p, i, max_degree, check_budget);
  const auto y = residue ? *residue : a.betti(p, i, max_degree);
  for (int l = 1; l < max_degree; ++l)
    if (out[l] + out[l + 1] != y[static_cast<std::size_t>(l) + 1])
      throw NegativeRank("z_" + std::to_string(l) + " + z_" + std::to_string(l + 1) +
                         " differs from dim Tor_" + std::to_string(l + 1) + " over R/pR");
  return out;
}

BigInt exponent_bound(const Analysis& a, std::size_t i, std::size_t j) {
  return i == j ? a.separator_bound(i) : a.d()(i, j);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Recurrence: return "recurrence";
    case Provenance::Oracle: return "oracle";
  }
  return "";
}

namespace {

BigInt prime_power(int p, int e) {
  BigInt out = 1;
  for (int k = 0; k < e; ++k) out *= p;
  return out;
}

HomologyReport build_report(const Analysis& a, Functor functor, std::size_t i, std::size_t j,
                            int max_degree, const ReportOptions& options) {
  if (i >= a.size() || j >= a.size()) throw InvalidLabel("index out of range");
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  HomologyReport r;
  r.functor = functor;
  r.group = a.group().name();
  r.source = i;
  r.target = j;
  r.source_label = a.labels()[i];
  r.target_label = a.labels()[j];

  const BigInt bound = exponent_bound(a, i, j);
  std::vector<RankSequence> ranks;
  for (int p : a.primes()) {
    if (!a.at(p).algebra.classes().related(i, j)) continue;
    ranks.push_back(functor == Functor::Ext ? ext_ranks(a, i, j, p, max_degree)
                                            : tor_ranks(a, i, j, p, max_degree));
  }

  DegreeEntry zero;
  zero.degree = 0;
  zero.module = functor == Functor::Ext ? hom_base(a, i, j) : tensor_base(a, i, j);
  zero.provenance = Provenance::ClosedForm;
  r.degrees.push_back(zero);

  for (int l = 1; l <= max_degree; ++l) {
    DegreeEntry e;
    e.degree = l;
    bool all_exact = true;
    std::map<int, std::int64_t> elementary;
    for (const auto& seq : ranks) {
      PPart part;
      part.p = seq.p;
      part.rank = seq[l];
      const int v = valuation(bound, seq.p);
      part.exponent_bound = prime_power(seq.p, v);
      if (v == 0 && part.rank != 0)
        throw Error("p-rank " + std::to_string(part.rank) + " at p = " + std::to_string(seq.p) +
                    " contradicts the exponent bound " + bound.str());
      part.exact = v <= 1 || part.rank == 0;
      all_exact &= part.exact;
      elementary[seq.p] = part.rank;
      e.p_parts.push_back(part);
    }
    if (all_exact) e.module = AbelianGroup::elementary(elementary);
    e.provenance = a.square_free() ? Provenance::ClosedForm : Provenance::Recurrence;
    r.degrees.push_back(std::move(e));
  }

  if (options.oracle) {
    const int top = std::min(max_degree, options.oracle_degree);
    const auto res = IntegralResolution::build(a.ring(), i, top + 1);
    const auto exact = functor == Functor::Ext ? oracle_ext(res, j, top) : oracle_tor(res, j, top);
    for (int l = 0; l <= top; ++l) {
      auto& e = r.degrees[static_cast<std::size_t>(l)];
      if (e.module && !(*e.module == exact[static_cast<std::size_t>(l)]))
        throw Error("oracle gives " + exact[static_cast<std::size_t>(l)].to_string() +
                    " in degree " + std::to_string(l) + ", recurrence gives " +
                    e.module->to_string());
      for (const auto& part : e.p_parts)
        if (exact[static_cast<std::size_t>(l)].p_rank(part.p) != part.rank)
          throw Error("oracle p-rank differs in degree " + std::to_string(l));
      e.module = exact[static_cast<std::size_t>(l)];
      e.provenance = Provenance::Oracle;
    }
  }
  return r;
}

}  // namespace

HomologyReport ext_report(const Analysis& a, std::size_t i, std::size_t j, int max_degree,
                          const ReportOptions& options) {
  return build_report(a, Functor::Ext, i, j, max_degree, options);
}

HomologyReport tor_report(const Analysis& a, std::size_t i, std::size_t j, int max_degree,
                          const ReportOptions& options) {
  return build_report(a, Functor::Tor, i, j, max_degree, options);
}

namespace {

nlohmann::json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max()) return to_int64(x);
  return x.str();
}

}  // namespace

nlohmann::json to_json(const HomologyReport& r) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& e : r.degrees) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : e.p_parts)
      parts.push_back({{"p", part.p}, {"rank", part.rank},
                       {"exponent_bound", big_to_json(part.exponent_bound)}});
    degrees.push_back({{"l", e.degree},
                       {"p_parts", parts},
                       {"module", e.module ? nlohmann::json(e.module->to_string()) : nlohmann::json()},
                       {"provenance", to_string(e.provenance)}});
  }
  return {{"group", r.group}, {"source", r.source_label}, {"target", r.target_label},
          {"degrees", degrees}};
}

std::string to_table(const HomologyReport& r) {
  std::ostringstream out;
  out << (r.functor == Functor::Ext ? "Ext^l(Z_" : "Tor_l(Z_") << r.source_label << ", Z_"
      << r.target_label << ") over A(" << r.group << ")\n";
  std::vector<std::array<std::string, 4>> rows{{"l", "module", "p-parts (rank, bound)", "provenance"}};
  for (const auto& e : r.degrees) {
    std::string parts;
    for (const auto& part : e.p_parts) {
      if (!parts.empty()) parts += "  ";
      parts += std::to_string(part.p) + ": " + std::to_string(part.rank) + ", " +
               part.exponent_bound.str();
    }
    rows.push_back({std::to_string(e.degree), e.module ? e.module->to_string() : "?",
                    parts.empty() ? "-" : parts, to_string(e.provenance)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 3; ++c)
      out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
    out << row[3] << "\n";
  }
  return out.str();
}

}  // namespace burnside
