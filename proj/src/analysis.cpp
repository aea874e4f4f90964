#include "burnside/analysis.hpp"

#include "burnside/error.hpp"
#include "burnside/linalg/fp.hpp"

namespace burnside {

std::vector<int> prime_divisors(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(static_cast<int>(q));
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

int valuation(const BigInt& x, int p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  BigInt y = x < 0 ? BigInt(-x) : x;
  int v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

Analysis::Analysis(PermGroup group, MarksTable marks)
    : group_(std::move(group)),
      marks_(std::move(marks)),
      ring_(from_marks(marks_)),
      d_(congruence_d(ring_)),
      primes_(prime_divisors(group_.order())) {}

Analysis::Analysis(PermGroup group) : Analysis(group, table_of_marks(group)) {}

bool Analysis::square_free() const {
  const auto n = group_.order();
  for (int p : primes_)
    if (n % static_cast<std::size_t>(p * p) == 0) return false;
  return true;
}

const Analysis::PrimeData& Analysis::at(int p) const {
  fp::require_prime(p);
  std::lock_guard lock(mutex_);
  auto& slot = primes_data_[p];
  if (!slot) {
    auto algebra = ModPAlgebra::build(ring_, d_, p);
    auto bs = blocks(ring_, algebra);
    slot = std::make_unique<PrimeData>(PrimeData{std::move(algebra), std::move(bs)});
  }
  return *slot;
}

const LocalBlock& Analysis::block_of(int p, std::size_t i) const {
  const auto& data = at(p);
  return data.blocks[data.algebra.classes().class_of.at(i)];
}

std::vector<std::int64_t> Analysis::betti(int p, std::size_t i, int max_degree) const {
  const auto& data = at(p);
  const std::size_t cls = data.algebra.classes().class_of.at(i);
  {
    std::lock_guard lock(mutex_);
    auto it = betti_.find({p, cls});
    if (it != betti_.end() && static_cast<int>(it->second.size()) > max_degree)
      return {it->second.begin(), it->second.begin() + max_degree + 1};
  }
  auto values = betti_sequence(data.blocks[cls], max_degree, BettiMethod::Auto, budget_).values;
  std::lock_guard lock(mutex_);
  auto& slot = betti_[{p, cls}];
  if (slot.size() < values.size()) slot = values;
  return values;
}

std::optional<std::vector<std::int64_t>> Analysis::residue_tor(int p, std::size_t i, int max_degree,
                                                               const ResolutionBudget& budget) const {
  const auto& data = at(p);
  const std::pair key{p, data.algebra.classes().class_of.at(i)};
  {
    std::lock_guard lock(mutex_);
    for (const auto& f : residue_tor_failed_[key])
      if (f.degree <= max_degree && budget.max_work <= f.budget.max_work &&
          budget.max_entries <= f.budget.max_entries)
        return std::nullopt;
    auto it = residue_tor_.find(key);
    if (it != residue_tor_.end() && static_cast<int>(it->second.size()) > max_degree)
      return std::vector<std::int64_t>(it->second.begin(), it->second.begin() + max_degree + 1);
  }
  try {
    auto values = tor_dims_pair(data.algebra, data.blocks, i, i, max_degree, budget);
    std::lock_guard lock(mutex_);
    auto& slot = residue_tor_[key];
    if (slot.size() < values.size()) slot = values;
    return values;
  } catch (const ResolutionTooLarge&) {
    std::lock_guard lock(mutex_);
    residue_tor_failed_[key].push_back({max_degree, budget});
    return std::nullopt;
  }
}

const BigInt& Analysis::separator_bound(std::size_t i) const {
  std::lock_guard lock(mutex_);
  auto it = separator_bounds_.find(i);
  if (it == separator_bounds_.end())
    it = separator_bounds_.emplace(i, min_separator_value(ring_, i)).first;
  return it->second;
}

}  // namespace burnside
