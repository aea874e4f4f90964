#include "burnside/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "burnside/error.hpp"

namespace burnside {

namespace {

using Row = std::vector<FpScalar>;

// u_s * v for v in B^n, componentwise.
Row act(const LocalBlock& b, std::size_t s, const FpScalar* v, std::size_t n) {
  const auto d = b.dim();
  const FpScalar p = b.p();
  const auto& m = b.structure(s);
  Row out(n * d, 0);
  for (std::size_t t = 0; t < n; ++t) {
    const FpScalar* vt = v + t * d;
    FpScalar* ot = out.data() + t * d;
    for (std::size_t x = 0; x < d; ++x) {
      if (vt[x] == 0) continue;
      fp::axpy(ot, m.row(static_cast<Eigen::Index>(x)).data(), vt[x], p, static_cast<Eigen::Index>(d));
    }
  }
  return out;
}

// x * v for a block element x and v in B^n.
Row multiply_into(const LocalBlock& b, const FpScalar* x, const FpScalar* v, std::size_t n) {
  const auto d = b.dim();
  Row out(n * d, 0);
  for (std::size_t s = 0; s < d; ++s) {
    if (x[s] == 0) continue;
    Row part = act(b, s, v, n);
    fp::axpy(out.data(), part.data(), x[s], b.p(), static_cast<Eigen::Index>(out.size()));
  }
  return out;
}

bool all_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](FpScalar x) { return x == 0; });
}

// Columns u_s * g_t of the F_p-matrix of d : B^{rows} -> B^{n}.
FpMatrix span_matrix(const LocalBlock& b, const FpMatrix& gens, std::size_t n) {
  const auto d = b.dim();
  FpMatrix e(static_cast<Eigen::Index>(n * d), gens.rows() * static_cast<Eigen::Index>(d));
  for (Eigen::Index t = 0; t < gens.rows(); ++t)
    for (std::size_t s = 0; s < d; ++s) {
      Row col = act(b, s, gens.row(t).data(), n);
      const auto c = t * static_cast<Eigen::Index>(d) + static_cast<Eigen::Index>(s);
      for (std::size_t k = 0; k < col.size(); ++k) e(static_cast<Eigen::Index>(k), c) = col[k];
    }
  return e;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Betti number overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Betti number overflows 64 bits");
  return r;
}

}  // namespace

FpMatrix MinimalResolution::reduced_differential(int l) const {
  const auto& dl = differential(l);
  const auto d = static_cast<Eigen::Index>(block_.dim());
  const auto cols = static_cast<Eigen::Index>(betti_[static_cast<std::size_t>(l - 1)]);
  FpMatrix out(dl.rows(), cols);
  for (Eigen::Index r = 0; r < dl.rows(); ++r)
    for (Eigen::Index t = 0; t < cols; ++t) out(r, t) = dl(r, t * d);
  return out;
}

MinimalResolution minimal_resolution(const LocalBlock& b, int max_degree,
                                     const ResolutionBudget& budget, bool allow_partial) {
  const std::size_t d = b.dim();
  const FpScalar p = b.p();
  std::vector<std::size_t> betti{1};
  std::vector<FpMatrix> diffs;
  fp::WorkMeter meter(budget.max_work);
  auto fits = [&](double rows, double cols) { return rows * cols <= budget.max_entries; };

  std::vector<Row> kernel;  // F_p-basis of ker(F_{l-1} -> F_{l-2}), starting with M
  for (std::size_t a = 1; a < d; ++a) {
    Row r(d, 0);
    r[a] = 1;
    kernel.push_back(std::move(r));
  }
  std::size_t n_prev = 1;
  try {
    for (int l = 1; l <= max_degree; ++l) {
      const std::size_t big_n = n_prev * d;
      if (!fits(static_cast<double>(big_n), static_cast<double>(big_n)))
        throw fp::WorkLimitExceeded{};

      fp::EchelonBasis span(static_cast<Eigen::Index>(big_n), p, &meter);
      for (std::size_t a = 1; a < d; ++a)
        for (const auto& v : kernel) span.insert(act(b, a, v.data(), n_prev));
      std::vector<Row> gens;
      for (const auto& v : kernel)
        if (span.insert(v)) gens.push_back(v);

      const auto rows = static_cast<Eigen::Index>(gens.size());
      FpMatrix dl(rows, static_cast<Eigen::Index>(big_n));
      for (std::size_t t = 0; t < gens.size(); ++t) {
        for (std::size_t c = 0; c < n_prev; ++c)
          if (gens[t][c * d] != 0) throw Error("syzygy generator has a unit component");
        std::copy(gens[t].begin(), gens[t].end(), dl.row(static_cast<Eigen::Index>(t)).data());
      }
      const std::size_t n_l = gens.size();

      if (l < max_degree) {
        const std::size_t cols = n_l * d;
        if (!fits(static_cast<double>(big_n), static_cast<double>(cols))) throw fp::WorkLimitExceeded{};
        FpMatrix null = fp::nullspace(span_matrix(b, dl, n_prev), p, &meter);
        if (static_cast<std::size_t>(static_cast<Eigen::Index>(cols) - null.rows()) != kernel.size())
          throw Error("resolution is not exact in degree " + std::to_string(l - 1));
        kernel.assign(static_cast<std::size_t>(null.rows()), Row(cols));
        for (Eigen::Index r = 0; r < null.rows(); ++r)
          std::copy(null.row(r).data(), null.row(r).data() + cols,
                    kernel[static_cast<std::size_t>(r)].begin());
      }
      betti.push_back(n_l);
      diffs.push_back(std::move(dl));
      n_prev = n_l;
    }
  } catch (const fp::WorkLimitExceeded&) {
    if (!allow_partial)
      throw ResolutionTooLarge("minimal resolution exceeds its budget in degree " +
                               std::to_string(betti.size()));
  }
  return MinimalResolution(b, std::move(betti), std::move(diffs));
}

void validate_resolution(const MinimalResolution& r) {
  const auto& b = r.block();
  const std::size_t d = b.dim();
  const FpScalar p = b.p();
  Eigen::Index prev_rank = 1;  // the augmentation B -> k
  for (int l = 1; l <= r.length(); ++l) {
    const auto& dl = r.differential(l);
    const std::size_t n_prev = r.betti()[static_cast<std::size_t>(l - 1)];
    if (static_cast<std::size_t>(dl.rows()) != r.betti()[static_cast<std::size_t>(l)])
      throw Error("differential " + std::to_string(l) + " has the wrong number of generators");
    if ((r.reduced_differential(l).array() != 0).any())
      throw Error("differential " + std::to_string(l) + " is not minimal");
    if (l >= 2) {
      const auto& prev = r.differential(l - 1);
      const std::size_t n_prev2 = r.betti()[static_cast<std::size_t>(l - 2)];
      for (Eigen::Index g = 0; g < dl.rows(); ++g) {
        Row image(n_prev2 * d, 0);
        for (std::size_t t = 0; t < n_prev; ++t) {
          Row part = multiply_into(b, dl.row(g).data() + t * d, prev.row(static_cast<Eigen::Index>(t)).data(),
                                   n_prev2);
          fp::axpy(image.data(), part.data(), 1, p, static_cast<Eigen::Index>(image.size()));
        }
        if (!all_zero(image)) throw Error("d_" + std::to_string(l - 1) + " d_" + std::to_string(l) + " != 0");
      }
    }
    const Eigen::Index rank = fp::rank(span_matrix(b, dl, n_prev), p);
    if (rank != static_cast<Eigen::Index>(n_prev * d) - prev_rank)
      throw Error("resolution is not exact in degree " + std::to_string(l - 1));
    prev_rank = rank;
  }
}

namespace {

using Word = std::string;
using Poly = std::map<Word, FpScalar>;

class GroebnerTruncated {
public:
  GroebnerTruncated(int alphabet, FpScalar p) : alphabet_(alphabet), p_(p) {}

  void add_degree(std::vector<Poly> candidates) {
    for (auto& f : candidates) {
      Poly r = reduce(std::move(f));
      if (r.empty()) continue;
      const FpScalar inv = fp::inverse(r.rbegin()->second, p_);
      for (auto& [w, c] : r) c = static_cast<FpScalar>(std::int64_t(c) * inv % p_);
      lead_index_[r.rbegin()->first] = basis_.size();
      lead_lengths_.insert(r.rbegin()->first.size());
      basis_.push_back(std::move(r));
    }
  }

  std::vector<Poly> overlaps(std::size_t degree) const {
    std::vector<Poly> out;
    for (const auto& g : basis_)
      for (const auto& h : basis_) {
        const Word& lg = g.rbegin()->first;
        const Word& lh = h.rbegin()->first;
        for (std::size_t k = 1; k < std::min(lg.size(), lh.size()); ++k) {
          if (lg.size() + lh.size() - k != degree) continue;
          if (lg.compare(lg.size() - k, k, lh, 0, k) != 0) continue;
          const Word u = lg.substr(0, lg.size() - k), v = lh.substr(k);
          Poly s;
          for (const auto& [w, c] : g) add(s, w + v, c);
          for (const auto& [w, c] : h) add(s, u + w, p_ - c);
          out.push_back(std::move(s));
        }
      }
    return out;
  }

  std::vector<Word> leads() const {
    std::vector<Word> out;
    for (const auto& g : basis_) out.push_back(g.rbegin()->first);
    return out;
  }

private:
  void add(Poly& f, const Word& w, FpScalar c) const {
    auto [it, inserted] = f.try_emplace(w, 0);
    it->second = static_cast<FpScalar>((it->second + c) % p_);
    if (it->second == 0) f.erase(it);
  }

  Poly reduce(Poly f) const {
    Poly done;
    while (!f.empty()) {
      auto top = std::prev(f.end());
      const Word m = top->first;
      const FpScalar c = top->second;
      const Poly* g = nullptr;
      std::size_t at = 0, len = 0;
      for (std::size_t l : lead_lengths_) {
        for (std::size_t i = 0; i + l <= m.size() && !g; ++i) {
          auto it = lead_index_.find(m.substr(i, l));
          if (it != lead_index_.end()) {
            g = &basis_[it->second];
            at = i;
            len = l;
          }
        }
        if (g) break;
      }
      if (!g) {
        done.emplace(m, c);
        f.erase(top);
        continue;
      }
      const Word u = m.substr(0, at), v = m.substr(at + len);
      for (const auto& [w, gc] : *g)
        add(f, u + w + v, static_cast<FpScalar>((p_ - std::int64_t(c) * gc % p_) % p_));
    }
    return done;
  }

  int alphabet_;
  FpScalar p_;
  std::vector<Poly> basis_;
  std::unordered_map<Word, std::size_t> lead_index_;
  std::set<std::size_t> lead_lengths_;
};

// Number of words of each length <= D over an alphabet avoiding every
// pattern as a factor (Aho-Corasick automaton plus dynamic programming).
std::vector<std::int64_t> count_avoiding(int alphabet, const std::vector<Word>& patterns, int max_len) {
  const auto sigma = static_cast<std::size_t>(alphabet);
  std::vector<std::vector<int>> go(1, std::vector<int>(sigma, -1));
  std::vector<char> bad(1, 0);
  for (const auto& w : patterns) {
    int s = 0;
    for (unsigned char ch : w) {
      if (go[static_cast<std::size_t>(s)][ch] < 0) {
        go[static_cast<std::size_t>(s)][ch] = static_cast<int>(go.size());
        go.emplace_back(sigma, -1);
        bad.push_back(0);
      }
      s = go[static_cast<std::size_t>(s)][ch];
    }
    bad[static_cast<std::size_t>(s)] = 1;
  }
  std::vector<int> fail(go.size(), 0), queue;
  for (std::size_t a = 0; a < sigma; ++a) {
    int& t = go[0][a];
    if (t < 0) {
      t = 0;
    } else {
      fail[static_cast<std::size_t>(t)] = 0;
      queue.push_back(t);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto s = static_cast<std::size_t>(queue[qi]);
    bad[s] = bad[s] || bad[static_cast<std::size_t>(fail[s])];
    for (std::size_t a = 0; a < sigma; ++a) {
      int& t = go[s][a];
      if (t < 0) {
        t = go[static_cast<std::size_t>(fail[s])][a];
      } else {
        fail[static_cast<std::size_t>(t)] = go[static_cast<std::size_t>(fail[s])][a];
        queue.push_back(t);
      }
    }
  }
  std::vector<std::int64_t> counts{1};
  std::vector<std::int64_t> cur(go.size(), 0);
  cur[0] = 1;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::int64_t> next(go.size(), 0);
    for (std::size_t s = 0; s < go.size(); ++s) {
      if (cur[s] == 0) continue;
      for (std::size_t a = 0; a < sigma; ++a) {
        const auto t = static_cast<std::size_t>(go[s][a]);
        if (!bad[t]) next[t] = checked_add(next[t], cur[s]);
      }
    }
    std::int64_t total = 0;
    for (auto x : next) total = checked_add(total, x);
    counts.push_back(total);
    cur = std::move(next);
  }
  return counts;
}

struct QuadraticData {
  std::size_t e = 0, w = 0;
  std::vector<Poly> relations;
};

QuadraticData quadratic_data(const LocalBlock& b) {
  const auto d = static_cast<Eigen::Index>(b.dim());
  const FpScalar p = b.p();
  if (maximal_ideal_power(b, 3).rows() != 0)
    throw Error("the maximal ideal does not satisfy M^3 = 0");
  const FpMatrix m2 = maximal_ideal_power(b, 2);
  fp::EchelonBasis span(d, p);
  for (Eigen::Index r = 0; r < m2.rows(); ++r) span.insert(Row(m2.row(r).data(), m2.row(r).data() + d));
  std::vector<FpVector> v;
  for (Eigen::Index a = 1; a < d; ++a) {
    Row u(static_cast<std::size_t>(d), 0);
    u[static_cast<std::size_t>(a)] = 1;
    if (span.insert(u)) {
      FpVector x = FpVector::Zero(d);
      x(a) = 1;
      v.push_back(x);
    }
  }
  QuadraticData q;
  q.e = v.size();
  q.w = static_cast<std::size_t>(m2.rows());
  if (q.e > 127) throw Error("embedding dimension too large");
  const FpMatrix m2t = m2.transpose();
  std::vector<Poly> rel(q.w);
  for (std::size_t a = 0; a < q.e; ++a)
    for (std::size_t c = 0; c < q.e; ++c) {
      auto coeffs = fp::solve(m2t, b.multiply(v[a], v[c]), p);
      if (!coeffs) throw Error("product of two elements of M is not in M^2");
      const Word word{static_cast<char>(a), static_cast<char>(c)};
      for (std::size_t k = 0; k < q.w; ++k) {
        const auto coeff = (*coeffs)(static_cast<Eigen::Index>(k));
        if (coeff != 0) rel[k][word] = coeff;
      }
    }
  q.relations = std::move(rel);
  return q;
}

}  // namespace

std::vector<std::int64_t> quadratic_dual_hilbert(const LocalBlock& b, int max_degree) {
  const auto q = quadratic_data(b);
  const auto e = static_cast<int>(q.e);
  if (e == 0) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    out[0] = 1;
    return out;
  }
  GroebnerTruncated gb(e, b.p());
  gb.add_degree(q.relations);
  for (int deg = 3; deg <= max_degree; ++deg) gb.add_degree(gb.overlaps(static_cast<std::size_t>(deg)));
  return count_avoiding(e, gb.leads(), max_degree);
}

std::vector<std::int64_t> betti_via_quadratic_dual(const LocalBlock& b, int max_degree) {
  const auto q = quadratic_data(b);
  const auto n = static_cast<std::size_t>(max_degree) + 1;
  const auto a = quadratic_dual_hilbert(b, max_degree + 1);
  // inv = 1 / A(t) up to degree L + 1
  std::vector<std::int64_t> inv(n + 1, 0);
  inv[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 1; j <= k; ++j) s = checked_add(s, checked_mul(a[j], inv[k - j]));
    inv[k] = -s;
  }
  // Q = 1/P = inv + (inv - 1)/t + e - w t
  std::vector<std::int64_t> qs(n, 0);
  for (std::size_t k = 0; k < n; ++k) qs[k] = checked_add(inv[k], inv[k + 1]);
  qs[0] = checked_add(qs[0], static_cast<std::int64_t>(q.e));
  if (n > 1) qs[1] -= static_cast<std::int64_t>(q.w);
  if (qs[0] != 1) throw Error("Poincare series has a non-unit constant term");
  std::vector<std::int64_t> out(n, 0);
  out[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 1; j <= k; ++j) s = checked_add(s, checked_mul(qs[j], out[k - j]));
    out[k] = -s;
    if (out[k] < 0) throw Error("negative Betti number from the Poincare series");
  }
  return out;
}

BettiNumbers betti_sequence(const LocalBlock& b, int max_degree, BettiMethod method,
                            const ResolutionBudget& budget) {
  BettiNumbers out;
  if (method == BettiMethod::QuadraticDual) {
    out.values = betti_via_quadratic_dual(b, max_degree);
    out.quadratic_dual = true;
    return out;
  }
  const bool series = method == BettiMethod::Auto && maximal_ideal_power(b, 3).rows() == 0;
  ResolutionBudget direct = budget;
  if (series) direct.max_work = std::min(budget.max_work, budget.confirm_work);
  const auto res = minimal_resolution(b, max_degree, direct, method == BettiMethod::Auto);
  for (auto x : res.betti()) out.values.push_back(static_cast<std::int64_t>(x));
  out.direct_degree = res.length();
  if (res.length() == max_degree) return out;

  if (!series)
    throw ResolutionTooLarge("block with M^3 != 0 exceeds the resolution budget at degree " +
                             std::to_string(res.length() + 1));
  auto fast = betti_via_quadratic_dual(b, max_degree);
  for (std::size_t l = 0; l < out.values.size(); ++l)
    if (fast[l] != out.values[l])
      throw Error("Betti numbers from the series and the resolution disagree in degree " +
                  std::to_string(l));
  out.values = std::move(fast);
  out.quadratic_dual = true;
  return out;
}

namespace {

const LocalBlock* shared_block(const ModPAlgebra& a, const std::vector<LocalBlock>& blocks,
                               std::size_t i, std::size_t j) {
  const auto& cls = a.classes();
  if (i >= cls.class_of.size() || j >= cls.class_of.size()) throw InvalidLabel("index out of range");
  if (!cls.related(i, j)) return nullptr;
  return &blocks.at(cls.class_of[i]);
}

}  // namespace

std::vector<std::int64_t> ext_dims_pair(const ModPAlgebra& a, const std::vector<LocalBlock>& blocks,
                                        std::size_t i, std::size_t j, int max_degree,
                                        const ResolutionBudget& budget) {
  const auto* b = shared_block(a, blocks, i, j);
  if (!b) return std::vector<std::int64_t>(static_cast<std::size_t>(max_degree) + 1, 0);
  return betti_sequence(*b, max_degree, BettiMethod::Auto, budget).values;
}

std::vector<std::int64_t> tor_dims(const MinimalResolution& res, int max_degree) {
  if (max_degree >= res.length()) throw std::invalid_argument("tor_dims needs degree max_degree + 1");
  const int p = res.block().p();
  std::vector<Eigen::Index> ranks(static_cast<std::size_t>(max_degree) + 2, 0);
  for (int l = 1; l <= max_degree + 1; ++l)
    ranks[static_cast<std::size_t>(l)] = fp::rank(res.reduced_differential(l), p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int l = 0; l <= max_degree; ++l) {
    const auto n = static_cast<std::int64_t>(res.betti()[static_cast<std::size_t>(l)]);
    const auto at = static_cast<std::size_t>(l);
    out[at] = n - ranks[at] - ranks[at + 1];
  }
  return out;
}

std::vector<std::int64_t> tor_dims_pair(const ModPAlgebra& a, const std::vector<LocalBlock>& blocks,
                                        std::size_t i, std::size_t j, int max_degree,
                                        const ResolutionBudget& budget) {
  const auto* b = shared_block(a, blocks, i, j);
  if (!b) return std::vector<std::int64_t>(static_cast<std::size_t>(max_degree) + 1, 0);
  return tor_dims(minimal_resolution(*b, max_degree + 1, budget), max_degree);
}

}  // namespace burnside
