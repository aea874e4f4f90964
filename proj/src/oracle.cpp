#include "burnside/oracle.hpp"

#include "burnside/error.hpp"
#include "burnside/linalg/fp.hpp"
#include "burnside/linalg/integer.hpp"

namespace burnside {

namespace {

/// The Z-linear map F_l -> F_{l-1}: row (t, s) is b_s times the image of the
/// t-th generator.
BigMatrix expand(const BRing& r, const BigMatrix& gens, std::size_t m_prev) {
  const auto n = static_cast<Eigen::Index>(r.size());
  BigMatrix out = BigMatrix::Zero(gens.rows() * n, gens.cols());
  for (Eigen::Index t = 0; t < gens.rows(); ++t)
    for (Eigen::Index u = 0; u < static_cast<Eigen::Index>(m_prev); ++u)
      for (Eigen::Index c = 0; c < n; ++c) {
        const BigInt& coeff = gens(t, u * n + c);
        if (coeff == 0) continue;
        for (Eigen::Index s = 0; s < n; ++s) {
          const BigVector& prod = r.product_coordinates(static_cast<std::size_t>(c),
                                                        static_cast<std::size_t>(s));
          for (Eigen::Index k = 0; k < n; ++k)
            if (prod(k) != 0) out(t * n + s, u * n + k) += coeff * prod(k);
        }
      }
  return out;
}

bool product_is_zero(const BigMatrix& a, const BigMatrix& b) {
  BigInt acc;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (a(r, k) != 0 && b(k, c) != 0) acc += a(r, k) * b(k, c);
      if (acc != 0) return false;
    }
  return true;
}

struct Smith {
  Eigen::Index rank = 0;
  std::vector<BigInt> nonunits;
};

Smith smith(const BigMatrix& m) {
  Smith out;
  if (m.rows() == 0 || m.cols() == 0) return out;
  for (auto& d : linalg::smith_diagonal(m)) {
    ++out.rank;
    if (d != 1) out.nonunits.push_back(d);
  }
  return out;
}

}  // namespace

IntegralResolution IntegralResolution::build(const BRing& r, std::size_t i, int length,
                                             std::size_t max_rank) {
  if (length < 1) throw std::invalid_argument("resolution length must be positive");
  const auto n = static_cast<Eigen::Index>(r.size());
  IntegralResolution res(r, i);
  res.ranks_.push_back(1);

  // augmentation R -> Z_i, b_s -> b_s(i); each d maps F_{l-1} to F_{l-2}
  BigMatrix d = r.basis().col(static_cast<Eigen::Index>(i));
  for (int l = 1; l <= length; ++l) {
    auto hf = linalg::hermite(d, /*with_transform=*/true);
    // the image of d must be the whole previous kernel, whose rank is m_{l-1}
    const Eigen::Index expected = l == 1 ? 1 : static_cast<Eigen::Index>(res.ranks_.back());
    if (hf.rank() != expected)
      throw Error("integral resolution is not exact in degree " + std::to_string(l - 2));
    const Eigen::Index k = d.rows() - hf.rank();
    if (static_cast<std::size_t>(k * n) > max_rank)
      throw ResolutionTooLarge("integral resolution needs rank " + std::to_string(k * n) +
                               " in degree " + std::to_string(l));
    BigMatrix kernel = hf.transform.bottomRows(k);
    BigMatrix gens = linalg::hermite(kernel).form;
    BigMatrix next = expand(r, gens, res.ranks_.back());
    if (!product_is_zero(next, d)) throw Error("integral differentials do not compose to zero");
    res.ranks_.push_back(static_cast<std::size_t>(k));
    res.generators_.push_back(std::move(gens));
    d = std::move(next);
  }
  if (linalg::rank(d) != static_cast<Eigen::Index>(res.ranks_.back()))
    throw Error("integral resolution is not exact in degree " + std::to_string(length - 1));
  return res;
}

BigMatrix IntegralResolution::evaluated(int l, std::size_t j) const {
  const auto n = static_cast<Eigen::Index>(ring_->size());
  const BigMatrix& g = generators(l);
  const auto m_prev = static_cast<Eigen::Index>(ranks_[static_cast<std::size_t>(l - 1)]);
  BigMatrix out = BigMatrix::Zero(g.rows(), m_prev);
  for (Eigen::Index t = 0; t < g.rows(); ++t)
    for (Eigen::Index u = 0; u < m_prev; ++u)
      for (Eigen::Index s = 0; s < n; ++s)
        if (g(t, u * n + s) != 0)
          out(t, u) += g(t, u * n + s) * ring_->basis()(s, static_cast<Eigen::Index>(j));
  return out;
}

namespace {

void require_length(const IntegralResolution& res, int max_degree) {
  if (res.length() < max_degree + 1)
    throw std::invalid_argument("integral resolution too short for degree " +
                                std::to_string(max_degree));
}

}  // namespace

std::vector<AbelianGroup> oracle_ext(const IntegralResolution& res, std::size_t j, int max_degree) {
  require_length(res, max_degree);
  std::vector<Smith> c{Smith{}};
  for (int l = 1; l <= max_degree + 1; ++l) c.push_back(smith(res.evaluated(l, j)));
  std::vector<AbelianGroup> out;
  for (int l = 0; l <= max_degree; ++l) {
    const auto m = static_cast<Eigen::Index>(res.ranks()[static_cast<std::size_t>(l)]);
    const auto& f = c[static_cast<std::size_t>(l)];
    const auto& g = c[static_cast<std::size_t>(l + 1)];
    out.emplace_back(static_cast<int>(m - f.rank - g.rank), f.nonunits);
  }
  return out;
}

std::vector<AbelianGroup> oracle_tor(const IntegralResolution& res, std::size_t j, int max_degree) {
  require_length(res, max_degree);
  std::vector<Smith> c{Smith{}};
  for (int l = 1; l <= max_degree + 1; ++l) c.push_back(smith(res.evaluated(l, j)));
  std::vector<AbelianGroup> out;
  for (int l = 0; l <= max_degree; ++l) {
    const auto m = static_cast<Eigen::Index>(res.ranks()[static_cast<std::size_t>(l)]);
    const auto& f = c[static_cast<std::size_t>(l + 1)];
    const auto& g = c[static_cast<std::size_t>(l)];
    out.emplace_back(static_cast<int>(m - f.rank - g.rank), f.nonunits);
  }
  return out;
}

std::vector<AbelianGroup> oracle_ext(const BRing& r, std::size_t i, std::size_t j, int max_degree) {
  return oracle_ext(IntegralResolution::build(r, i, max_degree + 1), j, max_degree);
}

std::vector<AbelianGroup> oracle_tor(const BRing& r, std::size_t i, std::size_t j, int max_degree) {
  return oracle_tor(IntegralResolution::build(r, i, max_degree + 1), j, max_degree);
}

std::vector<std::int64_t> oracle_ext_mod_p(const IntegralResolution& res, std::size_t j, int p,
                                           int max_degree) {
  fp::require_prime(p);
  require_length(res, max_degree);
  std::vector<Eigen::Index> ranks{0};
  for (int l = 1; l <= max_degree + 1; ++l)
    ranks.push_back(fp::rank(fp::reduce(res.evaluated(l, j), p), p));
  std::vector<std::int64_t> out;
  for (int l = 0; l <= max_degree; ++l)
    out.push_back(static_cast<std::int64_t>(res.ranks()[static_cast<std::size_t>(l)]) -
                  ranks[static_cast<std::size_t>(l)] - ranks[static_cast<std::size_t>(l + 1)]);
  return out;
}

}  // namespace burnside
