#include "burnside/bring.hpp"

#include <numeric>
#include <stdexcept>

#include "burnside/error.hpp"
#include "burnside/linalg/fp.hpp"

namespace burnside {

BRing::BRing(std::vector<std::string> labels, BigMatrix basis)
    : labels_(std::move(labels)), basis_(std::move(basis)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (n == 0) throw InvalidBRing("empty index set");
  if (basis_.rows() != n || basis_.cols() != n)
    throw InvalidBRing("a basis of a full-rank subring of Z^I needs |I| vectors of length |I|");
  hermite_ = linalg::hermite(basis_, /*with_transform=*/true);
  if (hermite_.rank() != n) throw InvalidBRing("basis vectors are linearly dependent");

  auto unit = coordinates(BigVector::Ones(n));
  if (!unit) throw InvalidBRing("the unit (1, ..., 1) is not in the span");
  unit_coords_ = *unit;

  products_.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index t = 0; t < n; ++t) {
      BigVector prod = basis_.row(s).transpose().cwiseProduct(basis_.row(t).transpose());
      auto c = coordinates(prod);
      if (!c)
        throw InvalidBRing("span is not closed under products (basis vectors " +
                           std::to_string(s) + ", " + std::to_string(t) + ")");
      products_.push_back(std::move(*c));
    }

  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j) separating_element(i, j);
}

std::size_t BRing::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw InvalidLabel("unknown index label '" + label + "'");
}

BigVector BRing::element(const BigVector& coeffs) const {
  if (coeffs.size() != basis_.rows()) throw BasisMismatch("coefficient vector has wrong length");
  BigVector out = BigVector::Zero(basis_.cols());
  for (Eigen::Index s = 0; s < basis_.rows(); ++s)
    if (coeffs(s) != 0)
      for (Eigen::Index k = 0; k < basis_.cols(); ++k) out(k) += coeffs(s) * basis_(s, k);
  return out;
}

std::optional<BigVector> BRing::coordinates(const BigVector& ghost) const {
  if (ghost.size() != basis_.cols()) throw BasisMismatch("ghost vector has wrong length");
  return linalg::solve_with_hermite(hermite_, ghost);
}

BigVector BRing::separating_element(std::size_t i, std::size_t j) const {
  const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
  for (Eigen::Index s = 0; s < basis_.rows(); ++s)
    if (basis_(s, ii) != 0 && basis_(s, jj) == 0) return basis_.row(s).transpose();
  const auto n = basis_.cols();
  for (Eigen::Index s = 0; s < basis_.rows(); ++s)
    if (basis_(s, jj) != 0 && basis_(s, ii) == 0)
      return BigVector::Constant(n, basis_(s, jj)) - basis_.row(s).transpose();
  for (Eigen::Index s = 0; s < basis_.rows(); ++s)
    if (basis_(s, ii) != basis_(s, jj))
      return basis_.row(s).transpose() - BigVector::Constant(n, basis_(s, jj));
  throw SeparationFailure("no element of R separates " + labels_[i] + " from " + labels_[j]);
}

BRing from_marks(const MarksTable& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  // Separation with the classical witnesses: if J is not subconjugate to H,
  // [G/H] itself; otherwise [N_G J : J][G/G] - [G/J].
  for (Eigen::Index h = 0; h < n; ++h)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (h == j) continue;
      bool ok;
      if (t(h, j) == 0) {
        ok = t(h, h) != 0;
      } else {
        const std::int64_t index = t(j, j);  // [N_G J : J]
        ok = index - t(j, h) != 0 && index - t(j, j) == 0;
      }
      if (!ok)
        throw SeparationFailure("marks table does not separate " + t.classes()[h].label +
                                " from " + t.classes()[j].label);
    }
  return BRing(t.classes().labels(), cast_matrix<BigInt>(t.matrix()));
}

const BigInt& CongruenceMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("d(i, j) is only defined for distinct indices");
  return d_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
}

CongruenceMatrix congruence_d(const BRing& r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  BigMatrix d = BigMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      BigVector diff = r.basis().col(i) - r.basis().col(j);
      BigInt g = linalg::gcd_of(diff);
      if (g == 0) throw SeparationFailure("indices " + r.labels()[i] + ", " + r.labels()[j]);
      d(i, j) = g;
      d(j, i) = g;
    }
  return CongruenceMatrix(std::move(d));
}

PrimeEquivalence p_classes(const BRing& r, const CongruenceMatrix& d, int p) {
  fp::require_prime(p);
  const std::size_t n = r.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) % p == 0) parent[find(j)] = find(i);

  PrimeEquivalence out;
  out.p = p;
  out.class_of.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.class_of[i] != SIZE_MAX) continue;
    const auto root = find(i);
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < n; ++j)
      if (find(j) == root) {
        members.push_back(j);
        out.class_of[j] = out.classes.size();
      }
    out.classes.push_back(std::move(members));
  }
  // p | d is already transitive; the union-find closure must not add pairs
  for (const auto& cls : out.classes)
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (d(cls[a], cls[b]) % p != 0)
          throw Error("p-divisibility of d is not transitive on " + r.labels()[cls[a]] + ", " +
                      r.labels()[cls[b]]);
  return out;
}

SeparatorSystem separators(const BRing& r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  SeparatorSystem out;
  out.n = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigVector s = BigVector::Ones(n);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (j != i) s = s.cwiseProduct(r.separating_element(i, j));
    auto c = r.coordinates(s);
    if (!c) throw Error("separator product left the ring");
    out.n *= s(static_cast<Eigen::Index>(i));
    out.ghost.push_back(std::move(s));
    out.coords.push_back(std::move(*c));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    BigVector ne = BigVector::Zero(n);
    ne(i) = out.n;
    if (!r.coordinates(ne)) throw Error("N * e_i is not in R for i = " + r.labels()[i]);
  }
  return out;
}

BigInt min_separator_value(const BRing& r, std::size_t i) {
  const auto n = static_cast<Eigen::Index>(r.size());
  const auto ii = static_cast<Eigen::Index>(i);
  // coefficient vectors c with (c^T B)_j = 0 for all j != i
  BigMatrix constraints(n - 1, n);
  for (Eigen::Index j = 0, row = 0; j < n; ++j) {
    if (j == ii) continue;
    constraints.row(row++) = r.basis().col(j).transpose();
  }
  BigMatrix kernel = linalg::kernel_basis(constraints);
  if (kernel.rows() != 1) throw Error("R meets Z e_i in a lattice of unexpected rank");
  BigInt v = 0;
  for (Eigen::Index s = 0; s < n; ++s) v += kernel(0, s) * r.basis()(s, ii);
  return v < 0 ? BigInt(-v) : v;
}

nlohmann::json dmatrix_to_json(const BRing& r, const CongruenceMatrix& d,
                               const std::vector<PrimeEquivalence>& partitions) {
  nlohmann::json entries = nlohmann::json::object();
  for (std::size_t i = 0; i < r.size(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t j = 0; j < r.size(); ++j)
      if (i != j) row[r.labels()[j]] = d(i, j).convert_to<std::int64_t>();
    entries[r.labels()[i]] = row;
  }
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& pe : partitions) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : pe.classes) {
      nlohmann::json members = nlohmann::json::array();
      for (auto i : cls) members.push_back(r.labels()[i]);
      classes.push_back(members);
    }
    parts.push_back({{"p", pe.p}, {"classes", classes}});
  }
  return {{"labels", r.labels()}, {"d", entries}, {"partitions", parts}};
}

}  // namespace burnside
