#include "burnside/modp.hpp"

#include <string>

#include "burnside/error.hpp"

namespace burnside {

namespace {

std::vector<FpScalar> to_std(const FpVector& v) { return {v.data(), v.data() + v.size()}; }

FpVector from_std(const std::vector<FpScalar>& v) {
  return Eigen::Map<const FpVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

bool is_zero(const FpVector& v) { return (v.array() == 0).all(); }

// x * y for coordinates in a basis with structure(a)(b, c) = coeff of c in a*b
FpVector structured_product(const std::vector<FpMatrix>& structure, FpScalar p, const FpVector& x,
                            const FpVector& y) {
  const auto n = static_cast<Eigen::Index>(structure.size());
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
  for (Eigen::Index a = 0; a < n; ++a) {
    if (x(a) == 0) continue;
    const auto& s = structure[static_cast<std::size_t>(a)];
    for (Eigen::Index b = 0; b < n; ++b) {
      if (y(b) == 0) continue;
      const std::int64_t f = std::int64_t(x(a)) * y(b) % p;
      for (Eigen::Index c = 0; c < n; ++c) acc[c] += f * s(b, c);
    }
  }
  FpVector out(n);
  for (Eigen::Index c = 0; c < n; ++c) out(c) = fp::mod(acc[c], p);
  return out;
}

// Rows spanning the products of the rows of `lhs` with the rows of `rhs`.
FpMatrix product_space(const std::vector<FpMatrix>& structure, FpScalar p, const FpMatrix& lhs,
                       const FpMatrix& rhs) {
  const auto n = static_cast<Eigen::Index>(structure.size());
  fp::EchelonBasis span(n, p);
  for (Eigen::Index a = 0; a < lhs.rows(); ++a)
    for (Eigen::Index b = 0; b < rhs.rows(); ++b)
      span.insert(to_std(structured_product(structure, p, lhs.row(a).transpose(),
                                            rhs.row(b).transpose())));
  FpMatrix out(span.rank(), n);
  for (Eigen::Index r = 0; r < span.rank(); ++r)
    out.row(r) = from_std(span.row(r)).transpose();
  return out;
}

}  // namespace

ModPAlgebra ModPAlgebra::build(const BRing& r, const CongruenceMatrix& d, int p) {
  fp::require_prime(p);
  ModPAlgebra a;
  a.p_ = p;
  a.classes_ = p_classes(r, d, p);
  const auto n = static_cast<Eigen::Index>(r.size());

  a.theta_.resize(static_cast<Eigen::Index>(a.classes_.classes.size()), n);
  for (std::size_t e = 0; e < a.classes_.classes.size(); ++e) {
    const auto i = static_cast<Eigen::Index>(a.classes_.classes[e].front());
    for (Eigen::Index s = 0; s < n; ++s)
      a.theta_(static_cast<Eigen::Index>(e), s) = fp::mod(r.basis()(s, i), p);
  }

  a.structure_.assign(static_cast<std::size_t>(n), FpMatrix::Zero(n, n));
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index t = 0; t < n; ++t) {
      const auto& c = r.product_coordinates(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
      for (Eigen::Index u = 0; u < n; ++u) a.structure_[s](t, u) = fp::mod(c(u), p);
    }
  a.one_ = fp::reduce(r.unit_coordinates(), p);

  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index t = 0; t < n; ++t)
      if (a.structure_[s].row(t) != a.structure_[t].row(s))
        throw InvalidBRing("reduction mod " + std::to_string(p) + " is not commutative");
    FpVector bs = FpVector::Zero(n);
    bs(s) = 1;
    if (a.multiply(a.one_, bs) != bs) throw InvalidBRing("unit does not act as identity mod p");
  }
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index t = s; t < n; ++t) {
      const FpVector st = a.structure_[s].row(t).transpose();
      for (Eigen::Index u = 0; u < n; ++u) {
        const FpVector tu = a.structure_[t].row(u).transpose();
        FpVector bs = FpVector::Zero(n), bu = FpVector::Zero(n);
        bs(s) = 1;
        bu(u) = 1;
        if (a.multiply(st, bu) != a.multiply(bs, tu))
          throw InvalidBRing("reduction mod " + std::to_string(p) + " is not associative");
      }
    }

  // theta is an algebra map: it respects products of basis elements
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index t = 0; t < n; ++t) {
      const FpVector st = a.structure_[s].row(t).transpose();
      const FpVector lhs = a.theta_ * st;
      for (Eigen::Index e = 0; e < a.theta_.rows(); ++e)
        if (fp::mod(lhs(e), p) !=
            fp::mod(std::int64_t(a.theta_(e, s)) * a.theta_(e, t), p))
          throw InvalidBRing("evaluation map is not multiplicative mod p");
    }
  if (fp::rank(a.theta_, p) != a.theta_.rows())
    throw InvalidBRing("evaluation map onto the ~p classes is not surjective");
  return a;
}

FpVector ModPAlgebra::multiply(const FpVector& x, const FpVector& y) const {
  return structured_product(structure_, p_, x, y);
}

FpVector ModPAlgebra::power(FpVector x, std::int64_t e) const {
  FpVector result = one_;
  while (e > 0) {
    if (e & 1) result = multiply(result, x);
    e >>= 1;
    if (e > 0) x = multiply(x, x);
  }
  return result;
}

FpMatrix ModPAlgebra::multiplication_matrix(const FpVector& x) const {
  const auto n = static_cast<Eigen::Index>(dim());
  FpMatrix m(n, n);
  for (Eigen::Index t = 0; t < n; ++t) {
    FpVector bt = FpVector::Zero(n);
    bt(t) = 1;
    m.col(t) = multiply(x, bt);
  }
  return m;
}

FpMatrix radical(const ModPAlgebra& a) {
  FpMatrix rad = fp::nullspace(a.theta(), a.p());
  FpMatrix power = rad;
  for (std::size_t k = 0; power.rows() > 0; ++k) {
    if (k > a.dim()) throw Error("kernel of the evaluation map is not nilpotent");
    std::vector<FpMatrix> s;
    for (std::size_t i = 0; i < a.dim(); ++i) s.push_back(a.structure(i));
    power = product_space(s, a.p(), power, rad);
  }
  return rad;
}

FpMatrix nilradical_by_enumeration(const ModPAlgebra& a, std::size_t max_elements) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  const auto p = a.p();
  std::size_t total = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(p);
    if (total > max_elements) throw CapExceeded("algebra too large to enumerate");
  }
  fp::EchelonBasis span(n, p);
  FpVector x = FpVector::Zero(n);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t code = k;
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = static_cast<FpScalar>(code % static_cast<std::size_t>(p));
      code /= static_cast<std::size_t>(p);
    }
    if (is_zero(a.power(x, n))) span.insert(to_std(x));
  }
  FpMatrix out(span.rank(), n);
  for (Eigen::Index r = 0; r < span.rank(); ++r) out.row(r) = from_std(span.row(r)).transpose();
  return out;
}

LocalBlock::LocalBlock(int p, std::vector<std::size_t> indices, FpVector idempotent,
                       FpMatrix ambient_basis, std::vector<FpMatrix> structure)
    : p_(p),
      indices_(std::move(indices)),
      idempotent_(std::move(idempotent)),
      ambient_basis_(std::move(ambient_basis)),
      structure_(std::move(structure)) {}

FpVector LocalBlock::multiply(const FpVector& x, const FpVector& y) const {
  return structured_product(structure_, p_, x, y);
}

FpVector class_indicator(const BRing& r, const ModPAlgebra& a, std::size_t cls) {
  const auto& classes = a.classes();
  const auto p = a.p();
  const auto n = static_cast<Eigen::Index>(a.dim());
  const auto i = static_cast<Eigen::Index>(classes.classes[cls].front());
  FpVector e = a.one();
  for (std::size_t other = 0; other < classes.classes.size(); ++other) {
    if (other == cls) continue;
    const auto j = static_cast<Eigen::Index>(classes.classes[other].front());
    Eigen::Index s = 0;
    while (s < n && fp::mod(BigInt(r.basis()(s, i) - r.basis()(s, j)), p) == 0) ++s;
    if (s == n) throw SeparationFailure("no basis element distinguishes two ~p classes mod p");
    // (b_s - b_s(j) * 1)^(p-1) is 1 at i and 0 at j modulo the radical
    FpVector f = FpVector::Zero(n);
    f(s) = 1;
    const FpScalar shift = fp::mod(r.basis()(s, j), p);
    for (Eigen::Index k = 0; k < n; ++k) f(k) = fp::mod(std::int64_t(f(k)) - shift * a.one()(k), p);
    e = a.multiply(e, a.power(f, p - 1));
  }
  return e;
}

std::vector<LocalBlock> blocks(const BRing& r, const ModPAlgebra& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  const auto p = a.p();
  const FpMatrix rad = radical(a);
  std::vector<FpMatrix> ambient;
  for (std::size_t i = 0; i < a.dim(); ++i) ambient.push_back(a.structure(i));

  std::vector<LocalBlock> out;
  FpVector sum = FpVector::Zero(n);
  for (std::size_t cls = 0; cls < a.classes().classes.size(); ++cls) {
    FpVector e = class_indicator(r, a, cls);
    bool idempotent = false;
    for (std::size_t step = 0; step <= a.dim(); ++step) {
      if (a.multiply(e, e) == e) {
        idempotent = true;
        break;
      }
      e = a.power(e, p);
    }
    if (!idempotent)
      throw IdempotentLiftDivergence("p-th powers of the class indicator did not stabilize");

    FpMatrix e_row(1, n);
    e_row.row(0) = e.transpose();
    const FpMatrix e_rad = product_space(ambient, p, e_row, rad);
    FpMatrix ident = FpMatrix::Identity(n, n);
    const auto block_rank = product_space(ambient, p, e_row, ident).rows();
    const auto& members = a.classes().classes[cls];
    if (block_rank != e_rad.rows() + 1)
      throw NotLocal("block of class " + std::to_string(cls) + " has residue dimension " +
                     std::to_string(block_rank - e_rad.rows()));
    if (static_cast<std::size_t>(block_rank) != members.size())
      throw NotLocal("block dimension differs from the size of its ~p class");

    const Eigen::Index bd = block_rank;
    FpMatrix basis(bd, n);
    basis.row(0) = e.transpose();
    basis.bottomRows(bd - 1) = e_rad;
    const FpMatrix basis_t = basis.transpose();
    std::vector<FpMatrix> local(static_cast<std::size_t>(bd), FpMatrix::Zero(bd, bd));
    for (Eigen::Index u = 0; u < bd; ++u)
      for (Eigen::Index v = 0; v < bd; ++v) {
        const FpVector prod = a.multiply(basis.row(u).transpose(), basis.row(v).transpose());
        auto c = fp::solve(basis_t, prod, p);
        if (!c) throw NotLocal("block is not closed under multiplication");
        local[static_cast<std::size_t>(u)].row(v) = c->transpose();
      }
    for (Eigen::Index k = 0; k < n; ++k) sum(k) = static_cast<FpScalar>((sum(k) + e(k)) % p);
    out.emplace_back(p, members, std::move(e), std::move(basis), std::move(local));
  }
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t y = x + 1; y < out.size(); ++y)
      if (!is_zero(a.multiply(out[x].idempotent(), out[y].idempotent())))
        throw Error("block idempotents are not orthogonal");
  if (sum != a.one()) throw Error("block idempotents do not sum to 1");
  return out;
}

FpMatrix maximal_ideal_power(const LocalBlock& b, int k) {
  const auto d = static_cast<Eigen::Index>(b.dim());
  std::vector<FpMatrix> s;
  for (std::size_t i = 0; i < b.dim(); ++i) s.push_back(b.structure(i));
  if (k <= 0) return FpMatrix::Identity(d, d);
  FpMatrix m = FpMatrix::Identity(d, d).bottomRows(d - 1);
  FpMatrix power = m;
  for (int i = 1; i < k && power.rows() > 0; ++i) power = product_space(s, b.p(), power, m);
  return power;
}

BlockInvariants block_invariants(const LocalBlock& b) {
  BlockInvariants inv;
  const auto d = static_cast<Eigen::Index>(b.dim());
  const auto p = b.p();
  inv.dim = b.dim();
  const auto m1 = maximal_ideal_power(b, 1);
  const auto m2 = maximal_ideal_power(b, 2);
  const auto m3 = maximal_ideal_power(b, 3);
  inv.m2_dim = static_cast<std::size_t>(m2.rows());
  inv.m3_dim = static_cast<std::size_t>(m3.rows());
  inv.m_mod_m2_dim = static_cast<std::size_t>(m1.rows() - m2.rows());
  for (int k = 1; maximal_ideal_power(b, k).rows() > 0; ++k)
    if (k > d) throw NotLocal("maximal ideal is not nilpotent");

  // ann(M): x with x * u_a = 0 for a >= 1
  FpMatrix conditions = FpMatrix::Zero(std::max<Eigen::Index>(1, (d - 1) * d), d);
  for (Eigen::Index a = 1; a < d; ++a)
    for (Eigen::Index c = 0; c < d; ++c)
      for (Eigen::Index x = 0; x < d; ++x) conditions((a - 1) * d + c, x) = b.structure(x)(a, c);
  inv.socle_dim = static_cast<std::size_t>(fp::nullspace(conditions, p).rows());
  inv.symmetric = inv.socle_dim == 1;
  inv.tor_bounded = inv.m_mod_m2_dim <= 1;
  return inv;
}

std::optional<bool> symmetric_by_truncated_polynomial_functional(const LocalBlock& b) {
  const auto d = static_cast<Eigen::Index>(b.dim());
  const auto p = b.p();
  if (d == 1) return true;
  const auto m2 = maximal_ideal_power(b, 2);
  if (d - 1 - m2.rows() > 1) return std::nullopt;

  fp::EchelonBasis m2_span(d, p);
  for (Eigen::Index r = 0; r < m2.rows(); ++r) m2_span.insert(to_std(m2.row(r).transpose()));
  FpVector t = FpVector::Zero(d);
  for (Eigen::Index a = 1; a < d; ++a) {
    FpVector u = FpVector::Zero(d);
    u(a) = 1;
    if (!m2_span.contains(to_std(u))) {
      t = u;
      break;
    }
  }
  // powers 1, t, ..., t^(d-1) form a basis of k[t]/(t^d)
  FpMatrix powers(d, d);
  FpVector cur = FpVector::Zero(d);
  cur(0) = 1;
  for (Eigen::Index k = 0; k < d; ++k) {
    powers.col(k) = cur;
    cur = b.multiply(cur, t);
  }
  if (!is_zero(cur) || fp::rank(powers, p) != d) throw NotLocal("block is not a truncated polynomial ring");

  FpMatrix gram(d, d);
  for (Eigen::Index x = 0; x < d; ++x)
    for (Eigen::Index y = 0; y < d; ++y) {
      FpVector ex = FpVector::Zero(d), ey = FpVector::Zero(d);
      ex(x) = 1;
      ey(y) = 1;
      auto coeffs = fp::solve(powers, b.multiply(ex, ey), p);
      gram(x, y) = (*coeffs)(d - 1);
    }
  return fp::rank(gram, p) == d;
}

nlohmann::json blocks_to_json(const BRing& r, const ModPAlgebra& a,
                              const std::vector<LocalBlock>& bs) {
  auto labels_of = [&](const std::vector<std::size_t>& members) {
    nlohmann::json out = nlohmann::json::array();
    for (auto i : members) out.push_back(r.labels()[i]);
    return out;
  };
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : a.classes().classes) classes.push_back(labels_of(cls));
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : bs) {
    const auto inv = block_invariants(b);
    blocks.push_back({{"class", labels_of(b.indices())},
                      {"dim", inv.dim},
                      {"m_mod_m2", inv.m_mod_m2_dim},
                      {"socle", inv.socle_dim},
                      {"symmetric", inv.symmetric},
                      {"bounded", inv.tor_bounded}});
  }
  return {{"p", a.p()}, {"classes", classes}, {"blocks", blocks}};
}

}  // namespace burnside
