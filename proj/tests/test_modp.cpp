#include <doctest.h>

#include "burnside/error.hpp"
#include "burnside/groups.hpp"
#include "burnside/modp.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

struct Fixture {
  PermGroup g;
  MarksTable marks;
  BRing ring;
  CongruenceMatrix d;
  explicit Fixture(const std::string& name)
      : g(named_group(name)),
        marks(table_of_marks(g)),
        ring(from_marks(marks)),
        d(congruence_d(ring)) {}
  ModPAlgebra algebra(int p) const { return ModPAlgebra::build(ring, d, p); }
};

std::vector<std::size_t> block_dims(const std::vector<LocalBlock>& bs) {
  std::vector<std::size_t> out;
  for (const auto& b : bs) out.push_back(b.dim());
  return out;
}

bool square_free(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("algebra construction") {
  Fixture s3("S3");
  auto a2 = s3.algebra(2);
  CHECK(a2.dim() == 4);
  CHECK(a2.classes().classes.size() == 2);
  auto a5 = s3.algebra(5);
  CHECK(a5.dim() == 4);
  CHECK(fp::rank(a5.theta(), 5) == 4);
  CHECK_THROWS_AS(s3.algebra(4), InvalidPrime);
  Fixture c1("C1");
  CHECK(c1.algebra(7).dim() == 1);
}

TEST_CASE("radical") {
  Fixture s3("S3");
  CHECK(radical(s3.algebra(2)).rows() == 2);
  CHECK(radical(s3.algebra(5)).rows() == 0);
  Fixture c4("C4");
  CHECK(radical(c4.algebra(2)).rows() == 2);
}

TEST_CASE("radical equals the nilradical found by enumeration") {
  for (const auto& name : {"C2", "C4", "S3", "V4", "C6", "D4", "Q8", "C8", "C9", "D5", "A4"}) {
    Fixture f(name);
    for (int p : {2, 3, 5}) {
      CAPTURE(name);
      CAPTURE(p);
      auto a = f.algebra(p);
      auto rad = radical(a);
      CHECK(rad.rows() == static_cast<Eigen::Index>(a.dim() - a.classes().classes.size()));
      FpMatrix nil;
      try {
        nil = nilradical_by_enumeration(a, 1u << 18);
      } catch (const CapExceeded&) {
        continue;
      }
      CHECK(nil.rows() == rad.rows());
      FpMatrix both(nil.rows() + rad.rows(), static_cast<Eigen::Index>(a.dim()));
      both << nil, rad;
      CHECK(fp::rank(both, p) == rad.rows());
    }
  }
}

TEST_CASE("blocks") {
  Fixture s3("S3");
  CHECK(block_dims(blocks(s3.ring, s3.algebra(2))) == std::vector<std::size_t>{2, 2});
  auto b3 = blocks(s3.ring, s3.algebra(3));
  CHECK(block_dims(b3) == std::vector<std::size_t>{2, 1, 1});
  CHECK(b3[0].indices() == std::vector<std::size_t>{0, 2});
  Fixture c4("C4");
  CHECK(block_dims(blocks(c4.ring, c4.algebra(2))) == std::vector<std::size_t>{3});
}

TEST_CASE("block invariants") {
  Fixture c4("C4");
  auto inv = block_invariants(blocks(c4.ring, c4.algebra(2))[0]);
  CHECK(inv.m_mod_m2_dim == 2);
  CHECK(inv.socle_dim == 2);
  CHECK_FALSE(inv.symmetric);
  CHECK_FALSE(inv.tor_bounded);
  Fixture s3("S3");
  auto bs = blocks(s3.ring, s3.algebra(2));
  auto two = block_invariants(bs[0]);
  CHECK(two.m_mod_m2_dim == 1);
  CHECK(two.symmetric);
  CHECK(two.tor_bounded);
  auto one = block_invariants(blocks(s3.ring, s3.algebra(3))[1]);
  CHECK(one.dim == 1);
  CHECK(one.m_mod_m2_dim == 0);
  CHECK(one.symmetric);
  CHECK(one.tor_bounded);
}

TEST_CASE("block properties over the corpus") {
  for (const auto& name : oracle::small_corpus()) {
    Fixture f(name);
    for (int p : {2, 3, 5, 7}) {
      CAPTURE(name);
      CAPTURE(p);
      auto a = f.algebra(p);
      auto bs = blocks(f.ring, a);
      CHECK(bs.size() == a.classes().classes.size());
      std::size_t total = 0;
      bool some_nonsymmetric = false, some_unbounded = false, all_nice = true;
      for (std::size_t k = 0; k < bs.size(); ++k) {
        const auto& b = bs[k];
        CHECK(b.dim() == a.classes().classes[k].size());
        CHECK(a.multiply(b.idempotent(), b.idempotent()) == b.idempotent());
        total += b.dim();
        auto inv = block_invariants(b);
        if (f.g.order() % static_cast<std::size_t>(p) != 0) CHECK(b.dim() == 1);
        CHECK(inv.symmetric == (inv.socle_dim == 1));
        CHECK(inv.tor_bounded == (inv.m_mod_m2_dim <= 1));
        auto functional = symmetric_by_truncated_polynomial_functional(b);
        if (inv.m_mod_m2_dim <= 1) {
          REQUIRE(functional.has_value());
          CHECK(*functional == inv.symmetric);
        } else {
          CHECK_FALSE(functional.has_value());
        }
        some_nonsymmetric |= inv.socle_dim >= 2;
        some_unbounded |= inv.m_mod_m2_dim >= 2;
        all_nice &= inv.symmetric && inv.tor_bounded;
      }
      CHECK(total == a.dim());
      const auto order = f.g.order();
      if (order % static_cast<std::size_t>(p * p) == 0) {
        CHECK(some_nonsymmetric);
        CHECK(some_unbounded);
      }
      if (square_free(order)) CHECK(all_nice);
    }
  }
}

TEST_CASE("local structure is commutative with a nilpotent maximal ideal") {
  Fixture f("D4");
  for (const auto& b : blocks(f.ring, f.algebra(2))) {
    const auto d = static_cast<Eigen::Index>(b.dim());
    for (Eigen::Index x = 0; x < d; ++x)
      for (Eigen::Index y = 0; y < d; ++y)
        CHECK(b.structure(static_cast<std::size_t>(x)).row(y) ==
              b.structure(static_cast<std::size_t>(y)).row(x));
    CHECK(maximal_ideal_power(b, static_cast<int>(b.dim())).rows() == 0);
    // u_0 is the identity of the block
    for (Eigen::Index y = 0; y < d; ++y) {
      FpVector e = FpVector::Zero(d);
      e(y) = 1;
      CHECK(b.structure(0).row(y).transpose() == e);
    }
  }
}

TEST_CASE("blocks JSON") {
  Fixture s3("S3");
  auto a = s3.algebra(2);
  auto j = blocks_to_json(s3.ring, a, blocks(s3.ring, a));
  CHECK(j["p"] == 2);
  CHECK(j["classes"].size() == 2);
  CHECK(j["blocks"][0]["class"] == nlohmann::json::array({"1", "2"}));
  CHECK(j["blocks"][0]["dim"] == 2);
  CHECK(j["blocks"][0]["symmetric"] == true);
}
