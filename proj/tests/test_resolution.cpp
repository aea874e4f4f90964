#include <doctest.h>

#include "burnside/error.hpp"
#include "burnside/groups.hpp"
#include "burnside/resolution.hpp"
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
  std::vector<LocalBlock> blocks_at(int p) const { return blocks(ring, algebra(p)); }
};

using Seq = std::vector<std::int64_t>;

Seq powers(std::int64_t base, int n) {
  Seq out{1};
  for (int l = 1; l <= n; ++l) out.push_back(out.back() * base);
  return out;
}

Seq as_seq(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Betti numbers of small blocks") {
  Fixture s3("S3");
  for (const auto& b : s3.blocks_at(2)) {
    auto res = minimal_resolution(b, 12);
    validate_resolution(res);
    CHECK(as_seq(res.betti()) == Seq(13, 1));
  }
  Fixture c4("C4");
  auto c4b = c4.blocks_at(2)[0];
  auto res = minimal_resolution(c4b, 6);
  validate_resolution(res);
  CHECK(as_seq(res.betti()) == powers(2, 6));
  CHECK(betti_sequence(c4b, 12).values == powers(2, 12));
  CHECK(betti_sequence(c4b, 12, BettiMethod::QuadraticDual).values == powers(2, 12));

  auto one = s3.blocks_at(3)[1];
  REQUIRE(one.dim() == 1);
  CHECK(as_seq(minimal_resolution(one, 4).betti()) == Seq{1, 0, 0, 0, 0});
  CHECK(betti_sequence(one, 4, BettiMethod::QuadraticDual).values == Seq{1, 0, 0, 0, 0});
}

TEST_CASE("blocks with M^2 = 0 have Betti numbers e^l") {
  for (const auto& name : {"C4", "C8", "C9", "S3", "D5"}) {
    Fixture f(name);
    for (int p : {2, 3, 5}) {
      for (const auto& b : f.blocks_at(p)) {
        if (maximal_ideal_power(b, 2).rows() != 0) continue;
        CAPTURE(name);
        CAPTURE(p);
        const auto e = static_cast<std::int64_t>(b.dim()) - 1;
        auto res = minimal_resolution(b, 5);
        CHECK(as_seq(res.betti()) == powers(e, 5));
        CHECK(betti_via_quadratic_dual(b, 10) == powers(e, 10));
      }
    }
  }
}

TEST_CASE("direct resolutions agree with the quadratic-dual series") {
  ResolutionBudget budget;
  budget.max_work = 2e9;
  for (const auto& name : oracle::small_corpus()) {
    Fixture f(name);
    for (int p : {2, 3}) {
      for (const auto& b : f.blocks_at(p)) {
        CAPTURE(name);
        CAPTURE(p);
        auto res = minimal_resolution(b, 6, budget, /*allow_partial=*/true);
        REQUIRE(res.length() >= 3);
        validate_resolution(res);
        if (maximal_ideal_power(b, 3).rows() != 0) continue;
        auto fast = betti_via_quadratic_dual(b, res.length());
        CHECK(fast == as_seq(res.betti()));
      }
    }
  }
}

TEST_CASE("Gulliksen: bounded blocks have eventually constant Betti numbers") {
  for (const auto& name : oracle::small_corpus()) {
    Fixture f(name);
    for (int p : {2, 3, 5}) {
      for (const auto& b : f.blocks_at(p)) {
        CAPTURE(name);
        CAPTURE(p);
        const auto inv = block_invariants(b);
        const auto betti = betti_sequence(b, 8).values;
        if (inv.tor_bounded) {
          for (std::size_t l = 2; l < betti.size(); ++l) CHECK(betti[l] == betti[1]);
          CHECK(betti[1] <= 1);
        } else {
          for (std::size_t l = 2; l < betti.size(); ++l) CHECK(betti[l] > betti[l - 1]);
        }
      }
    }
  }
}

TEST_CASE("resolution budget") {
  Fixture f("D4");
  auto b = f.blocks_at(2)[0];
  ResolutionBudget tiny;
  tiny.max_work = 1e4;
  CHECK_THROWS_AS(minimal_resolution(b, 8, tiny), ResolutionTooLarge);
  auto partial = minimal_resolution(b, 8, tiny, /*allow_partial=*/true);
  CHECK(partial.length() < 8);
  // Auto continues past the budget with the series and agrees on the overlap
  auto auto_mode = betti_sequence(b, 11, BettiMethod::Auto, tiny);
  CHECK(auto_mode.quadratic_dual);
  CHECK(auto_mode.direct_degree == partial.length());
  CHECK(auto_mode.values.size() == 12);
  CHECK_THROWS_AS(betti_sequence(b, 8, BettiMethod::Direct, tiny), ResolutionTooLarge);
}

TEST_CASE("Ext and Tor dimensions between simples") {
  Fixture s3("S3");
  auto a = s3.algebra(2);
  auto bs = blocks(s3.ring, a);
  CHECK(ext_dims_pair(a, bs, 0, 2, 6) == Seq(7, 0));
  CHECK(ext_dims_pair(a, bs, 0, 1, 6) == Seq(7, 1));
  CHECK(tor_dims_pair(a, bs, 0, 0, 6) == Seq(7, 1));
  CHECK(tor_dims_pair(a, bs, 0, 3, 6) == Seq(7, 0));
  for (std::size_t i = 0; i < 4; ++i) CHECK(ext_dims_pair(a, bs, i, i, 0) == Seq{1});

  Fixture c4("C4");
  auto ac = c4.algebra(2);
  auto bc = blocks(c4.ring, ac);
  CHECK(tor_dims_pair(ac, bc, 0, 0, 6) == powers(2, 6));
  CHECK(ext_dims_pair(ac, bc, 0, 0, 6) == powers(2, 6));
}
