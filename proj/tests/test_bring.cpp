#include <doctest.h>

#include "burnside/bring.hpp"
#include "burnside/error.hpp"
#include "burnside/groups.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

struct Fixture {
  PermGroup g;
  SubgroupClassTable classes;
  MarksTable marks;
  BRing ring;
  explicit Fixture(const std::string& name)
      : g(named_group(name)),
        classes(subgroup_classes(g)),
        marks(table_of_marks(g, classes)),
        ring(from_marks(marks)) {}
};

BigMatrix big_rows(std::initializer_list<std::initializer_list<int>> r) {
  BigMatrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<std::vector<std::string>> labelled(const BRing& r, const PrimeEquivalence& pe) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : pe.classes) {
    out.emplace_back();
    for (auto i : c) out.back().push_back(r.labels()[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("B-rings from marks") {
  Fixture s3("S3");
  CHECK(s3.ring.size() == 4);
  Fixture c1("C1");
  CHECK(c1.ring.size() == 1);
  CHECK(c1.ring.basis()(0, 0) == 1);
  Fixture c4("C4");
  CHECK(c4.ring.size() == 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) {
        auto w = s3.ring.separating_element(i, j);
        CHECK(w(static_cast<Eigen::Index>(i)) != 0);
        CHECK(w(static_cast<Eigen::Index>(j)) == 0);
        CHECK(s3.ring.coordinates(w).has_value());
      }
}

TEST_CASE("corrupted marks fail separation") {
  auto g = named_group("C2");
  auto classes = subgroup_classes(g);
  IntMatrix bad(2, 2);
  bad << 2, 1, 1, 1;
  CHECK_THROWS_AS(from_marks(MarksTable("C2", 2, classes, bad)), SeparationFailure);
}

TEST_CASE("generic B-rings validate their basis") {
  BRing even({"a", "b"}, big_rows({{1, 1}, {0, 2}}));
  CHECK(congruence_d(even)(0, 1) == 2);
  CHECK_THROWS_AS(BRing({"a", "b"}, big_rows({{1, 1}, {2, 2}})), InvalidBRing);
  CHECK_THROWS_AS(BRing({"a", "b"}, big_rows({{2, 0}, {0, 1}})), InvalidBRing);
  CHECK_THROWS_AS(BRing({"a", "b", "c"}, big_rows({{1, 1, 1}, {0, 1, 2}, {0, 0, 3}})),
                  InvalidBRing);
  CHECK_THROWS_AS(BRing({"a"}, big_rows({{1, 1}})), InvalidBRing);
  CHECK_THROWS_AS(even.index_of("z"), InvalidLabel);
  CHECK(even.index_of("b") == 1);
}

TEST_CASE("congruence numbers") {
  Fixture s3("S3");
  auto d = congruence_d(s3.ring);
  CHECK(d(0, 1) == 2);
  CHECK(d(0, 2) == 3);
  CHECK(d(2, 3) == 2);
  CHECK(d(0, 3) == 1);
  CHECK_THROWS_AS(d(1, 1), std::invalid_argument);
  Fixture c4("C4");
  auto dc = congruence_d(c4.ring);
  CHECK(dc(0, 1) == 4);
  CHECK(dc(0, 2) == 2);
  CHECK(dc(1, 2) == 2);
}

TEST_CASE("d is the gcd over the whole ring, divides |G|, and matches Dress") {
  for (const auto& name : oracle::small_corpus()) {
    CAPTURE(name);
    Fixture f(name);
    auto d = congruence_d(f.ring);
    const auto n = static_cast<Eigen::Index>(f.ring.size());
    // products of pairs of basis vectors are elements of R too
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<std::int64_t> diffs;
        for (Eigen::Index s = 0; s < n; ++s)
          for (Eigen::Index t = s; t < n; ++t)
            diffs.push_back(f.marks(s, i) * f.marks(t, i) - f.marks(s, j) * f.marks(t, j));
        for (Eigen::Index s = 0; s < n; ++s) diffs.push_back(f.marks(s, i) - f.marks(s, j));
        const auto dij = to_int64(d(i, j));
        CHECK(oracle::gcd_all(diffs) == dij);
        CHECK(static_cast<std::int64_t>(f.g.order()) % dij == 0);
        for (int p : {2, 3, 5, 7}) {
          const auto& h = f.classes[i].representative;
          const auto& k = f.classes[j].representative;
          const bool conj = f.classes.class_of(o_p(f.g, h, p)) == f.classes.class_of(o_p(f.g, k, p));
          CHECK((dij % p == 0) == conj);
        }
      }
  }
}

TEST_CASE("prime classes") {
  Fixture s3("S3");
  auto d = congruence_d(s3.ring);
  using L = std::vector<std::vector<std::string>>;
  CHECK(labelled(s3.ring, p_classes(s3.ring, d, 2)) == L{{"1", "2"}, {"3", "6"}});
  CHECK(labelled(s3.ring, p_classes(s3.ring, d, 3)) == L{{"1", "3"}, {"2"}, {"6"}});
  CHECK(p_classes(s3.ring, d, 5).classes.size() == 4);
  CHECK_THROWS_AS(p_classes(s3.ring, d, 6), InvalidPrime);
  Fixture c4("C4");
  CHECK(p_classes(c4.ring, congruence_d(c4.ring), 2).classes.size() == 1);

  for (const auto& name : oracle::small_corpus()) {
    Fixture f(name);
    auto df = congruence_d(f.ring);
    for (int p : {2, 3, 5, 7}) {
      auto pe = p_classes(f.ring, df, p);
      if (f.g.order() % static_cast<std::size_t>(p) != 0) CHECK(pe.classes.size() == f.ring.size());
      for (std::size_t i = 0; i < f.ring.size(); ++i)
        for (std::size_t j = 0; j < f.ring.size(); ++j)
          if (i != j) CHECK(pe.related(i, j) == (df(i, j) % p == 0));
    }
  }
}

TEST_CASE("separators") {
  Fixture c1("C1");
  auto triv = separators(c1.ring);
  CHECK(triv.n == 1);
  CHECK(triv.ghost.size() == 1);
  CHECK(triv.ghost[0](0) == 1);

  for (const auto& name : oracle::small_corpus()) {
    CAPTURE(name);
    Fixture f(name);
    auto sep = separators(f.ring);
    const auto n = static_cast<Eigen::Index>(f.ring.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& s = sep.ghost[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < n; ++j) CHECK((s(j) != 0) == (i == j));
      CHECK(f.ring.element(sep.coords[static_cast<std::size_t>(i)]) == s);
      BigVector ne = BigVector::Zero(n);
      ne(i) = sep.n;
      // the triangular solve of the marks module is an independent check
      CHECK_NOTHROW(decompose(f.marks, ne));

      // least c > 0 with c e_i in R, by search
      const BigInt c = min_separator_value(f.ring, static_cast<std::size_t>(i));
      BigInt least = 0;
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(f.g.order()) * f.g.order(); ++k) {
        BigVector v = BigVector::Zero(n);
        v(i) = k;
        try {
          decompose(f.marks, v);
          least = k;
          break;
        } catch (const NonIntegralSolution&) {
        }
      }
      CHECK(c == least);
      CHECK(s(i) % c == 0);
    }
  }
}

TEST_CASE("d-matrix JSON") {
  Fixture s3("S3");
  auto d = congruence_d(s3.ring);
  auto j = dmatrix_to_json(s3.ring, d, {p_classes(s3.ring, d, 2)});
  CHECK(j["d"]["1"]["3"] == 3);
  CHECK(j["partitions"][0]["p"] == 2);
  CHECK(j["partitions"][0]["classes"][1][0] == "3");
}
