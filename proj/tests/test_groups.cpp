#include <doctest.h>

#include <string>
#include <vector>

#include "pact/groups.hpp"

using namespace pact;

TEST_CASE("table construction verifies the group axioms") {
  CHECK_NOTHROW(FinGroup::from_table({"e"}, {{0}}));
  CHECK_NOTHROW(FinGroup::from_table({"0", "1"}, {{0, 1}, {1, 0}}));

  // rock-paper-scissors composition: idempotent, hence no identity
  CHECK_THROWS_AS(FinGroup::from_table({"r", "p", "s"},
                                       {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}}),
                  Error);

  // order-5 loop: Latin square with identity and two-sided inverses, so the
  // only axiom left to fail is associativity, and the witness must say so
  std::vector<std::vector<int>> loop5 = {{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  try {
    FinGroup::from_table({"e", "a", "b", "c", "d"}, loop5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == errc::not_associative);
    CHECK(std::string(e.what()).find("*") != std::string::npos);
  }

  // ragged and out-of-range tables are structural errors
  CHECK_THROWS_AS(FinGroup::from_table({"0", "1"}, {{0, 1}}), Error);
  CHECK_THROWS_AS(FinGroup::from_table({"0", "1"}, {{0, 1}, {1, 2}}), Error);
}

TEST_CASE("catalog groups have the advertised structure") {
  FinGroup z4 = FinGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.elements() == std::vector<std::string>{"0", "1", "2", "3"});
  CHECK(z4.mul(1, 3) == 0);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.identity() == 0);

  FinGroup k = FinGroup::klein4();
  for (int g = 0; g < 4; ++g) CHECK(k.inv(g) == g);
  CHECK(k.mul(k.index_of("a"), k.index_of("b")) == k.index_of("c"));

  FinGroup s3 = FinGroup::symmetric(3);
  CHECK(s3.order() == 6);
  bool commutes_everywhere = true;
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      if (s3.mul(g, h) != s3.mul(h, g)) commutes_everywhere = false;
    }
  }
  CHECK_FALSE(commutes_everywhere);

  CHECK(same_group(FinGroup::trivial(), FinGroup::cyclic(1)));
  CHECK_THROWS_AS(FinGroup::symmetric(5), Error);
  CHECK_THROWS_AS(FinGroup::cyclic(0), Error);
}

TEST_CASE("multiplication rows are bijections and inverses compose backwards") {
  for (const FinGroup& g : {FinGroup::cyclic(6), FinGroup::klein4(),
                            FinGroup::symmetric(4)}) {
    const int n = static_cast<int>(g.order());
    for (int a = 0; a < n; ++a) {
      std::vector<bool> seen(n, false);
      for (int b = 0; b < n; ++b) {
        CHECK_FALSE(seen[g.mul(a, b)]);
        seen[g.mul(a, b)] = true;
      }
      CHECK(g.inv(g.inv(a)) == a);
      for (int b = 0; b < n; ++b) {
        CHECK(g.inv(g.mul(a, b)) == g.mul(g.inv(b), g.inv(a)));
      }
    }
  }
}

TEST_CASE("symmetric group words act as their one-line notation") {
  FinGroup s3 = FinGroup::symmetric(3);
  const int t = s3.index_of("213");
  REQUIRE(t >= 0);
  CHECK(s3.mul(t, t) == s3.identity());
  const int c = s3.index_of("231");
  REQUIRE(c >= 0);
  CHECK(s3.mul(s3.mul(c, c), c) == s3.identity());
}

TEST_CASE("subgroup enumeration finds the full lattice of small groups") {
  auto subs = subgroups(FinGroup::cyclic(6));
  CHECK(subs.size() == 4);  // orders 1, 2, 3, 6

  auto klein_subs = subgroups(FinGroup::klein4());
  CHECK(klein_subs.size() == 5);  // trivial, three doubles, everything

  for (const auto& s : klein_subs) {
    CHECK(s.front() == 0);  // every subgroup contains the identity
  }
}

TEST_CASE("groups expose a discrete carrier space") {
  FinGroup z3 = FinGroup::cyclic(3);
  FinSpace d = z3.discrete_space();
  CHECK(d.size() == 3);
  for (int p = 0; p < 3; ++p) {
    CHECK(d.nbhd(p) == PointSet::single(3, p));
  }
}
