#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "pact/topology.hpp"
#include "support/oracles.hpp"
#include "support/spaces.hpp"

using namespace pact;
using fixtures::chain3;
using fixtures::discrete3;
using fixtures::khalimsky12;
using fixtures::sierpinski;

namespace {

std::set<std::uint64_t> opens_of(const FinSpace& x) {
  return oracle::opens_from_min_basis(x);
}

std::uint64_t as_mask(const PointSet& s) {
  std::uint64_t m = 0;
  for (int p : s.members()) m |= std::uint64_t(1) << p;
  return m;
}

}  // namespace

TEST_CASE("minimal basis axioms are enforced") {
  // a missing from its own neighborhood
  CHECK_THROWS_AS(FinSpace::from_min_basis({"a"}, {PointSet(1)}), Error);
  // b lies in U_c but U_b is not contained in U_c
  CHECK_THROWS_AS(
      FinSpace::from_min_basis({"a", "b", "c"},
                               {PointSet::of(3, {0}), PointSet::of(3, {0, 1}),
                                PointSet::of(3, {1, 2})}),
      Error);
  CHECK_THROWS_AS(FinSpace::from_min_basis({}, {}), Error);
  CHECK_NOTHROW(khalimsky12());
  // mutual membership with equal neighborhoods is indistinguishability, not
  // an axiom violation
  CHECK_NOTHROW(FinSpace::from_min_basis(
      {"a", "b"}, {PointSet::of(2, {0, 1}), PointSet::of(2, {0, 1})}));
}

TEST_CASE("subbasis generation recovers the classic two small spaces") {
  FinSpace s = FinSpace::from_subbasis({"0", "1"}, {PointSet::of(2, {1})});
  CHECK(s.nbhd(0) == PointSet::of(2, {0, 1}));
  CHECK(s.nbhd(1) == PointSet::of(2, {1}));

  FinSpace d = FinSpace::from_subbasis(
      {"a", "b", "c"},
      {PointSet::of(3, {0}), PointSet::of(3, {1}), PointSet::of(3, {2})});
  CHECK(same_topology(d, discrete3()));
}

TEST_CASE("open sets reconstructed from the basis match the generated family") {
  const std::vector<std::vector<std::uint64_t>> generator_families = {
      {0b10},
      {0b011, 0b110},
      {0b0011, 0b1100, 0b0110},
      {0b10101, 0b01111},
  };
  const std::vector<std::string> labels = {"p0", "p1", "p2", "p3", "p4",
                                           "p5", "p6", "p7"};
  for (const auto& gens : generator_families) {
    for (int n = 2; n <= 8; n += 3) {
      std::vector<PointSet> sets;
      std::vector<std::uint64_t> masks;
      for (std::uint64_t g : gens) {
        const std::uint64_t cut =
            g & ((n == 64 ? 0 : (std::uint64_t(1) << n)) - 1);
        sets.push_back(PointSet::from_mask(n, cut));
        masks.push_back(cut);
      }
      FinSpace x = FinSpace::from_subbasis(
          std::vector<std::string>(labels.begin(), labels.begin() + n), sets);
      CHECK(opens_of(x) == oracle::opens_from_generators(n, masks));
    }
  }
}

TEST_CASE("point-set primitives agree on the worked examples") {
  FinSpace s = sierpinski();
  CHECK_FALSE(is_open(s, PointSet::of(2, {0})));
  CHECK(closure(s, PointSet::of(2, {0})) == PointSet::of(2, {0}));
  CHECK(interior(s, PointSet::of(2, {0})) == PointSet(2));

  CHECK(is_open(s, PointSet(2)));
  CHECK(closure(s, PointSet(2)) == PointSet(2));

  FinSpace k = khalimsky12();
  const PointSet arc = PointSet::of(12, {9, 10, 11});
  CHECK(is_open(k, arc));
  CHECK(closure(k, arc) == PointSet::of(12, {8, 9, 10, 11, 0}));
}

TEST_CASE("closure and interior are monotone, idempotent and dual") {
  for (const FinSpace& x : {sierpinski(), chain3(), discrete3(),
                            FinSpace::indiscrete({"u", "v"})}) {
    const int n = static_cast<int>(x.size());
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
      const PointSet s = PointSet::from_mask(n, m);
      const PointSet cl = closure(x, s);
      const PointSet in = interior(x, s);
      CHECK(s.is_subset_of(cl));
      CHECK(in.is_subset_of(s));
      CHECK(closure(x, cl) == cl);
      CHECK(interior(x, in) == in);
      CHECK(cl == (x.full_set() - interior(x, x.full_set() - s)));
      CHECK((is_open(x, s) == (in == s)));
      CHECK((is_closed(x, s) == (cl == s)));
      for (std::uint64_t m2 = 0; m2 < (std::uint64_t(1) << n); ++m2) {
        const PointSet t = PointSet::from_mask(n, m2);
        if (s.is_subset_of(t)) {
          CHECK(closure(x, s).is_subset_of(closure(x, t)));
          CHECK(interior(x, s).is_subset_of(interior(x, t)));
        }
      }
    }
  }
}

TEST_CASE("connectivity matches the worked examples") {
  CHECK_FALSE(is_connected(discrete3(), PointSet::of(3, {0, 1})));
  CHECK(is_connected(sierpinski(), PointSet::of(2, {0, 1})));
  FinSpace k = khalimsky12();
  CHECK_FALSE(is_connected(k, PointSet::of(12, {1, 7})));
  CHECK(is_connected(k, PointSet::of(12, {1, 2, 3})));
  CHECK(is_connected(k, k.full_set()));
}

TEST_CASE("connectivity agrees with the bipartition oracle on small spaces") {
  for (const FinSpace& x :
       {sierpinski(), chain3(), discrete3(), FinSpace::indiscrete({"u", "v"}),
        product(sierpinski(), chain3())}) {
    const int n = static_cast<int>(x.size());
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      const PointSet s = PointSet::from_mask(n, m);
      CHECK(is_connected(x, s) == oracle::connected_by_bipartitions(x, s));
    }
  }
}

TEST_CASE("separation flags match the enumeration oracle") {
  for (const FinSpace& x :
       {sierpinski(), chain3(), discrete3(), khalimsky12(),
        FinSpace::indiscrete({"u", "v"}), product(sierpinski(), sierpinski())}) {
    const SeparationFlags got = separation(x);
    const auto want = oracle::separation_by_enumeration(x);
    CHECK(got.t0 == want.t0);
    CHECK(got.t1 == want.t1);
    CHECK(got.hausdorff == want.hausdorff);
    CHECK(got.regular == want.regular);
    if (got.hausdorff) CHECK(got.t1);
    if (got.t1) CHECK(got.t0);
  }

  const SeparationFlags d = separation(discrete3());
  CHECK((d.t0 && d.t1 && d.hausdorff && d.regular));
  const SeparationFlags s = separation(sierpinski());
  CHECK(s.t0);
  CHECK_FALSE(s.t1);
  CHECK_FALSE(s.hausdorff);
  CHECK_FALSE(s.regular);
  const SeparationFlags i = separation(FinSpace::indiscrete({"u", "v"}));
  CHECK_FALSE(i.t0);
  CHECK(i.regular);
}

TEST_CASE("product, subspace and quotient match the worked examples") {
  FinSpace p = product(sierpinski(), sierpinski());
  REQUIRE(p.size() == 4);
  const int idx11 = p.index_of("(1,1)");
  REQUIRE(idx11 >= 0);
  CHECK(p.nbhd(idx11) == PointSet::single(4, idx11));
  const int idx00 = p.index_of("(0,0)");
  CHECK(p.nbhd(idx00) == p.full_set());

  FinSpace arc = subspace(khalimsky12(), PointSet::of(12, {9, 10, 11}));
  REQUIRE(arc.size() == 3);
  CHECK(arc.nbhd(arc.index_of("10")) == arc.full_set());
  CHECK(arc.nbhd(arc.index_of("9")) == PointSet::single(3, arc.index_of("9")));
  CHECK(arc.nbhd(arc.index_of("11")) ==
        PointSet::single(3, arc.index_of("11")));

  FinSpace q = quotient(discrete3(), {0, 0, 1});
  REQUIRE(q.size() == 2);
  CHECK(same_topology(q, FinSpace::discrete({"a", "c"})));
}

TEST_CASE("quotient by singletons and product with a point change nothing") {
  for (const FinSpace& x : {sierpinski(), chain3(), khalimsky12()}) {
    std::vector<int> singletons(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) singletons[p] = static_cast<int>(p);
    CHECK(same_topology(quotient(x, singletons), x));

    FinSpace one = FinSpace::discrete({"*"});
    FinSpace px = product(one, x);
    REQUIRE(px.size() == x.size());
    for (std::size_t p = 0; p < x.size(); ++p) {
      CHECK(as_mask(px.nbhd(static_cast<int>(p))) == as_mask(x.nbhd(static_cast<int>(p))));
    }
  }
}

TEST_CASE("quotient opens are exactly the sets with open preimage") {
  FinSpace x = khalimsky12();
  const std::vector<int> class_of = {0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5};
  FinSpace q = quotient(x, class_of);
  REQUIRE(q.size() == 6);
  for (std::uint64_t m = 0; m < 64; ++m) {
    PointSet v = PointSet::from_mask(6, m);
    PointSet pre(12);
    for (int p = 0; p < 12; ++p) {
      if (v.test(class_of[p])) pre.set(p);
    }
    CHECK(is_open(q, v) == is_open(x, pre));
  }
}

TEST_CASE("map predicates match the worked examples") {
  FinSpace s = sierpinski();
  PointMap ident = PointMap::total(s, s, {0, 1});
  CHECK(is_continuous(ident));
  CHECK(is_open_map(ident));
  CHECK(is_homeomorphism(ident));
  CHECK(is_embedding(ident));

  PointMap to_discrete =
      PointMap::total(s, FinSpace::discrete({"0", "1"}), {0, 1});
  CHECK_FALSE(is_continuous(to_discrete));

  FinSpace k = khalimsky12();
  std::vector<int> rot(12);
  for (int p = 0; p < 12; ++p) rot[p] = (p + 6) % 12;
  PointMap half_turn = PointMap::total(k, k, rot);
  CHECK(is_homeomorphism(half_turn));

  std::vector<int> shift(12);
  for (int p = 0; p < 12; ++p) shift[p] = (p + 1) % 12;
  CHECK_FALSE(is_continuous(PointMap::total(k, k, shift)));
}

TEST_CASE("composition applies the right-hand map first") {
  FinSpace s = sierpinski();
  FinSpace d = FinSpace::discrete({"x", "y"});
  PointMap f = PointMap::partial(s, d, {1, -1}, PointSet::of(2, {0}));
  PointMap g = PointMap::total(d, d, {1, 0});
  PointMap gf = compose(g, f);
  CHECK(gf.domain == PointSet::of(2, {0}));
  CHECK(gf(0) == 0);
}
