#include <doctest.h>

#include <string>
#include <vector>

#include "pact/envelope.hpp"
#include "support/spaces.hpp"

using namespace pact;
using fixtures::kh12_action;
using fixtures::swap_action;

namespace {

PartialAction trivial_on_chain() {
  PartialAction pa;
  pa.group = FinGroup::trivial();
  pa.space = fixtures::chain3();
  pa.carrier = {pa.space.full_set()};
  pa.theta = {{0, 1, 2}};
  return pa;
}

int class_of_label(const EnvelopingSpace& env, const std::string& label) {
  return env.space.index_of(label);
}

}  // namespace

TEST_CASE("the pair relation evaluates pointwise as defined") {
  PartialAction pa = swap_action();
  RelationResult rel = build_relation(pa);
  CHECK(rel.equivalence.status() == CheckStatus::verified);

  const int a = 0, b = 1, c = 2;
  CHECK(rel.rel.related(0, a, 1, b));
  CHECK(rel.rel.related(1, b, 0, a));
  CHECK_FALSE(rel.rel.related(0, c, 1, c));
  CHECK(rel.rel.related(0, c, 0, c));
  CHECK_FALSE(rel.rel.related(0, a, 1, a));
}

TEST_CASE("the trivial group relation is equality of points") {
  RelationResult rel = build_relation(trivial_on_chain());
  CHECK(rel.equivalence.status() == CheckStatus::verified);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(rel.rel.related(0, x, 0, y) == (x == y));
    }
  }
}

TEST_CASE("the relation stays an equivalence over many random instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    PartialAction pa = random_pa(seed, {6, 6});
    CAPTURE(seed);
    REQUIRE(build_relation(pa).equivalence.status() == CheckStatus::verified);
  }
}

TEST_CASE("the swap action globalizes to four classes with a double swap") {
  EnvelopingSpace env = globalize(swap_action());
  REQUIRE(env.space.size() == 4);

  const int c_a = class_of_label(env, "[0,a]");
  const int c_b = class_of_label(env, "[0,b]");
  const int c_c = class_of_label(env, "[0,c]");
  const int c_gc = class_of_label(env, "[1,c]");
  REQUIRE(c_a >= 0);
  REQUIRE(c_b >= 0);
  REQUIRE(c_c >= 0);
  REQUIRE(c_gc >= 0);

  CHECK(env.action.apply(1, c_a) == c_b);
  CHECK(env.action.apply(1, c_b) == c_a);
  CHECK(env.action.apply(1, c_c) == c_gc);
  CHECK(env.action.apply(1, c_gc) == c_c);

  // (1,a) and (g,b) fall in one class; iota takes points to identity pairs
  CHECK(env.class_index(0, 0) == env.class_index(1, 1));
  CHECK(env.iota(0) == c_a);
  CHECK(env.iota(2) == c_c);

  for (const CheckReport& r : env.reports) {
    CAPTURE(r.check_id);
    CHECK(r.status() == CheckStatus::verified);
  }

  SeparationFlags flags = separation(env.space);
  CHECK(flags.hausdorff);
}

TEST_CASE("globalizing a trivial-group action reproduces the space") {
  EnvelopingSpace env = globalize(trivial_on_chain());
  REQUIRE(env.space.size() == 3);
  CHECK(is_embedding(env.iota));
  CHECK(env.iota.image() == env.space.full_set());
  for (std::size_t p = 0; p < 3; ++p) {
    const int c = env.iota(static_cast<int>(p));
    CHECK(env.space.nbhd(c).count() ==
          trivial_on_chain().space.nbhd(static_cast<int>(p)).count());
  }
}

TEST_CASE("globalizing the circle action keeps every claimed property") {
  EnvelopingSpace env = globalize(kh12_action());
  CHECK(env.space.size() == 32);  // 48 pairs glued by 16 crossings
  for (const CheckReport& r : env.reports) {
    CAPTURE(r.check_id);
    CHECK(r.status() == CheckStatus::verified);
  }
}

TEST_CASE("envelope reports flag actions that are not topological") {
  PartialAction pa;
  pa.group = FinGroup::cyclic(2);
  pa.space = fixtures::sierpinski();
  pa.carrier = {pa.space.full_set(), PointSet::of(2, {0})};
  pa.theta = {{0, 1}, {0, -1}};
  REQUIRE(verify_pa(pa).valid());

  EnvelopingSpace env = globalize(pa);
  bool saw_flagged = false;
  for (const CheckReport& r : env.reports) {
    CHECK(r.status() != CheckStatus::counterexample);
    if (r.status() == CheckStatus::hypothesis_failed) saw_flagged = true;
  }
  CHECK(saw_flagged);
}

TEST_CASE("iota embeds exactly when the action is continuous") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    PartialAction pa = random_pa(seed, {4, 6});
    EnvelopingSpace env = globalize(pa);
    const bool continuous =
        is_continuous_pa(pa).status() == CheckStatus::verified;
    CAPTURE(seed);
    CHECK(is_embedding(env.iota) == continuous);
  }
}

TEST_CASE("the enveloping action restricted to the image recovers the action") {
  for (const PartialAction& pa : {swap_action(), kh12_action()}) {
    EnvelopingSpace env = globalize(pa);
    auto back = restriction_morphism(env);
    REQUIRE(back.has_value());
    CHECK(is_equivalence(*back).status() == CheckStatus::verified);
  }
}

TEST_CASE("relation closedness matches envelope separation") {
  CheckReport swap_report = check_relation_closed(swap_action());
  CHECK(swap_report.status() == CheckStatus::verified);
  CHECK(swap_report.witness["relation_closed"] == Json(true));

  CheckReport kh_report = check_relation_closed(kh12_action());
  CHECK(kh_report.status() == CheckStatus::hypothesis_failed);
  CHECK(kh_report.witness["relation_closed"] == Json(false));
  CHECK(kh_report.witness["envelope_hausdorff"] == Json(false));

  // diagonal of a discrete space is closed
  PartialAction tr;
  tr.group = FinGroup::trivial();
  tr.space = fixtures::discrete3();
  tr.carrier = {tr.space.full_set()};
  tr.theta = {{0, 1, 2}};
  CHECK(check_relation_closed(tr).status() == CheckStatus::verified);
  CHECK(relation_closed(tr));

  // diagonal of a non-T1 space is not closed
  CHECK_FALSE(relation_closed(trivial_on_chain()));
}

TEST_CASE("closedness of the relation transfers to the lift") {
  CheckReport swap_l2 = check_l2(swap_action(), HyperKind::h1, {});
  CHECK(swap_l2.status() == CheckStatus::verified);

  CheckReport kh_l2 = check_l2(kh12_action(), HyperKind::h2, {});
  CHECK(kh_l2.status() == CheckStatus::hypothesis_failed);

  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    PartialAction pa = random_pa(seed, {4, 5});
    CAPTURE(seed);
    REQUIRE(check_l2(pa, HyperKind::h1, {}).status() !=
            CheckStatus::counterexample);
  }
}

TEST_CASE("the class map into the lifted envelope is an embedding") {
  ThetaEmbedding swap_theta = theta_embedding(swap_action(), HyperKind::h1, {});
  CHECK(swap_theta.report.status() == CheckStatus::verified);
  REQUIRE(swap_theta.map.has_value());
  CHECK(swap_theta.map->source.size() == 4);
  CHECK(is_embedding(*swap_theta.map));

  ThetaEmbedding tr = theta_embedding(trivial_on_chain(), HyperKind::h1, {});
  CHECK(tr.report.status() == CheckStatus::verified);

  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    PartialAction pa = random_pa(seed, {4, 4});
    CAPTURE(seed);
    REQUIRE(theta_embedding(pa, HyperKind::h1, {}).report.status() !=
            CheckStatus::counterexample);
  }
}

TEST_CASE("hyperspace envelopes separate exactly when base envelopes do") {
  CheckReport swap_h = check_equivh(swap_action(), HyperKind::h1, {});
  CHECK(swap_h.status() == CheckStatus::verified);
  CHECK(swap_h.conclusion);

  CheckReport kh_h = check_equivh(kh12_action(), HyperKind::h2, {});
  CHECK(kh_h.status() == CheckStatus::hypothesis_failed);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PartialAction pa = random_pa(seed, {4, 5});
    CAPTURE(seed);
    REQUIRE(check_equivh(pa, HyperKind::h1, {}).status() !=
            CheckStatus::counterexample);
  }
}

TEST_CASE("t1 envelopes carry over to the finite-subsets lift and back") {
  std::vector<CheckReport> swap_fin = check_fin(swap_action(), {});
  REQUIRE(swap_fin.size() == 2);
  CHECK(swap_fin[0].status() == CheckStatus::verified);
  CHECK(swap_fin[1].status() == CheckStatus::verified);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PartialAction pa = random_pa(seed, {4, 5});
    CAPTURE(seed);
    for (const CheckReport& r : check_fin(pa, {})) {
      REQUIRE(r.status() != CheckStatus::counterexample);
    }
  }
}

TEST_CASE("regularity descends to both envelopes under a closed domain") {
  CheckReport swap_r = check_regu(swap_action(), HyperKind::h1, {});
  CHECK(swap_r.status() == CheckStatus::verified);

  CheckReport kh_r = check_regu(kh12_action(), HyperKind::h2, {});
  CHECK(kh_r.status() == CheckStatus::hypothesis_failed);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PartialAction pa = random_pa(seed, {4, 5});
    CAPTURE(seed);
    REQUIRE(check_regu(pa, HyperKind::h1, {}).status() !=
            CheckStatus::counterexample);
  }
}
