#include "pact/category.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pact/errors.hpp"
#include "pact/rng.hpp"

namespace pact {

namespace {

void require_wiring(const GMap& f) {
  if (!same_topology(f.map.source, f.source.space) ||
      !same_topology(f.map.target, f.target.space)) {
    fail(errc::validation, "morphism map does not connect the given actions");
  }
}

Json map_witness(const GMap& f, const std::string& condition, int g, int x) {
  Json w;
  w["condition"] = condition;
  if (g >= 0) w["g"] = f.source.group.label(g);
  if (x >= 0) w["x"] = f.source.space.label(x);
  return w;
}

}  // namespace

CheckReport is_gmap(const GMap& f) {
  require_wiring(f);
  const auto& gr = f.source.group;
  const bool src_ok = verify_pa(f.source).valid();
  const bool tgt_ok = verify_pa(f.target).valid();
  const bool same = same_group(gr, f.target.group);
  std::vector<std::pair<std::string, bool>> hyps = {
      {"source action valid", src_ok},
      {"target action valid", tgt_ok},
      {"same group", same},
  };
  if (!same) {
    return make_report("gmap", hyps, false,
                       map_witness(f, "group mismatch", -1, -1));
  }

  const int order = static_cast<int>(gr.order());
  bool ok = true;
  Json witness;
  if (!f.map.is_total()) {
    ok = false;
    witness = map_witness(f, "map not total", -1, -1);
  }
  if (ok && !is_continuous(f.map)) {
    ok = false;
    witness = map_witness(f, "map not continuous", -1, -1);
  }
  for (int g = 0; ok && g < order; ++g) {
    if (!f.map.image_of(f.source.carrier[g]).is_subset_of(f.target.carrier[g])) {
      ok = false;
      witness = map_witness(f, "carrier not preserved", g, -1);
    }
  }
  for (int g = 0; ok && g < order; ++g) {
    const int gin = gr.inv(g);
    for (int x : f.source.carrier[gin].members()) {
      const int fx = f.map(x);
      if (!f.target.carrier[gin].test(fx) ||
          f.map(f.source.theta[g][x]) != f.target.theta[g][fx]) {
        ok = false;
        witness = map_witness(f, "does not commute with the action", g, x);
        break;
      }
    }
  }
  return make_report("gmap", hyps, ok, witness);
}

CheckReport is_equivalence(const GMap& f) {
  CheckReport morphism = is_gmap(f);
  bool ok = morphism.conclusion;
  Json witness = morphism.witness;
  if (ok && !is_homeomorphism(f.map)) {
    ok = false;
    witness = map_witness(f, "map not a homeomorphism", -1, -1);
  }
  const int order = static_cast<int>(f.source.group.order());
  for (int g = 0; ok && g < order; ++g) {
    if (f.map.image_of(f.source.carrier[g]) != f.target.carrier[g]) {
      ok = false;
      witness = map_witness(f, "carrier image not onto", g, -1);
    }
  }
  return make_report("gmap-equivalence", morphism.hypotheses, ok, witness);
}

GMap functor_on_map(const GMap& f, HyperKind kind, const HyperCaps& caps) {
  if (is_gmap(f).status() != CheckStatus::verified) {
    fail(errc::validation, "hyperspace functor needs a verified morphism");
  }
  Hyperspace hx = build_hyperspace(f.source.space, kind, caps);
  Hyperspace hy = build_hyperspace(f.target.space, kind, caps);
  PartialAction lift_src = lift_pa(hx, f.source);
  PartialAction lift_tgt = lift_pa(hy, f.target);
  std::vector<int> fwd(hx.member.size());
  for (std::size_t a = 0; a < hx.member.size(); ++a) {
    const int idx = hy.index_of(f.map.image_of(hx.member[a]));
    if (idx < 0) {
      fail(errc::internal, "image of a hyperspace point left the hyperspace");
    }
    fwd[a] = idx;
  }
  GMap lifted{std::move(lift_src), std::move(lift_tgt),
              PointMap::total(hx.space, hy.space, fwd)};
  if (is_gmap(lifted).status() != CheckStatus::verified) {
    fail(errc::internal, "lifted morphism failed verification");
  }
  return lifted;
}

GMap eta(const PartialAction& pa, const HyperCaps& caps) {
  Hyperspace h = build_hyperspace(pa.space, HyperKind::h1, caps);
  PartialAction lifted = lift_pa(h, pa);
  GMap unit{pa, std::move(lifted), singleton_map(h)};
  if (is_gmap(unit).status() != CheckStatus::verified) {
    fail(errc::internal, "singleton map failed morphism verification");
  }
  return unit;
}

GMap mu(const PartialAction& pa, const HyperCaps& caps) {
  Hyperspace h = build_hyperspace(pa.space, HyperKind::h1, caps);
  Hyperspace hh = build_hyperspace(h.space, HyperKind::h1, caps);
  PartialAction lift1 = lift_pa(h, pa);
  PartialAction lift2 = lift_pa(hh, lift1);
  GMap join{std::move(lift2), std::move(lift1), union_map(h, hh)};
  if (is_gmap(join).status() != CheckStatus::verified) {
    fail(errc::internal, "union map failed morphism verification");
  }
  return join;
}

CheckReport check_eta_naturality(const GMap& f, const HyperCaps& caps) {
  require_wiring(f);
  const bool morphism = is_gmap(f).status() == CheckStatus::verified;
  Hyperspace hx = build_hyperspace(f.source.space, HyperKind::h1, caps);
  Hyperspace hy = build_hyperspace(f.target.space, HyperKind::h1, caps);
  bool ok = true;
  Json witness;
  for (int x = 0; x < static_cast<int>(f.source.space.size()); ++x) {
    const int sx = hx.index_of(PointSet::single(f.source.space.size(), x));
    const int lhs = hy.index_of(f.map.image_of(hx.member[sx]));
    const int rhs = hy.index_of(PointSet::single(f.target.space.size(), f.map(x)));
    if (lhs != rhs || lhs < 0) {
      ok = false;
      witness = map_witness(f, "singleton square does not commute", -1, x);
      break;
    }
  }
  return make_report("naturality-eta", {{"morphism", morphism}}, ok, witness);
}

CheckReport check_mu_naturality(const GMap& f, const HyperCaps& caps) {
  require_wiring(f);
  const bool morphism = is_gmap(f).status() == CheckStatus::verified;
  Hyperspace hx = build_hyperspace(f.source.space, HyperKind::h1, caps);
  Hyperspace hy = build_hyperspace(f.target.space, HyperKind::h1, caps);
  const int m = static_cast<int>(hx.member.size());
  if (m > 15) {
    fail(errc::size_limit, "union square needs at most 4 source points");
  }
  std::vector<int> fwd(hx.member.size());
  for (std::size_t a = 0; a < hx.member.size(); ++a) {
    fwd[a] = hy.index_of(f.map.image_of(hx.member[a]));
  }
  bool ok = true;
  Json witness;
  for (std::uint32_t dm = 1; dm < (1u << m); ++dm) {
    PointSet joined_then_mapped(f.target.space.size());
    PointSet joined(f.source.space.size());
    for (int b = 0; b < m; ++b) {
      if (!(dm & (1u << b))) continue;
      joined_then_mapped |= hy.member[fwd[b]];
      joined |= hx.member[b];
    }
    if (joined_then_mapped != f.map.image_of(joined)) {
      ok = false;
      witness["condition"] = "union square does not commute";
      witness["family"] = [&] {
        Json fam = Json::array();
        for (int b = 0; b < m; ++b) {
          if (dm & (1u << b)) fam.push_back(f.source.space.set_label(hx.member[b]));
        }
        return fam;
      }();
      break;
    }
  }
  return make_report("naturality-mu", {{"morphism", morphism}}, ok, witness);
}

namespace {

struct UnitCheck {
  bool pointwise = true;
  bool morphism = true;
};

// Left and right unit composites on the materialized single lift. The left
// composite sends A through the image of the singleton map and back through
// the union, the right one wraps A as a one-element family first. Both are
// compared with the identity and reverified as morphisms.
UnitCheck verify_unit_laws(const Hyperspace& h, const PartialAction& lift1,
                           Json& witness) {
  const int n = static_cast<int>(h.base.size());
  const int m = static_cast<int>(h.member.size());
  PointMap sing = singleton_map(h);
  std::vector<int> left(m), right(m);
  UnitCheck out;
  for (int a = 0; a < m; ++a) {
    PointSet family(h.space.size());
    for (int x : h.member[a].members()) family.set(sing(x));
    PointSet left_union(n);
    for (int b : family.members()) left_union |= h.member[b];
    left[a] = h.index_of(left_union);
    right[a] = h.index_of(h.member[a]);
    if (left[a] != a || right[a] != a) {
      out.pointwise = false;
      witness["condition"] = "unit composite is not the identity";
      witness["point"] = h.space.label(a);
      break;
    }
  }
  if (out.pointwise) {
    for (const auto& fwd : {left, right}) {
      GMap composite{lift1, lift1, PointMap::total(h.space, h.space, fwd)};
      if (is_gmap(composite).status() != CheckStatus::verified) {
        out.morphism = false;
        witness["condition"] = "unit composite is not a morphism";
        break;
      }
    }
  }
  return out;
}

CheckReport monad_exhaustive(const PartialAction& pa, const HyperCaps& caps,
                             std::vector<std::pair<std::string, bool>> hyps) {
  Hyperspace h = build_hyperspace(pa.space, HyperKind::h1, caps);
  Hyperspace hh = build_hyperspace(h.space, HyperKind::h1, caps);
  Hyperspace hhh = build_hyperspace(hh.space, HyperKind::h1, caps);
  PartialAction lift1 = lift_pa(h, pa);
  PartialAction lift2 = lift_pa(hh, lift1);
  PartialAction lift3 = lift_pa(hhh, lift2);
  PointMap join1 = union_map(h, hh);
  PointMap join2 = union_map(hh, hhh);

  Json witness;
  witness["mode"] = "exhaustive";
  witness["tower"] = {h.member.size(), hh.member.size(), hhh.member.size()};

  bool ok = true;
  UnitCheck units = verify_unit_laws(h, lift1, witness);
  ok = units.pointwise && units.morphism;

  std::vector<int> assoc_left(hhh.member.size()), assoc_right(hhh.member.size());
  for (std::size_t s = 0; ok && s < hhh.member.size(); ++s) {
    assoc_left[s] = join1(join2(static_cast<int>(s)));
    PointSet collapsed(hh.base.size());
    for (int b : hhh.member[s].members()) collapsed.set(join1(b));
    const int inner = hh.index_of(collapsed);
    assoc_right[s] = inner >= 0 ? join1(inner) : -1;
    if (assoc_left[s] != assoc_right[s] || assoc_right[s] < 0) {
      ok = false;
      witness["condition"] = "associativity square does not commute";
      witness["point"] = hhh.space.label(static_cast<int>(s));
    }
  }
  if (ok) {
    for (const auto& fwd : {assoc_left, assoc_right}) {
      GMap composite{lift3, lift1, PointMap::total(hhh.space, h.space, fwd)};
      if (is_gmap(composite).status() != CheckStatus::verified) {
        ok = false;
        witness["condition"] = "associativity composite is not a morphism";
        break;
      }
    }
  }
  return make_report("monad", std::move(hyps), ok, witness);
}

CheckReport monad_sampled(const PartialAction& pa, const MonadOptions& opts,
                          const HyperCaps& caps,
                          std::vector<std::pair<std::string, bool>> hyps) {
  Hyperspace h = build_hyperspace(pa.space, HyperKind::h1, caps);
  PartialAction lift1 = lift_pa(h, pa);
  const int n = static_cast<int>(pa.space.size());
  const int m = static_cast<int>(h.member.size());

  Json witness;
  witness["mode"] = "sampled";
  witness["seed"] = opts.seed;

  bool ok = true;
  UnitCheck units = verify_unit_laws(h, lift1, witness);
  ok = units.pointwise && units.morphism;

  std::vector<std::uint32_t> xmask(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int x : h.member[a].members()) xmask[a] |= 1u << x;
  }
  std::vector<int> hindex(std::size_t{1} << n, -1);
  for (int a = 0; a < m; ++a) hindex[xmask[a]] = a;

  // union_x[dm] is the base subset covered by the family of single-lift
  // points encoded by the bits of dm.
  std::vector<std::uint32_t> union_x(std::size_t{1} << m, 0);
  for (std::uint32_t dm = 1; dm < (1u << m); ++dm) {
    union_x[dm] = union_x[dm & (dm - 1)] |
                  xmask[std::countr_zero(dm)];
  }

  const int order = static_cast<int>(pa.group.order());
  std::vector<std::uint32_t> carrier_mask(order, 0);
  for (int g = 0; g < order; ++g) {
    for (int a = 0; a < m; ++a) {
      if (lift1.carrier[g].test(a)) carrier_mask[g] |= 1u << a;
    }
  }

  Rng rng(opts.seed);
  int assoc_checked = 0;
  int equivariance_checked = 0;
  for (int iter = 0; ok && iter < opts.samples; ++iter) {
    const int count = 1 + static_cast<int>(rng.below(6));
    std::vector<std::uint32_t> family(count);
    std::uint32_t flat = 0;
    for (auto& dm : family) {
      const int bits = 1 + static_cast<int>(rng.below(m));
      dm = 0;
      for (int b = 0; b < bits; ++b) dm |= 1u << rng.below(m);
      flat |= dm;
    }
    std::uint32_t collapsed = 0;
    for (std::uint32_t dm : family) {
      collapsed |= 1u << hindex[union_x[dm]];
    }
    if (union_x[collapsed] != union_x[flat]) {
      ok = false;
      witness["condition"] = "associativity sample does not commute";
      witness["sample"] = iter;
      break;
    }
    ++assoc_checked;

    const int g = static_cast<int>(rng.below(order));
    const int gin = pa.group.inv(g);
    bool applicable = true;
    for (std::uint32_t dm : family) {
      if (dm & ~carrier_mask[gin]) applicable = false;
    }
    if (!applicable) continue;
    std::uint32_t moved_flat = 0;
    for (std::uint32_t dm : family) {
      std::uint32_t moved = 0;
      for (std::uint32_t rest = dm; rest;) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        moved |= 1u << lift1.theta[g][b];
      }
      moved_flat |= moved;
    }
    const int lhs = hindex[union_x[moved_flat]];
    const int rhs = lift1.theta[g][hindex[union_x[flat]]];
    if (lhs != rhs) {
      ok = false;
      witness["condition"] = "sampled composite is not equivariant";
      witness["sample"] = iter;
      break;
    }
    ++equivariance_checked;
  }
  witness["assoc_samples"] = assoc_checked;
  witness["equivariance_samples"] = equivariance_checked;
  return make_report("monad", std::move(hyps), ok, witness);
}

}  // namespace

CheckReport check_monad_laws(const PartialAction& pa, const MonadOptions& opts,
                             const HyperCaps& caps) {
  PaVerification verification = verify_pa(pa);
  const bool valid = verification.valid();
  const bool topological = valid && is_topological(pa).conclusion;
  std::vector<std::pair<std::string, bool>> hyps = {
      {"action valid", valid},
      {"action topological", topological},
  };
  if (!topological) {
    Json w;
    w["reason"] = "lift unavailable";
    return make_report("monad", std::move(hyps), false, w);
  }
  const int n = static_cast<int>(pa.space.size());
  if (n > 4) {
    fail(errc::size_limit, "monad checks need at most 4 base points");
  }
  if (opts.exhaustive && n > 2) {
    fail(errc::size_limit, "materialized towers need at most 2 base points");
  }
  if (opts.exhaustive || n <= 2) {
    return monad_exhaustive(pa, caps, std::move(hyps));
  }
  return monad_sampled(pa, opts, caps, std::move(hyps));
}

}  // namespace pact
