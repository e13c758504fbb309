#include "pact/actions.hpp"

#include <algorithm>

#include "pact/rng.hpp"

namespace pact {

PointSet PartialAction::star_pairs() const {
  const int nx = static_cast<int>(space.size());
  PointSet s(group.order() * space.size());
  for (std::size_t g = 0; g < group.order(); ++g)
    carrier[group.inv(static_cast<int>(g))].for_each(
        [&](int x) { s.set(static_cast<int>(g) * nx + x); });
  return s;
}

FinSpace pair_space(const FinGroup& g, const FinSpace& x) {
  return product(g.discrete_space(), x);
}

namespace {

Json point_witness(const PartialAction& pa, const char* what, int g, int x,
                   int h = -1) {
  Json w;
  w["reason"] = what;
  w["g"] = pa.group.label(g);
  if (h >= 0) w["h"] = pa.group.label(h);
  if (x >= 0) w["x"] = pa.space.label(x);
  return w;
}

bool check_structure(const PartialAction& pa, Json& witness) {
  const std::size_t ng = pa.group.order();
  const std::size_t nx = pa.space.size();
  if (pa.carrier.size() != ng || pa.theta.size() != ng) {
    witness = Json{{"reason", "carrier or map family size differs from group"}};
    return false;
  }
  for (std::size_t g = 0; g < ng; ++g) {
    if (pa.carrier[g].universe() != nx || pa.theta[g].size() != nx) {
      witness = Json{{"reason", "carrier or map indexes a different universe"},
                     {"g", pa.group.label(static_cast<int>(g))}};
      return false;
    }
  }
  for (std::size_t g = 0; g < ng; ++g) {
    const PointSet& dom = pa.carrier[pa.group.inv(static_cast<int>(g))];
    const PointSet& cod = pa.carrier[g];
    PointSet hit(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      const int y = pa.theta[g][x];
      if (!dom.test(x)) {
        if (y != -1) {
          witness = point_witness(pa, "map defined outside its carrier",
                                  static_cast<int>(g), static_cast<int>(x));
          return false;
        }
        continue;
      }
      if (y < 0 || y >= static_cast<int>(nx)) {
        witness = point_witness(pa, "map undefined on its carrier",
                                static_cast<int>(g), static_cast<int>(x));
        return false;
      }
      if (!cod.test(y)) {
        witness = point_witness(pa, "image point outside the target carrier",
                                static_cast<int>(g), static_cast<int>(x));
        return false;
      }
      if (hit.test(y)) {
        witness = point_witness(pa, "map is not injective", static_cast<int>(g),
                                static_cast<int>(x));
        return false;
      }
      hit.set(y);
    }
    if (hit.count() != cod.count()) {
      witness = Json{{"reason", "map is not onto its target carrier"},
                     {"g", pa.group.label(static_cast<int>(g))}};
      return false;
    }
  }
  return true;
}

// Route one: the axioms of the partially defined map g.x.
bool check_axioms(const PartialAction& pa, Json& witness) {
  const int ng = static_cast<int>(pa.group.order());
  const int nx = static_cast<int>(pa.space.size());
  const int e = pa.group.identity();

  for (int x = 0; x < nx; ++x)
    if (!pa.defined(e, x) || pa.apply(e, x) != x) {
      witness = point_witness(pa, "identity does not fix the point", e, x);
      return false;
    }

  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nx; ++x) {
      if (!pa.defined(g, x)) continue;
      const int y = pa.apply(g, x);
      const int gi = pa.group.inv(g);
      if (!pa.defined(gi, y) || pa.apply(gi, y) != x) {
        witness = point_witness(pa, "inverse does not undo the action", g, x);
        return false;
      }
    }

  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int x = 0; x < nx; ++x) {
        if (!pa.defined(h, x)) continue;
        const int y = pa.apply(h, x);
        if (!pa.defined(g, y)) continue;
        const int gh = pa.group.mul(g, h);
        if (!pa.defined(gh, x) || pa.apply(gh, x) != pa.apply(g, y)) {
          witness = point_witness(pa, "composite extension fails", g, x, h);
          return false;
        }
      }
  return true;
}

// Route two: conditions on the bijection family.
bool check_family(const PartialAction& pa, Json& witness) {
  const int ng = static_cast<int>(pa.group.order());
  const int nx = static_cast<int>(pa.space.size());
  const int e = pa.group.identity();

  if (pa.carrier[e] != PointSet::full_set(nx)) {
    witness = Json{{"reason", "identity carrier is not the whole space"}};
    return false;
  }
  for (int x = 0; x < nx; ++x)
    if (pa.apply(e, x) != x) {
      witness = point_witness(pa, "identity map is not the identity", e, x);
      return false;
    }

  for (int g = 0; g < ng; ++g) {
    const int gi = pa.group.inv(g);
    for (int h = 0; h < ng; ++h) {
      // theta_g(X_{g^-1} cap X_h) = X_g cap X_{gh}.
      PointSet lhs(nx);
      (pa.carrier[gi] & pa.carrier[h]).for_each(
          [&](int x) { lhs.set(pa.apply(g, x)); });
      const PointSet rhs = pa.carrier[g] & pa.carrier[pa.group.mul(g, h)];
      if (lhs != rhs) {
        witness = Json{{"reason", "carrier compatibility fails"},
                       {"g", pa.group.label(g)},
                       {"h", pa.group.label(h)},
                       {"image", pa.space.set_label(lhs)},
                       {"expected", pa.space.set_label(rhs)}};
        return false;
      }
    }
  }

  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h) {
      const int gh = pa.group.mul(g, h);
      const PointSet dom =
          pa.carrier[pa.group.inv(h)] & pa.carrier[pa.group.inv(gh)];
      bool ok = true;
      int bad = -1;
      dom.for_each([&](int x) {
        const int y = pa.apply(h, x);
        if (y < 0 || !pa.defined(g, y) || pa.apply(g, y) != pa.apply(gh, x)) {
          ok = false;
          if (bad < 0) bad = x;
        }
      });
      if (!ok) {
        witness = point_witness(pa, "composition fails on the overlap", g, bad,
                                h);
        return false;
      }
    }
  return true;
}

}  // namespace

PaVerification verify_pa(const PartialAction& pa) {
  PaVerification v;
  v.structure_ok = check_structure(pa, v.structure_witness);
  if (!v.structure_ok) return v;
  v.axioms_ok = check_axioms(pa, v.axioms_witness);
  v.family_ok = check_family(pa, v.family_witness);
  return v;
}

CheckReport PaVerification::report() const {
  Json w;
  if (!structure_witness.is_null()) w["structure"] = structure_witness;
  if (!axioms_witness.is_null()) w["action_axioms"] = axioms_witness;
  if (!family_witness.is_null()) w["bijection_family"] = family_witness;
  CheckReport r = make_report(
      "verify-pa", {{"structure", structure_ok}}, axioms_ok && family_ok,
      w.empty() ? Json(nullptr) : w);
  return r;
}

CheckReport PaVerification::equivalence_report() const {
  Json w;
  w["action_axioms_hold"] = axioms_ok;
  w["bijection_family_holds"] = family_ok;
  if (!axioms_witness.is_null()) w["action_axioms_witness"] = axioms_witness;
  if (!family_witness.is_null())
    w["bijection_family_witness"] = family_witness;
  return make_report("prop2.3", {{"structure", structure_ok}},
                     axioms_ok == family_ok, w);
}

void require_valid(const PartialAction& pa) {
  PaVerification v = verify_pa(pa);
  if (!v.valid())
    fail(v.structure_ok ? errc::validation : errc::structural,
         "partial action data does not validate: " + v.report().to_json().dump());
}

CheckReport verify_global(const GlobalAction& ga) {
  const int ng = static_cast<int>(ga.group.order());
  const int nx = static_cast<int>(ga.space.size());
  Json w;
  bool ok = true;

  if (ga.act.size() != static_cast<std::size_t>(ng)) {
    return make_report("verify-global", {}, false,
                       Json{{"reason", "one permutation required per element"}});
  }
  for (int g = 0; g < ng && ok; ++g) {
    PointSet hit(nx);
    if (ga.act[g].size() != static_cast<std::size_t>(nx)) {
      w = Json{{"reason", "permutation size differs from space"},
               {"g", ga.group.label(g)}};
      ok = false;
      break;
    }
    for (int x = 0; x < nx; ++x) {
      const int y = ga.act[g][x];
      if (y < 0 || y >= nx || hit.test(y)) {
        w = Json{{"reason", "not a permutation"},
                 {"g", ga.group.label(g)},
                 {"x", ga.space.label(x)}};
        ok = false;
        break;
      }
      hit.set(y);
    }
  }

  if (ok) {
    const int e = ga.group.identity();
    for (int x = 0; x < nx && ok; ++x)
      if (ga.act[e][x] != x) {
        w = Json{{"reason", "identity acts nontrivially"},
                 {"x", ga.space.label(x)}};
        ok = false;
      }
    for (int g = 0; g < ng && ok; ++g)
      for (int h = 0; h < ng && ok; ++h)
        for (int x = 0; x < nx; ++x)
          if (ga.act[g][ga.act[h][x]] != ga.act[ga.group.mul(g, h)][x]) {
            w = Json{{"reason", "action is not multiplicative"},
                     {"g", ga.group.label(g)},
                     {"h", ga.group.label(h)},
                     {"x", ga.space.label(x)}};
            ok = false;
            break;
          }
  }

  bool homeo = true;
  Json hw;
  if (ok) {
    for (int g = 0; g < ng; ++g) {
      PointMap m = PointMap::total(ga.space, ga.space, ga.act[g]);
      if (!is_homeomorphism(m)) {
        homeo = false;
        hw = Json{{"reason", "element does not act by homeomorphism"},
                  {"g", ga.group.label(g)}};
        break;
      }
    }
  }

  Json witness = nullptr;
  if (!w.is_null() && !w.empty()) witness = w;
  else if (!hw.is_null() && !hw.empty()) witness = hw;
  return make_report("verify-global", {{"permutation_action", ok}}, ok && homeo,
                     witness);
}

CheckReport is_topological(const PartialAction& pa) {
  PaVerification v = verify_pa(pa);
  std::vector<std::pair<std::string, bool>> hyps = {{"valid", v.valid()}};
  if (!v.structure_ok)
    return make_report("topological", hyps, false, v.structure_witness);

  const int ng = static_cast<int>(pa.group.order());
  for (int g = 0; g < ng; ++g) {
    if (!is_open(pa.space, pa.carrier[g]))
      return make_report("topological", hyps, false,
                         Json{{"reason", "carrier is not open"},
                              {"g", pa.group.label(g)},
                              {"carrier", pa.space.set_label(pa.carrier[g])}});
  }
  for (int g = 0; g < ng; ++g) {
    const PointSet& dom = pa.carrier[pa.group.inv(g)];
    if (dom.none()) continue;
    std::vector<int> pos(pa.space.size(), -1);
    const auto pts = pa.carrier[g].members();
    for (std::size_t i = 0; i < pts.size(); ++i)
      pos[pts[i]] = static_cast<int>(i);
    std::vector<int> fwd;
    fwd.reserve(dom.count());
    dom.for_each([&](int x) { fwd.push_back(pos[pa.apply(g, x)]); });
    PointMap onto = PointMap::total(subspace(pa.space, dom),
                                    subspace(pa.space, pa.carrier[g]),
                                    std::move(fwd));
    if (!is_homeomorphism(onto))
      return make_report(
          "topological", hyps, false,
          Json{{"reason", "map is not a homeomorphism between carriers"},
               {"g", pa.group.label(g)}});
  }
  return make_report("topological", hyps, true);
}

CheckReport is_continuous_pa(const PartialAction& pa) {
  PaVerification v = verify_pa(pa);
  std::vector<std::pair<std::string, bool>> hyps = {{"valid", v.valid()}};
  if (!v.structure_ok)
    return make_report("joint-continuity", hyps, false, v.structure_witness);

  const FinSpace pairs = pair_space(pa.group, pa.space);
  const PointSet star = pa.star_pairs();
  const int nx = static_cast<int>(pa.space.size());
  std::vector<int> fwd(pairs.size(), -1);
  star.for_each([&](int p) { fwd[p] = pa.apply(p / nx, p % nx); });
  PointMap joint = PointMap::partial(pairs, pa.space, std::move(fwd), star);
  const bool ok = is_continuous(joint);
  return make_report("joint-continuity", hyps, ok,
                     ok ? Json(nullptr)
                        : Json{{"reason", "joint action map discontinuous"}});
}

bool is_global_action(const PartialAction& pa) {
  const PointSet full = PointSet::full_set(pa.space.size());
  for (const PointSet& c : pa.carrier)
    if (c != full) return false;
  return true;
}

DomainTopology domain_topology(const PartialAction& pa) {
  const FinSpace pairs = pair_space(pa.group, pa.space);
  const PointSet star = pa.star_pairs();
  DomainTopology via_product{is_open(pairs, star), is_closed(pairs, star)};

  DomainTopology via_carriers{true, true};
  for (std::size_t g = 0; g < pa.group.order(); ++g) {
    const PointSet& dom = pa.carrier[pa.group.inv(static_cast<int>(g))];
    if (!is_open(pa.space, dom)) via_carriers.open = false;
    if (!is_closed(pa.space, dom)) via_carriers.closed = false;
  }

  if (via_product.open != via_carriers.open ||
      via_product.closed != via_carriers.closed)
    fail(errc::internal, "domain topology routes disagree");
  return via_product;
}

PartialAction restrict_action(const GlobalAction& ga, const PointSet& s) {
  if (s.none()) fail(errc::empty_carrier, "restriction to the empty set");
  if (!is_open(ga.space, s))
    fail(errc::not_open, "restriction requires an open subset, got " +
                             ga.space.set_label(s));
  const int ng = static_cast<int>(ga.group.order());
  const int nx = static_cast<int>(ga.space.size());

  FinSpace sub = subspace(ga.space, s);
  const std::vector<int> up = s.members();  // subspace index -> parent index
  std::vector<int> pos(nx, -1);             // parent index -> subspace index
  for (std::size_t i = 0; i < up.size(); ++i) pos[up[i]] = static_cast<int>(i);

  PartialAction pa;
  pa.group = ga.group;
  pa.space = sub;
  pa.carrier.assign(ng, PointSet(sub.size()));
  pa.theta.assign(ng, std::vector<int>(sub.size(), -1));
  for (int g = 0; g < ng; ++g) {
    // X_g = s cap g.s, theta_g the action map cut down to it.
    for (int x = 0; x < nx; ++x) {
      if (!s.test(x)) continue;
      const int y = ga.act[g][x];
      if (s.test(y)) pa.carrier[g].set(pos[y]);
    }
  }
  for (int g = 0; g < ng; ++g) {
    const int gi = ga.group.inv(g);
    pa.carrier[gi].for_each(
        [&](int xs) { pa.theta[g][xs] = pos[ga.act[g][up[xs]]]; });
  }

  require_valid(pa);
  CheckReport topo = is_topological(pa);
  if (!topo.conclusion)
    fail(errc::internal, "restriction of a global action must be topological");
  return pa;
}

PartialAction to_partial(const GlobalAction& ga) {
  PartialAction pa;
  pa.group = ga.group;
  pa.space = ga.space;
  const int ng = static_cast<int>(ga.group.order());
  pa.carrier.assign(ng, PointSet::full_set(ga.space.size()));
  pa.theta = ga.act;
  return pa;
}

namespace {

// Random minimal basis repaired to validity: start from arbitrary sets
// containing their point and close under "q in U_p forces U_q into U_p".
FinSpace random_space(Rng& rng, int n, const std::string& prefix) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  std::vector<PointSet> nbhd(n, PointSet(n));
  for (int p = 0; p < n; ++p) {
    nbhd[p].set(p);
    for (int q = 0; q < n; ++q)
      if (rng.below(3) == 0) nbhd[p].set(q);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < n; ++p)
      nbhd[p].for_each([&](int q) {
        if (!nbhd[q].is_subset_of(nbhd[p])) {
          nbhd[p] |= nbhd[q];
          changed = true;
        }
      });
  }
  return FinSpace::from_min_basis(std::move(labels), std::move(nbhd));
}

FinGroup catalog_group(Rng& rng, int max_order) {
  std::vector<FinGroup> catalog;
  catalog.push_back(FinGroup::trivial());
  for (int n = 2; n <= std::min(8, max_order); ++n)
    catalog.push_back(FinGroup::cyclic(n));
  if (max_order >= 4) catalog.push_back(FinGroup::klein4());
  if (max_order >= 6) catalog.push_back(FinGroup::symmetric(3));
  return catalog[rng.below(catalog.size())];
}

}  // namespace

PartialAction random_pa(std::uint64_t seed, const RandomLimits& limits) {
  if (limits.max_group < 1 || limits.max_space < 1)
    fail(errc::generation, "limits must be positive");
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x6a09e667f3bcc909ull);
  const FinGroup g = catalog_group(rng, limits.max_group);
  const int ng = static_cast<int>(g.order());

  // One or two orbit blocks: cosets of a random subgroup crossed with a
  // random space, as long as the point budget allows.
  const auto subs = subgroups(g);
  struct Block {
    std::vector<int> coset_of;  // group element -> coset id
    int cosets = 0;
    FinSpace z;
  };
  std::vector<Block> blocks;
  int budget = limits.max_space;
  const int want_blocks = 1 + static_cast<int>(rng.below(2));
  for (int b = 0; b < want_blocks && budget > 0; ++b) {
    const auto& sub = subs[rng.below(subs.size())];
    PointSet members(ng);
    for (int m : sub) members.set(m);
    Block blk;
    blk.coset_of.assign(ng, -1);
    for (int e = 0; e < ng; ++e) {
      if (blk.coset_of[e] >= 0) continue;
      for (int m : sub) blk.coset_of[g.mul(e, m)] = blk.cosets;
      ++blk.cosets;
    }
    if (blk.cosets > budget) continue;
    const int zmax = budget / blk.cosets;
    const int zn = 1 + static_cast<int>(rng.below(zmax));
    blk.z = random_space(rng, zn, "b" + std::to_string(blocks.size()) + "p");
    budget -= blk.cosets * zn;
    blocks.push_back(std::move(blk));
  }
  if (blocks.empty()) {
    Block blk;
    blk.coset_of.assign(ng, 0);
    blk.cosets = 1;
    blk.z = random_space(rng, 1, "p");
    blocks.push_back(std::move(blk));
  }

  // Assemble the global space: per block, cosets x z, discrete across cosets.
  std::vector<std::string> labels;
  std::vector<PointSet> nbhd;
  struct Slot {
    int block, coset, zp;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<std::vector<int>>> at;  // block -> coset -> zp -> idx
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    at.emplace_back(blocks[b].cosets,
                    std::vector<int>(blocks[b].z.size(), -1));
    for (int c = 0; c < blocks[b].cosets; ++c)
      for (std::size_t zp = 0; zp < blocks[b].z.size(); ++zp) {
        at[b][c][zp] = static_cast<int>(slots.size());
        slots.push_back({static_cast<int>(b), c, static_cast<int>(zp)});
        labels.push_back("y" + std::to_string(slots.size() - 1));
      }
  }
  const int ny = static_cast<int>(slots.size());
  nbhd.assign(ny, PointSet(ny));
  for (int p = 0; p < ny; ++p) {
    const Slot& s = slots[p];
    blocks[s.block].z.nbhd(s.zp).for_each(
        [&](int zq) { nbhd[p].set(at[s.block][s.coset][zq]); });
  }
  FinSpace y = FinSpace::from_min_basis(labels, std::move(nbhd));

  GlobalAction ga;
  ga.group = g;
  ga.space = y;
  ga.act.assign(ng, std::vector<int>(ny));
  for (int gg = 0; gg < ng; ++gg)
    for (int p = 0; p < ny; ++p) {
      const Slot& s = slots[p];
      // Move the coset by left translation: pick any element of the coset,
      // translate, look the new coset up.
      int rep = -1;
      for (int e = 0; e < ng && rep < 0; ++e)
        if (blocks[s.block].coset_of[e] == s.coset) rep = e;
      const int target = blocks[s.block].coset_of[g.mul(gg, rep)];
      ga.act[gg][p] = at[s.block][target][s.zp];
    }

  {
    CheckReport r = verify_global(ga);
    if (!r.conclusion) fail(errc::internal, "generated action must be global");
  }

  // Random nonempty open subset; fall back to the whole space.
  PointSet open_part(ny);
  for (int attempt = 0; attempt < 8; ++attempt) {
    PointSet candidate(ny);
    for (int p = 0; p < ny; ++p)
      if (rng.coin()) candidate.set(p);
    candidate = interior(y, candidate);
    if (candidate.any()) {
      open_part = candidate;
      break;
    }
  }
  if (open_part.none()) open_part = PointSet::full_set(ny);

  return restrict_action(ga, open_part);
}

}  // namespace pact
