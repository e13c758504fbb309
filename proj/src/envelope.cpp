#include "pact/envelope.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pact/category.hpp"
#include "pact/errors.hpp"

namespace pact {

namespace {

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

Json pair_witness(const PartialAction& pa, int g, int x) {
  Json w;
  w["g"] = pa.group.label(g);
  w["x"] = pa.space.label(x);
  return w;
}

}  // namespace

RelationResult build_relation(const PartialAction& pa) {
  const int order = pa.group.order();
  const int n = static_cast<int>(pa.space.size());
  const int pairs = order * n;

  RelationResult out;
  out.rel.pa = pa;

  std::vector<int> parent(pairs);
  std::iota(parent.begin(), parent.end(), 0);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      const int cross = pa.group.mul(pa.group.inv(g), h);
      const int move = pa.group.mul(pa.group.inv(h), g);
      for (int x : pa.carrier[cross].members()) {
        unite(parent, g * n + x, h * n + pa.theta[move][x]);
      }
    }
  }
  out.rel.class_of.assign(pairs, -1);
  for (int p = 0; p < pairs; ++p) {
    const int root = find_root(parent, p);
    if (out.rel.class_of[root] < 0) {
      out.rel.class_of[root] = static_cast<int>(out.rel.class_rep.size());
      out.rel.class_rep.push_back(root);
    }
    out.rel.class_of[p] = out.rel.class_of[root];
  }

  const bool valid = verify_pa(pa).valid();
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  Json witness;
  for (int g = 0; g < order && reflexive; ++g) {
    for (int x = 0; x < n; ++x) {
      if (!out.rel.related(g, x, g, x)) {
        reflexive = false;
        witness = pair_witness(pa, g, x);
        witness["condition"] = "not reflexive";
        break;
      }
    }
  }
  for (int g = 0; g < order && symmetric; ++g) {
    for (int h = 0; h < order && symmetric; ++h) {
      const int cross = pa.group.mul(pa.group.inv(g), h);
      const int move = pa.group.mul(pa.group.inv(h), g);
      for (int x : pa.carrier[cross].members()) {
        if (!out.rel.related(h, pa.theta[move][x], g, x)) {
          symmetric = false;
          witness = pair_witness(pa, g, x);
          witness["condition"] = "not symmetric";
          witness["h"] = pa.group.label(h);
          break;
        }
      }
    }
  }
  for (int g = 0; g < order && transitive; ++g) {
    for (int x = 0; x < n && transitive; ++x) {
      for (int h = 0; h < order && transitive; ++h) {
        const int gh = pa.group.mul(pa.group.inv(g), h);
        if (!pa.carrier[gh].test(x)) continue;
        const int y = pa.theta[pa.group.mul(pa.group.inv(h), g)][x];
        for (int k = 0; k < order; ++k) {
          const int hk = pa.group.mul(pa.group.inv(h), k);
          if (!pa.carrier[hk].test(y)) continue;
          const int z = pa.theta[pa.group.mul(pa.group.inv(k), h)][y];
          if (!out.rel.related(g, x, k, z)) {
            transitive = false;
            witness = pair_witness(pa, g, x);
            witness["condition"] = "not transitive";
            witness["h"] = pa.group.label(h);
            witness["k"] = pa.group.label(k);
            break;
          }
        }
      }
    }
  }
  out.equivalence = make_report("envelope-relation-equivalence",
                                {{"action valid", valid}},
                                reflexive && symmetric && transitive, witness);
  return out;
}

EnvelopingSpace globalize(const PartialAction& pa) {
  require_valid(pa);
  const int order = pa.group.order();
  const int n = static_cast<int>(pa.space.size());

  EnvelopingSpace env;
  env.source = pa;
  env.pairs = pair_space(pa.group, pa.space);
  RelationResult rr = build_relation(pa);
  env.class_of = rr.rel.class_of;

  const int classes = static_cast<int>(rr.rel.class_rep.size());
  std::vector<std::string> labels(classes);
  for (int c = 0; c < classes; ++c) {
    const int rep = rr.rel.class_rep[c];
    labels[c] = "[" + pa.group.label(rep / n) + "," +
                pa.space.label(rep % n) + "]";
  }
  env.space = quotient(env.pairs, env.class_of, labels);

  env.action.group = pa.group;
  env.action.space = env.space;
  env.action.act.assign(order, std::vector<int>(classes, -1));
  bool well_defined = true;
  Json action_witness;
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      for (int x = 0; x < n; ++x) {
        const int c = env.class_of[h * n + x];
        const int target = env.class_of[pa.group.mul(g, h) * n + x];
        int& slot = env.action.act[g][c];
        if (slot < 0) {
          slot = target;
        } else if (slot != target && well_defined) {
          well_defined = false;
          action_witness = pair_witness(pa, h, x);
          action_witness["condition"] = "translation not constant on a class";
          action_witness["mover"] = pa.group.label(g);
        }
      }
    }
  }

  std::vector<int> iota_fwd(n);
  const int e = pa.group.identity();
  for (int x = 0; x < n; ++x) iota_fwd[x] = env.class_of[e * n + x];
  env.iota = PointMap::total(pa.space, env.space, iota_fwd);
  std::vector<int> quot_fwd(env.class_of.begin(), env.class_of.end());
  env.quot = PointMap::total(env.pairs, env.space, quot_fwd);

  const bool topological = is_topological(pa).conclusion;
  const DomainTopology dom = domain_topology(pa);
  const PointSet image = env.iota.image_of(pa.space.full_set());

  env.reports.push_back(rr.equivalence);

  CheckReport global = verify_global(env.action);
  Json gw = action_witness.is_null() ? global.witness : action_witness;
  env.reports.push_back(make_report(
      "envelope-action", {{"action valid", true}},
      well_defined && global.status() == CheckStatus::verified, gw));

  env.reports.push_back(make_report(
      "envelope-quotient-open",
      {{"action valid", true}, {"action topological", topological}},
      is_open_map(env.quot), Json()));

  env.reports.push_back(make_report("envelope-iota-injective",
                                    {{"action valid", true}},
                                    is_injective(env.iota), Json()));

  {
    const bool embedding = is_embedding(env.iota);
    const bool continuous = is_continuous_pa(pa).conclusion;
    Json w;
    w["iota_embedding"] = embedding;
    w["jointly_continuous"] = continuous;
    env.reports.push_back(make_report("envelope-iota-embedding-iff-continuous",
                                      {{"action valid", true}},
                                      embedding == continuous, w));
  }

  env.reports.push_back(make_report(
      "envelope-iota-image-open",
      {{"action valid", true}, {"pair domain open", dom.open}},
      is_open(env.space, image), Json()));

  {
    bool covers = true;
    Json w;
    for (int c = 0; c < classes && covers; ++c) {
      const int rep = rr.rel.class_rep[c];
      if (env.action.act[rep / n][iota_fwd[rep % n]] != c) {
        covers = false;
        w["class"] = labels[c];
        w["condition"] = "class not reached from the embedded copy";
      }
    }
    env.reports.push_back(make_report("envelope-orbit-covers",
                                      {{"action valid", true}}, covers, w));
  }

  {
    bool equivalent = false;
    Json w;
    if (std::optional<GMap> round_trip = restriction_morphism(env)) {
      CheckReport eq = is_equivalence(*round_trip);
      equivalent = eq.status() == CheckStatus::verified;
      if (!equivalent) w = eq.witness;
    } else {
      w["reason"] = "embedded copy is not an open subaction";
    }
    env.reports.push_back(make_report(
        "envelope-restriction-equivalence",
        {{"action valid", true}, {"action topological", topological}},
        equivalent, w));
  }

  return env;
}

std::optional<GMap> restriction_morphism(const EnvelopingSpace& env) {
  const int n = static_cast<int>(env.source.space.size());
  const PointSet image = env.iota.image_of(env.source.space.full_set());
  if (!is_topological(env.source).conclusion ||
      verify_global(env.action).status() != CheckStatus::verified ||
      !is_open(env.space, image) || !is_embedding(env.iota)) {
    return std::nullopt;
  }
  PartialAction back = restrict_action(env.action, image);
  std::vector<int> pos(env.space.size(), -1);
  {
    int at = 0;
    for (int p : image.members()) pos[p] = at++;
  }
  std::vector<int> fwd(n);
  for (int x = 0; x < n; ++x) fwd[x] = pos[env.iota(x)];
  PointMap map = PointMap::total(env.source.space, back.space, std::move(fwd));
  return GMap{env.source, std::move(back), std::move(map)};
}

bool relation_closed(const PartialAction& pa, Json* witness) {
  const int order = pa.group.order();
  const int n = static_cast<int>(pa.space.size());
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      const int cross = pa.group.mul(pa.group.inv(g), h);
      const int move = pa.group.mul(pa.group.inv(h), g);
      std::vector<int> fwd(n, -1);
      for (int x : pa.carrier[cross].members()) {
        fwd[x] = pa.theta[move][x];
      }
      for (int x = 0; x < n; ++x) {
        PointSet reach(n);
        for (int nx : pa.space.nbhd(x).members()) {
          if (fwd[nx] >= 0) reach.set(fwd[nx]);
        }
        for (int y = 0; y < n; ++y) {
          if (fwd[x] == y) continue;
          if (reach.intersects(pa.space.nbhd(y))) {
            if (witness) {
              *witness = pair_witness(pa, g, x);
              (*witness)["h"] = pa.group.label(h);
              (*witness)["y"] = pa.space.label(y);
              (*witness)["condition"] =
                  "basic neighborhood of an unrelated pair meets the relation";
            }
            return false;
          }
        }
      }
    }
  }
  return true;
}

CheckReport check_relation_closed(const PartialAction& pa) {
  const bool valid = verify_pa(pa).valid();
  if (!valid) {
    Json w;
    w["reason"] = "action invalid";
    return make_report("envelope-hausdorff-iff-relation-closed",
                       {{"action valid", false}}, false, w);
  }
  const bool topological = is_topological(pa).conclusion;
  const bool hausdorff = separation(pa.space).hausdorff;
  Json w;
  Json rw;
  const bool closed = relation_closed(pa, &rw);
  EnvelopingSpace env = globalize(pa);
  const bool envelope_t2 = separation(env.space).hausdorff;
  w["relation_closed"] = closed;
  w["envelope_hausdorff"] = envelope_t2;
  if (!rw.is_null()) w["relation_witness"] = rw;
  return make_report("envelope-hausdorff-iff-relation-closed",
                     {{"action valid", true},
                      {"action topological", topological},
                      {"space hausdorff", hausdorff}},
                     closed == envelope_t2, w);
}

CheckReport check_l2(const PartialAction& pa, HyperKind kind,
                     const HyperCaps& caps) {
  const bool valid = verify_pa(pa).valid();
  const bool topological = valid && is_topological(pa).conclusion;
  const bool base_closed = valid && relation_closed(pa);
  std::vector<std::pair<std::string, bool>> hyps = {
      {"action valid", valid},
      {"action topological", topological},
      {"base relation closed", base_closed},
  };
  if (!topological) {
    Json w;
    w["reason"] = "lift unavailable";
    return make_report("lemma-l2", std::move(hyps), false, w);
  }
  PartialAction lifted = lift_pa(pa, kind, caps);
  Json w;
  w["kind"] = kind_name(kind);
  Json rw;
  const bool lifted_closed = relation_closed(lifted, &rw);
  if (!rw.is_null()) w["relation_witness"] = rw;
  return make_report("lemma-l2", std::move(hyps), lifted_closed, w);
}

CheckReport check_equivh(const PartialAction& pa, HyperKind kind,
                         const HyperCaps& caps) {
  const bool valid = verify_pa(pa).valid();
  const bool topological = valid && is_topological(pa).conclusion;
  const bool hausdorff = separation(pa.space).hausdorff;
  std::vector<std::pair<std::string, bool>> hyps = {
      {"action valid", valid},
      {"action topological", topological},
      {"space hausdorff", hausdorff},
  };
  if (!topological) {
    Json w;
    w["reason"] = "lift unavailable";
    return make_report("thm-equivh", std::move(hyps), false, w);
  }
  EnvelopingSpace env = globalize(pa);
  EnvelopingSpace lifted_env = globalize(lift_pa(pa, kind, caps));
  const bool base_t2 = separation(env.space).hausdorff;
  const bool lift_t2 = separation(lifted_env.space).hausdorff;
  Json w;
  w["kind"] = kind_name(kind);
  w["envelope_hausdorff"] = base_t2;
  w["lift_envelope_hausdorff"] = lift_t2;
  return make_report("thm-equivh", std::move(hyps), base_t2 == lift_t2, w);
}

std::vector<CheckReport> check_fin(const PartialAction& pa,
                                   const HyperCaps& caps) {
  const bool valid = verify_pa(pa).valid();
  const bool topological = valid && is_topological(pa).conclusion;
  if (!topological) {
    Json w;
    w["reason"] = "lift unavailable";
    return {make_report("prop-fin",
                        {{"action valid", valid},
                         {"action topological", topological},
                         {"envelope t1", false}},
                        false, w),
            make_report("prop-fin-converse",
                        {{"action valid", valid},
                         {"action topological", topological}},
                        false, w)};
  }
  EnvelopingSpace env = globalize(pa);
  EnvelopingSpace lifted_env = globalize(lift_pa(pa, HyperKind::h3, caps));
  const bool base_t1 = separation(env.space).t1;
  const bool lift_t1 = separation(lifted_env.space).t1;
  Json w;
  w["kind"] = kind_name(HyperKind::h3);
  w["envelope_t1"] = base_t1;
  w["lift_envelope_t1"] = lift_t1;
  return {make_report("prop-fin",
                      {{"action valid", true},
                       {"action topological", true},
                       {"envelope t1", base_t1}},
                      lift_t1, w),
          make_report("prop-fin-converse",
                      {{"action valid", true}, {"action topological", true}},
                      !lift_t1 || base_t1, w)};
}

CheckReport check_regu(const PartialAction& pa, HyperKind kind,
                       const HyperCaps& caps) {
  const bool valid = verify_pa(pa).valid();
  const bool topological = valid && is_topological(pa).conclusion;
  const bool continuous = valid && is_continuous_pa(pa).conclusion;
  const bool domain_closed = valid && domain_topology(pa).closed;
  const bool regular = separation(pa.space).regular;
  std::vector<std::pair<std::string, bool>> hyps = {
      {"action valid", valid},
      {"action topological", topological},
      {"action jointly continuous", continuous},
      {"pair domain closed", domain_closed},
      {"space regular", regular},
  };
  if (!topological) {
    Json w;
    w["reason"] = "lift unavailable";
    return make_report("thm-regu", std::move(hyps), false, w);
  }
  EnvelopingSpace env = globalize(pa);
  EnvelopingSpace lifted_env = globalize(lift_pa(pa, kind, caps));
  const bool base_regular = separation(env.space).regular;
  const bool lift_regular = separation(lifted_env.space).regular;
  Json w;
  w["kind"] = kind_name(kind);
  w["envelope_regular"] = base_regular;
  w["lift_envelope_regular"] = lift_regular;
  return make_report("thm-regu", std::move(hyps),
                     base_regular && lift_regular, w);
}

ThetaEmbedding theta_embedding(const PartialAction& pa, HyperKind kind,
                               const HyperCaps& caps) {
  const bool valid = verify_pa(pa).valid();
  const bool topological = valid && is_topological(pa).conclusion;
  std::vector<std::pair<std::string, bool>> hyps = {
      {"action valid", valid},
      {"action topological", topological},
  };
  if (!topological) {
    Json w;
    w["reason"] = "lift unavailable";
    return {std::nullopt, make_report("lemma-l1", std::move(hyps), false, w)};
  }
  const int n = static_cast<int>(pa.space.size());
  Hyperspace h = build_hyperspace(pa.space, kind, caps);
  PartialAction lifted = lift_pa(h, pa);
  EnvelopingSpace env = globalize(pa);
  EnvelopingSpace lifted_env = globalize(lifted);

  std::vector<int> sing(n);
  for (int x = 0; x < n; ++x) {
    sing[x] = h.index_of(PointSet::single(n, x));
    if (sing[x] < 0) fail(errc::internal, "singleton missing from hyperspace");
  }
  const int classes = static_cast<int>(env.space.size());
  std::vector<int> fwd(classes, -1);
  bool well_defined = true;
  Json w;
  w["kind"] = kind_name(kind);
  const int order = static_cast<int>(pa.group.order());
  for (int g = 0; g < order && well_defined; ++g) {
    for (int x = 0; x < n; ++x) {
      const int c = env.class_index(g, x);
      const int target = lifted_env.class_index(g, sing[x]);
      if (fwd[c] < 0) {
        fwd[c] = target;
      } else if (fwd[c] != target) {
        well_defined = false;
        w["condition"] = "not constant on a class";
        w["g"] = pa.group.label(g);
        w["x"] = pa.space.label(x);
        break;
      }
    }
  }
  if (!well_defined) {
    return {std::nullopt, make_report("lemma-l1", std::move(hyps), false, w)};
  }
  PointMap theta = PointMap::total(env.space, lifted_env.space, fwd);
  const bool injective = is_injective(theta);
  const bool embedding = is_embedding(theta);
  w["injective"] = injective;
  w["embedding"] = embedding;
  return {theta, make_report("lemma-l1", std::move(hyps),
                             injective && embedding, w)};
}

}  // namespace pact
