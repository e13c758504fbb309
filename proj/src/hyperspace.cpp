#include "pact/hyperspace.hpp"

#include <string>

namespace pact {

const char* kind_name(HyperKind k) {
  switch (k) {
    case HyperKind::h1: return "h1";
    case HyperKind::h2: return "h2";
    case HyperKind::h3: return "h3";
  }
  return "unknown";
}

HyperKind kind_from_name(std::string_view name) {
  if (name == "h1") return HyperKind::h1;
  if (name == "h2") return HyperKind::h2;
  if (name == "h3") return HyperKind::h3;
  fail(errc::usage, "unknown hyperspace kind \"" + std::string(name) + "\"");
}

int Hyperspace::index_of(const PointSet& subset) const {
  auto it = idx->find(subset);
  return it == idx->end() ? -1 : it->second;
}

PointSet Hyperspace::bracket(const PointSet& u) const {
  PointSet out(member.size());
  for (std::size_t a = 0; a < member.size(); ++a)
    if (member[a].is_subset_of(u)) out.set(a);
  return out;
}

Hyperspace build_hyperspace(const FinSpace& x, HyperKind kind,
                            const HyperCaps& caps) {
  const int n = static_cast<int>(x.size());
  const bool connected_only = kind == HyperKind::h2;
  const int base_cap = connected_only ? caps.connected_base : caps.full_base;
  if (n > base_cap)
    fail(errc::size_limit, "base space has " + std::to_string(n) +
                               " points, cap for kind " + kind_name(kind) +
                               " is " + std::to_string(base_cap));

  Hyperspace h;
  h.base = x;
  h.kind = kind;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    PointSet s = PointSet::from_mask(n, mask);
    if (connected_only && !is_connected(x, s)) continue;
    h.member.push_back(std::move(s));
  }
  if (static_cast<int>(h.member.size()) > caps.max_points)
    fail(errc::size_limit,
         "hyperspace would have " + std::to_string(h.member.size()) +
             " points, cap is " + std::to_string(caps.max_points));

  auto idx =
      std::make_shared<std::unordered_map<PointSet, int, PointSetHash>>();
  idx->reserve(h.member.size());
  for (std::size_t i = 0; i < h.member.size(); ++i)
    idx->emplace(h.member[i], static_cast<int>(i));
  h.idx = std::move(idx);

  const std::size_t m = h.member.size();
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = x.set_label(h.member[i]);

  std::vector<PointSet> nbhd(m, PointSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    const PointSet& a = h.member[i];
    const PointSet hull = open_hull(x, a);
    for (std::size_t j = 0; j < m; ++j) {
      const PointSet& b = h.member[j];
      if (!b.is_subset_of(hull)) continue;
      bool meets_all = true;
      a.for_each([&](int p) {
        if (!b.intersects(x.nbhd(p))) meets_all = false;
      });
      if (meets_all) nbhd[i].set(j);
    }
  }
  h.space = FinSpace::from_min_basis(std::move(labels), std::move(nbhd));
  return h;
}

PointMap singleton_map(const Hyperspace& h) {
  const int n = static_cast<int>(h.base.size());
  std::vector<int> fwd(n);
  for (int p = 0; p < n; ++p) {
    fwd[p] = h.index_of(PointSet::single(n, p));
    if (fwd[p] < 0) fail(errc::internal, "singleton missing from hyperspace");
  }
  PointMap m = PointMap::total(h.base, h.space, std::move(fwd));
  if (!is_embedding(m))
    fail(errc::internal, "singleton map must embed the base");
  return m;
}

PointMap union_map(const Hyperspace& h, const Hyperspace& hh) {
  if (!same_topology(hh.base, h.space))
    fail(errc::validation, "union map needs a hyperspace over the hyperspace");
  std::vector<int> fwd(hh.member.size());
  for (std::size_t i = 0; i < hh.member.size(); ++i) {
    PointSet u(h.base.size());
    hh.member[i].for_each([&](int a) { u |= h.member[a]; });
    fwd[i] = h.index_of(u);
    if (fwd[i] < 0) fail(errc::internal, "union left the hyperspace");
  }
  PointMap m = PointMap::total(hh.space, h.space, std::move(fwd));
  if (!is_continuous(m)) fail(errc::internal, "union map must be continuous");
  return m;
}

PointMap lift_homeo(const Hyperspace& h, const PointMap& f) {
  if (!same_topology(f.source, h.base) || !same_topology(f.target, h.base))
    fail(errc::validation, "lift expects a partial map on the base space");
  const PointSet dom = f.domain;
  const PointSet img = f.image();
  if (!is_open(h.base, dom))
    fail(errc::not_open, "map domain " + h.base.set_label(dom) + " not open");
  if (!is_open(h.base, img))
    fail(errc::not_open, "map image " + h.base.set_label(img) + " not open");
  if (!is_injective(f) || !is_continuous(f) || !is_open_map(f))
    fail(errc::not_homeomorphism,
         "map does not restrict to a homeomorphism between its domain and "
         "image");

  std::vector<int> fwd(h.member.size(), -1);
  PointSet hdom(h.member.size());
  for (std::size_t i = 0; i < h.member.size(); ++i) {
    if (!h.member[i].is_subset_of(dom)) continue;
    const int j = h.index_of(f.image_of(h.member[i]));
    if (j < 0) fail(errc::internal, "homeomorphic image left the hyperspace");
    fwd[i] = j;
    hdom.set(i);
  }
  return PointMap::partial(h.space, h.space, std::move(fwd), std::move(hdom));
}

PartialAction lift_pa(const Hyperspace& h, const PartialAction& pa) {
  if (!same_topology(pa.space, h.base))
    fail(errc::validation, "action lives on a different space");
  require_valid(pa);
  if (!is_topological(pa).conclusion)
    fail(errc::validation, "lift requires a topological partial action");

  const int ng = static_cast<int>(pa.group.order());
  const std::size_t m = h.member.size();
  PartialAction out;
  out.group = pa.group;
  out.space = h.space;
  out.carrier.reserve(ng);
  for (int g = 0; g < ng; ++g) out.carrier.push_back(h.bracket(pa.carrier[g]));
  out.theta.assign(ng, std::vector<int>(m, -1));
  for (int g = 0; g < ng; ++g) {
    const int gi = pa.group.inv(g);
    out.carrier[gi].for_each([&](int i) {
      PointSet image(h.base.size());
      h.member[i].for_each([&](int p) { image.set(pa.apply(g, p)); });
      const int j = h.index_of(image);
      if (j < 0) fail(errc::internal, "lifted image left the hyperspace");
      out.theta[g][i] = j;
    });
  }

  require_valid(out);
  if (!is_topological(out).conclusion)
    fail(errc::internal, "lift of a topological action must be topological");
  return out;
}

PartialAction lift_pa(const PartialAction& pa, HyperKind kind,
                      const HyperCaps& caps) {
  return lift_pa(build_hyperspace(pa.space, kind, caps), pa);
}

CheckReport check_closed_domain_lift(const PartialAction& pa, HyperKind kind,
                                     const HyperCaps& caps) {
  const PaVerification v = verify_pa(pa);
  const bool topo = v.valid() && is_topological(pa).conclusion;
  std::vector<std::pair<std::string, bool>> hyps = {
      {"valid", v.valid()}, {"topological", topo}};
  if (!topo) {
    CheckReport r = make_report("prop3.5", hyps, false,
                                Json{{"reason", "lift unavailable"}});
    return r;
  }
  const DomainTopology base = domain_topology(pa);
  hyps.emplace_back("domain_closed", base.closed);
  const PartialAction lifted = lift_pa(pa, kind, caps);
  const DomainTopology lift = domain_topology(lifted);
  Json w;
  w["kind"] = kind_name(kind);
  w["base_domain_closed"] = base.closed;
  w["lift_domain_closed"] = lift.closed;
  return make_report("prop3.5", hyps, lift.closed, w);
}

std::vector<CheckReport> check_lift_transfers(const PartialAction& pa,
                                              HyperKind kind,
                                              const HyperCaps& caps) {
  const PaVerification v = verify_pa(pa);
  const bool topo = v.valid() && is_topological(pa).conclusion;
  std::vector<std::pair<std::string, bool>> standing = {
      {"valid", v.valid()}, {"topological", topo}};

  std::vector<CheckReport> out;
  if (!topo) {
    out.push_back(make_report("thm3.2-lift-valid", standing, false,
                              Json{{"reason", "lift unavailable"}}));
    return out;
  }

  const PartialAction lifted = lift_pa(pa, kind, caps);
  const bool lift_topo =
      verify_pa(lifted).valid() && is_topological(lifted).conclusion;
  out.push_back(make_report("thm3.2-lift-valid", standing, lift_topo,
                            Json{{"kind", kind_name(kind)}}));

  {
    auto hyps = standing;
    const bool dom_open = domain_topology(pa).open;
    hyps.emplace_back("domain_open", dom_open);
    out.push_back(make_report("thm3.2-open-domain", hyps,
                              domain_topology(lifted).open,
                              Json{{"kind", kind_name(kind)}}));
  }
  {
    auto hyps = standing;
    const bool cont = is_continuous_pa(pa).conclusion;
    hyps.emplace_back("continuous", cont);
    out.push_back(make_report("thm3.2-continuity", hyps,
                              is_continuous_pa(lifted).conclusion,
                              Json{{"kind", kind_name(kind)}}));
  }
  {
    auto hyps = standing;
    const bool global = is_global_action(pa);
    hyps.emplace_back("global", global);
    out.push_back(make_report("thm3.2-globality", hyps,
                              is_global_action(lifted),
                              Json{{"kind", kind_name(kind)}}));
  }
  return out;
}

}  // namespace pact
