#include "pact/harness.hpp"

#include <utility>

namespace pact {

void SuiteOutcome::add(const CheckReport& r, const Json& context) {
  ++reports;
  SuiteTally& tally = per_check[r.check_id];
  switch (r.status()) {
    case CheckStatus::verified: ++tally.verified; break;
    case CheckStatus::hypothesis_failed: ++tally.hypothesis_failed; break;
    case CheckStatus::counterexample: {
      ++tally.counterexample;
      Json entry;
      entry["context"] = context;
      entry["report"] = r.to_json();
      counterexamples.push_back(std::move(entry));
      break;
    }
  }
}

Json SuiteOutcome::to_json() const {
  Json checks;
  for (const auto& [id, tally] : per_check) {
    Json row;
    row["verified"] = tally.verified;
    row["hypothesis-failed"] = tally.hypothesis_failed;
    row["counterexample"] = tally.counterexample;
    checks[id] = row;
  }
  Json out;
  out["reports"] = reports;
  out["checks"] = checks;
  out["counterexamples"] = counterexamples;
  return out;
}

namespace {

CheckReport renamed(CheckReport r, const char* id) {
  r.check_id = id;
  return r;
}

}  // namespace

void run_property_suite(const PartialAction& pa, const SuiteOptions& opts,
                        SuiteOutcome& out, const Json& context) {
  const PaVerification verification = verify_pa(pa);
  out.add(verification.report(), context);
  out.add(verification.equivalence_report(), context);

  const CheckReport topologic = is_topological(pa);
  const CheckReport continuous = is_continuous_pa(pa);
  out.add(topologic, context);
  out.add(continuous, context);

  const bool valid = verification.valid();
  if (!valid) return;

  const DomainTopology dom = domain_topology(pa);
  {
    Json w;
    w["per_map"] = topologic.conclusion;
    w["joint"] = continuous.conclusion;
    out.add(make_report("joint-continuity-agrees",
                        {{"action valid", true},
                         {"pair domain open", dom.open}},
                        topologic.conclusion == continuous.conclusion, w),
            context);
  }

  std::optional<EnvelopingSpace> env;
  if (opts.envelope) {
    env.emplace(globalize(pa));
    for (const CheckReport& r : env->reports) out.add(r, context);
    out.add(check_relation_closed(pa), context);
  }

  const int n = static_cast<int>(pa.space.size());
  const bool lifts = topologic.conclusion && n <= opts.lift_cap;
  if (lifts) {
    for (const CheckReport& r : check_lift_transfers(pa, opts.kind, opts.caps))
      out.add(r, context);
    out.add(check_closed_domain_lift(pa, opts.kind, opts.caps), context);
    out.add(theta_embedding(pa, opts.kind, opts.caps).report, context);
    out.add(check_l2(pa, opts.kind, opts.caps), context);
    out.add(check_equivh(pa, opts.kind, opts.caps), context);
    for (const CheckReport& r : check_fin(pa, opts.caps)) out.add(r, context);
    out.add(check_regu(pa, opts.kind, opts.caps), context);
    out.add(renamed(is_gmap(eta(pa, opts.caps)), "eta-gmap"), context);
    if (n <= 3) {
      out.add(renamed(is_gmap(mu(pa, opts.caps)), "mu-gmap"), context);
    }
  }

  if (env && lifts) {
    if (std::optional<GMap> f = restriction_morphism(*env)) {
      out.add(check_eta_naturality(*f, opts.caps), context);
      if (n <= 4) out.add(check_mu_naturality(*f, opts.caps), context);

      GMap lifted = functor_on_map(*f, HyperKind::h1, opts.caps);
      {
        std::vector<int> id_fwd(n);
        for (int x = 0; x < n; ++x) id_fwd[x] = x;
        GMap ident{pa, pa,
                   PointMap::total(pa.space, pa.space, std::move(id_fwd))};
        GMap lifted_ident = functor_on_map(ident, HyperKind::h1, opts.caps);
        bool fixed = true;
        for (std::size_t a = 0; a < lifted_ident.map.fwd.size(); ++a) {
          fixed = fixed && lifted_ident.map.fwd[a] == static_cast<int>(a);
        }
        out.add(make_report("functor-identity", {{"action valid", true}},
                            fixed, Json()),
                context);
      }
      {
        std::vector<int> inv_fwd(f->target.space.size(), -1);
        for (std::size_t x = 0; x < f->map.fwd.size(); ++x) {
          inv_fwd[f->map.fwd[x]] = static_cast<int>(x);
        }
        GMap back{f->target, f->source,
                  PointMap::total(f->target.space, f->source.space,
                                  std::move(inv_fwd))};
        GMap lifted_back = functor_on_map(back, HyperKind::h1, opts.caps);
        GMap composite{f->source, f->source,
                       compose(back.map, f->map)};
        GMap lifted_composite =
            functor_on_map(composite, HyperKind::h1, opts.caps);
        const PointMap chained = compose(lifted_back.map, lifted.map);
        bool agrees = true;
        for (std::size_t a = 0; a < chained.fwd.size(); ++a) {
          agrees = agrees && chained.fwd[a] == lifted_composite.map.fwd[a];
        }
        out.add(make_report("functor-composition", {{"action valid", true}},
                            agrees, Json()),
                context);
      }
    }
  }

  if (topologic.conclusion && n > 0 && n <= opts.monad_cap) {
    MonadOptions mo;
    mo.samples = opts.monad_samples;
    mo.seed = opts.monad_seed;
    out.add(check_monad_laws(pa, mo, opts.caps), context);
  }
}

}  // namespace pact
