#ifndef PACT_CATEGORY_HPP
#define PACT_CATEGORY_HPP

#include "pact/hyperspace.hpp"

namespace pact {

// A morphism between partial actions of the same group: a total continuous
// map that sends each carrier into the matching carrier and commutes with
// the partial maps wherever they are defined.
struct GMap {
  PartialAction source;
  PartialAction target;
  PointMap map;  // total, source.space -> target.space
};

CheckReport is_gmap(const GMap& f);

// A morphism that is a homeomorphism, maps each carrier onto the matching
// carrier exactly, and therefore has a morphism inverse.
CheckReport is_equivalence(const GMap& f);

// Image of a morphism under the hyperspace construction: sources and targets
// are lifted, the map sends a subset to its pointwise image. Throws unless
// the input verifies as a morphism between topological actions.
GMap functor_on_map(const GMap& f, HyperKind kind, const HyperCaps& caps = {});

// x -> {x}, from a topological action into its lift.
GMap eta(const PartialAction& pa, const HyperCaps& caps = {});

// A -> union of A, from the double lift back to the single lift. Requires
// the double hyperspace to fit under the caps.
GMap mu(const PartialAction& pa, const HyperCaps& caps = {});

// Square with the singleton maps commutes for every point.
CheckReport check_eta_naturality(const GMap& f, const HyperCaps& caps = {});

// Square with the union maps commutes for every double point, checked with
// subset masks so the double hyperspace is never materialized.
CheckReport check_mu_naturality(const GMap& f, const HyperCaps& caps = {});

struct MonadOptions {
  bool exhaustive = false;  // force full materialized towers
  int samples = 10000;      // associativity samples in sampled mode
  std::uint64_t seed = 0;
};

// Unit and associativity laws for the singleton/union structure on lifts.
// Small spaces get fully materialized towers with every composite verified
// as a morphism; larger ones get exhaustive unit checks plus seeded sampling
// of associativity and equivariance over the triple level.
CheckReport check_monad_laws(const PartialAction& pa,
                             const MonadOptions& opts = {},
                             const HyperCaps& caps = {});

}  // namespace pact

#endif
