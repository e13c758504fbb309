#ifndef PACT_ACTIONS_HPP
#define PACT_ACTIONS_HPP

#include <cstdint>
#include <vector>

#include "pact/groups.hpp"
#include "pact/report.hpp"
#include "pact/topology.hpp"

namespace pact {

// Partial action data: a carrier X_g per group element and a partial map
// theta_g per group element, intended to be a bijection from X_{g^-1} onto
// X_g. The set of defined pairs { (g,x) : x in X_{g^-1} } is always derived
// from the carriers, never stored. Construction does not validate; run
// verify_pa to obtain a full report.
struct PartialAction {
  FinGroup group;
  FinSpace space;
  std::vector<PointSet> carrier;        // g -> X_g
  std::vector<std::vector<int>> theta;  // g -> point map, -1 where undefined

  // theta_g(x), or -1 when x is outside X_{g^-1}.
  int apply(int g, int x) const { return theta[g][x]; }
  bool defined(int g, int x) const { return carrier[group.inv(g)].test(x); }

  // Pair (g,x) as an index into product(discrete(G), X).
  int pair_index(int g, int x) const {
    return g * static_cast<int>(space.size()) + x;
  }

  // Mask of defined pairs inside the pair space.
  PointSet star_pairs() const;
};

// Everywhere-defined action; act[g] is a permutation of the points.
struct GlobalAction {
  FinGroup group;
  FinSpace space;
  std::vector<std::vector<int>> act;

  int apply(int g, int x) const { return act[g][x]; }
};

// product(discrete(G), X); pair (g,x) sits at index g*|X|+x.
FinSpace pair_space(const FinGroup& g, const FinSpace& x);

// Outcome of validating partial action data along two independent routes:
// the axioms of the partially defined action map (identity, inversion,
// composition extension) and the conditions on the bijection family
// (identity carrier, carrier compatibility, composition on overlaps).
struct PaVerification {
  bool structure_ok = false;  // domains match carriers and maps are bijections
  Json structure_witness;
  bool axioms_ok = false;  // route one
  Json axioms_witness;
  bool family_ok = false;  // route two
  Json family_witness;

  bool valid() const { return structure_ok && axioms_ok && family_ok; }

  // Structural verdict plus both routes, as a single report.
  CheckReport report() const;
  // The equivalence of the two routes as a checked statement.
  CheckReport equivalence_report() const;
};

PaVerification verify_pa(const PartialAction& pa);

// Throws errc::validation when verify_pa does not pass.
void require_valid(const PartialAction& pa);

CheckReport verify_global(const GlobalAction& ga);

// Every carrier open and every theta_g a homeomorphism between the carrier
// subspaces.
CheckReport is_topological(const PartialAction& pa);

// Continuity of the joint map from the subspace of defined pairs to X.
CheckReport is_continuous_pa(const PartialAction& pa);

// Carriers all equal to X and thetas total.
bool is_global_action(const PartialAction& pa);

struct DomainTopology {
  bool open = false;
  bool closed = false;
};

// Openness and closedness of the set of defined pairs in the pair space,
// computed both there and carrier-by-carrier; the two routes must agree.
DomainTopology domain_topology(const PartialAction& pa);

// Restriction of a global action to an open subset: X_g = s and g.s
// intersected, theta_g the restriction of the action map. s must be open and
// nonempty.
PartialAction restrict_action(const GlobalAction& ga, const PointSet& s);

PartialAction to_partial(const GlobalAction& ga);

struct RandomLimits {
  int max_group = 8;
  int max_space = 8;
};

// Deterministic seeded instance generator. Draws a catalog group, assembles a
// global action on a space built from orbit blocks (cosets of a random
// subgroup crossed with a random repaired finite space), draws a random open
// subset and restricts to it. Always yields a valid topological instance;
// identical seeds and limits give identical instances.
PartialAction random_pa(std::uint64_t seed, const RandomLimits& limits = {});

}  // namespace pact

#endif
