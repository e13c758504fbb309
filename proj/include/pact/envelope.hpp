#ifndef PACT_ENVELOPE_HPP
#define PACT_ENVELOPE_HPP

#include <optional>

#include "pact/category.hpp"
#include "pact/hyperspace.hpp"

namespace pact {

// Equivalence relation on pairs (g,x) identifying (g,x) with (h, theta(x))
// whenever x lies in the right carrier: (g,x) ~ (h,y) iff x is in X_{g^-1 h}
// and theta_{h^-1 g}(x) = y. Always evaluated from the action; the class
// decomposition is stored over pair indices g*|X|+x.
struct PairRelation {
  PartialAction pa;
  std::vector<int> class_of;  // pair index -> class id
  std::vector<int> class_rep;  // class id -> least pair index

  bool related(int g, int x, int h, int y) const {
    const int c = pa.group.mul(pa.group.inv(g), h);
    if (!pa.carrier[c].test(x)) return false;
    return pa.apply(pa.group.mul(pa.group.inv(h), g), x) == y;
  }
};

struct RelationResult {
  PairRelation rel;
  CheckReport equivalence;  // reflexivity, symmetry, transitivity
};

RelationResult build_relation(const PartialAction& pa);

// The enveloping construction: quotient of the pair space by the relation,
// the translation action on classes, and the canonical maps into it.
struct EnvelopingSpace {
  PartialAction source;
  FinSpace pairs;             // product(discrete(G), X)
  std::vector<int> class_of;  // pair index -> class id
  FinSpace space;             // the quotient, labeled "[g,x]" by least reps
  GlobalAction action;        // g.[h,x] = [gh,x]
  PointMap iota;              // x -> [e,x]
  PointMap quot;              // (g,x) -> [g,x]
  std::vector<CheckReport> reports;

  int class_index(int g, int x) const {
    return class_of[g * static_cast<int>(source.space.size()) + x];
  }
};

// Builds the envelope and runs the full suite of structural checks on it
// (relation equivalence, action well-definedness and continuity, openness of
// the projection, injectivity and embedding behavior of iota, orbit coverage,
// and equivalence of the restricted action with the original one).
EnvelopingSpace globalize(const PartialAction& pa);

// The morphism from the source action onto the restriction of the enveloping
// action to the embedded copy of the space. Absent when that copy is not an
// open subspace or the source is not topological.
std::optional<GMap> restriction_morphism(const EnvelopingSpace& env);

// Closedness of the pair relation inside the square of the pair space,
// computed without materializing the square: the relation restricted to a
// group-element pair is a partial point map, so the basic-neighborhood test
// reduces to image/neighborhood intersections. The action must verify.
// On failure the witness, when given, receives the offending tuple.
bool relation_closed(const PartialAction& pa, Json* witness = nullptr);

// Relation closedness compared against separation of the envelope (for open
// projections the two are equivalent).
CheckReport check_relation_closed(const PartialAction& pa);

// Closedness of the relation transfers to the lifted relation.
CheckReport check_l2(const PartialAction& pa, HyperKind kind,
                     const HyperCaps& caps = {});

// The envelope of the base and the envelope of the lift agree on being
// Hausdorff.
CheckReport check_equivh(const PartialAction& pa, HyperKind kind,
                         const HyperCaps& caps = {});

// T1 passes from the base envelope to the lifted envelope (finite-subsets
// kind), and back.
std::vector<CheckReport> check_fin(const PartialAction& pa,
                                   const HyperCaps& caps = {});

// Joint continuity plus a closed pair domain force both envelopes regular.
CheckReport check_regu(const PartialAction& pa, HyperKind kind,
                       const HyperCaps& caps = {});

struct ThetaEmbedding {
  // Base envelope -> lift envelope, [g,x] -> [g,{x}]. Absent when the
  // action is not topological, since the lift does not exist then.
  std::optional<PointMap> map;
  CheckReport report;
};

// The canonical map between the envelopes is well defined, injective and an
// embedding.
ThetaEmbedding theta_embedding(const PartialAction& pa, HyperKind kind,
                               const HyperCaps& caps = {});

}  // namespace pact

#endif
