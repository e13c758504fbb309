#ifndef PACT_HYPERSPACE_HPP
#define PACT_HYPERSPACE_HPP

#include <memory>
#include <string_view>
#include <unordered_map>

#include "pact/actions.hpp"
#include "pact/topology.hpp"

namespace pact {

// h1: all nonempty subsets. h2: nonempty connected subsets. h3: the nonempty
// finite subsets, which over a finite base is h1 again; the kind is kept so
// reports can say which variant was requested.
enum class HyperKind { h1, h2, h3 };

const char* kind_name(HyperKind k);
HyperKind kind_from_name(std::string_view name);

struct HyperCaps {
  int full_base = 10;       // base cap when points are all subsets
  int connected_base = 16;  // base cap when points are filtered by connectivity
  int max_points = 4095;    // cap on hyperspace points
};

// Hyperspace of a finite base space. Points are subsets of the base,
// enumerated in ascending mask order; the topology is given by the minimal
// neighborhoods <U_a : a in A> = { B : B within the union of the U_a and
// meeting every U_a }, intersected with the kind's point set.
struct Hyperspace {
  FinSpace base;
  HyperKind kind = HyperKind::h1;
  FinSpace space;
  std::vector<PointSet> member;  // hyper point -> base subset

  int index_of(const PointSet& subset) const;
  // { A : A a point contained in u }, as a mask over hyper points.
  PointSet bracket(const PointSet& u) const;

  std::shared_ptr<const std::unordered_map<PointSet, int, PointSetHash>> idx;
};

Hyperspace build_hyperspace(const FinSpace& x, HyperKind kind,
                            const HyperCaps& caps = {});

// x -> {x}. Lands in every kind.
PointMap singleton_map(const Hyperspace& h);

// hh must be a hyperspace over h.space; sends a set of sets to its union.
PointMap union_map(const Hyperspace& h, const Hyperspace& hh);

// Lift of a homeomorphism between open subsets of the base: the partial map
// A -> f(A) with domain { A : A within dom f }. f is given as a partial map
// on the base; its domain and image must be open and it must restrict to a
// homeomorphism between them.
PointMap lift_homeo(const Hyperspace& h, const PointMap& f);

// Induced partial action on the hyperspace: carriers { A : A within X_g },
// maps A -> theta_g(A). pa must validate and be topological.
PartialAction lift_pa(const Hyperspace& h, const PartialAction& pa);
PartialAction lift_pa(const PartialAction& pa, HyperKind kind,
                      const HyperCaps& caps = {});

// Closedness of the set of defined pairs transfers to the lift.
CheckReport check_closed_domain_lift(const PartialAction& pa, HyperKind kind,
                                     const HyperCaps& caps = {});

// The openness / continuity / globality transfer statements for the lift,
// plus validity of the lift itself.
std::vector<CheckReport> check_lift_transfers(const PartialAction& pa,
                                              HyperKind kind,
                                              const HyperCaps& caps = {});

}  // namespace pact

#endif
