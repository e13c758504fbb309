#ifndef PACT_TESTS_MUTATE_HPP
#define PACT_TESTS_MUTATE_HPP

#include "pact/actions.hpp"

// Targeted ways to damage a valid partial action, one axiom at a time. Each
// helper returns a copy; the caller asserts on the specific failure.
namespace pact::mutate {

// Sends two carrier points to the same image. Needs a g whose carrier holds
// at least two points.
inline PartialAction squash_bijection(PartialAction pa, int g) {
  const int gin = pa.group.inv(g);
  const auto pts = pa.carrier[gin].members();
  pa.theta[g][pts[1]] = pa.theta[g][pts[0]];
  return pa;
}

// Shrinks the identity carrier, violating the axiom that the identity acts
// everywhere.
inline PartialAction shrink_identity(PartialAction pa) {
  const int e = pa.group.identity();
  const int p = pa.carrier[e].members().front();
  pa.carrier[e].reset(p);
  pa.theta[e][p] = -1;
  return pa;
}

// Redirects the identity map at one point while keeping it a bijection.
inline PartialAction twist_identity(PartialAction pa) {
  const int e = pa.group.identity();
  const auto pts = pa.carrier[e].members();
  pa.theta[e][pts[0]] = pts[1];
  pa.theta[e][pts[1]] = pts[0];
  return pa;
}

// Swaps the images of two points of one theta, which keeps every structural
// property but breaks composition against the other group elements whenever
// the action genuinely mixes.
inline PartialAction swap_images(PartialAction pa, int g) {
  const int gin = pa.group.inv(g);
  const auto pts = pa.carrier[gin].members();
  std::swap(pa.theta[g][pts[0]], pa.theta[g][pts[1]]);
  return pa;
}

// Adds a point to one carrier without extending the map, so the domain no
// longer matches the carrier.
inline PartialAction widen_carrier(PartialAction pa, int g, int extra) {
  pa.carrier[g].set(extra);
  return pa;
}

}  // namespace pact::mutate

#endif
