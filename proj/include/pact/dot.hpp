#ifndef PACT_DOT_HPP
#define PACT_DOT_HPP

#include <string>

#include "pact/topology.hpp"

namespace pact {

// DOT rendering of the specialization preorder: q sits below p when q lies
// in the minimal neighborhood of p. Topologically indistinguishable points
// are merged into one node labeled "a=b"; edges are the covering relations
// of the induced order, drawn bottom-up. Nodes meeting `highlight` are
// filled.
std::string dot_preorder(const FinSpace& x, const PointSet& highlight,
                         const std::string& name = "space");

}  // namespace pact

#endif
