#ifndef PACT_TESTS_SPACES_HPP
#define PACT_TESTS_SPACES_HPP

#include <string>
#include <vector>

#include "pact/actions.hpp"
#include "pact/topology.hpp"

// Small spaces and actions shared across test files.
namespace pact::fixtures {

inline FinSpace sierpinski() {
  return FinSpace::from_min_basis({"0", "1"},
                                  {PointSet::of(2, {0, 1}), PointSet::of(2, {1})});
}

inline FinSpace discrete3() { return FinSpace::discrete({"a", "b", "c"}); }

// Alternating circle: odd points open, even points glued to both neighbors.
inline FinSpace khalimsky12() {
  std::vector<std::string> labels;
  std::vector<PointSet> nbhd;
  for (int p = 0; p < 12; ++p) labels.push_back(std::to_string(p));
  for (int p = 0; p < 12; ++p) {
    if (p % 2 == 1) {
      nbhd.push_back(PointSet::single(12, p));
    } else {
      nbhd.push_back(PointSet::of(12, {(p + 11) % 12, p, (p + 1) % 12}));
    }
  }
  return FinSpace::from_min_basis(labels, nbhd);
}

// The three-point chain a < b with isolated c; not T1, not regular.
inline FinSpace chain3() {
  return FinSpace::from_min_basis(
      {"a", "b", "c"},
      {PointSet::of(3, {0}), PointSet::of(3, {0, 1}), PointSet::of(3, {2})});
}

// Z2 on discrete {a,b,c}; the non-identity element swaps a and b on the
// carrier {a,b} and is undefined at c.
inline PartialAction swap_action() {
  PartialAction pa;
  pa.group = FinGroup::cyclic(2);
  pa.space = discrete3();
  pa.carrier = {pa.space.full_set(), PointSet::of(3, {0, 1})};
  pa.theta = {{0, 1, 2}, {1, 0, -1}};
  return pa;
}

// Z4 on the 12-point circle, restricted to three arcs; theta_1 is the half
// turn from {3,4,5} onto {9,10,11}, theta_2 the identity on {1,7}.
inline PartialAction kh12_action() {
  PartialAction pa;
  pa.group = FinGroup::cyclic(4);
  pa.space = khalimsky12();
  pa.carrier = {pa.space.full_set(), PointSet::of(12, {9, 10, 11}),
                PointSet::of(12, {1, 7}), PointSet::of(12, {3, 4, 5})};
  pa.theta.assign(4, std::vector<int>(12, -1));
  for (int p = 0; p < 12; ++p) pa.theta[0][p] = p;
  for (int p : {3, 4, 5}) pa.theta[1][p] = (p + 6) % 12;
  for (int p : {1, 7}) pa.theta[2][p] = p;
  for (int p : {9, 10, 11}) pa.theta[3][p] = (p + 6) % 12;
  return pa;
}

// Z2 on Sierpinski; the non-identity element fixes the open point.
inline PartialAction sierpinski_action() {
  PartialAction pa;
  pa.group = FinGroup::cyclic(2);
  pa.space = sierpinski();
  pa.carrier = {pa.space.full_set(), PointSet::of(2, {1})};
  pa.theta = {{0, 1}, {-1, 1}};
  return pa;
}

}  // namespace pact::fixtures

#endif
