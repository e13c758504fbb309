#ifndef PACT_GROUPS_HPP
#define PACT_GROUPS_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pact/topology.hpp"

namespace pact {

// Finite group given by its full multiplication table. Construction verifies
// the axioms (closure, two-sided identity, associativity, inverses) and
// reports a witness on failure. Immutable; copies share storage.
class FinGroup {
 public:
  FinGroup() = default;

  // table[g][h] = index of g*h.
  static FinGroup from_table(std::vector<std::string> elements,
                             std::vector<std::vector<int>> table);

  static FinGroup trivial();
  // Elements "0".."n-1", addition mod n.
  static FinGroup cyclic(int n);
  // Elements "1","a","b","c"; every element is its own inverse, ab = c.
  static FinGroup klein4();
  // Permutations of {1..n} in lexicographic order, labeled by one-line words
  // ("213" sends 1 to 2, 2 to 1, 3 to 3). n must be at most 4.
  static FinGroup symmetric(int n);

  std::size_t order() const { return d_ ? d_->elements.size() : 0; }
  const std::vector<std::string>& elements() const { return data().elements; }
  const std::string& label(int g) const { return data().elements.at(g); }
  int index_of(std::string_view label) const;

  int mul(int g, int h) const { return data().table[g][h]; }
  int inv(int g) const { return data().inv[g]; }
  int identity() const { return data().identity; }

  // The group as a discrete finite space, for forming pair spaces.
  FinSpace discrete_space() const { return FinSpace::discrete(elements()); }

  friend bool same_group(const FinGroup& a, const FinGroup& b) {
    if (a.d_ == b.d_) return true;
    if (a.order() != b.order()) return false;
    return a.data().elements == b.data().elements &&
           a.data().table == b.data().table;
  }

 private:
  struct Data {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;
    std::vector<int> inv;
    int identity = 0;
  };

  const Data& data() const {
    assert(d_);
    return *d_;
  }

  std::shared_ptr<const Data> d_;
};

// All subgroups, each as a sorted list of element indices, in a deterministic
// order. Intended for small groups; cost grows as 2^|G|.
std::vector<std::vector<int>> subgroups(const FinGroup& g);

}  // namespace pact

#endif
