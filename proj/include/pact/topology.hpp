#ifndef PACT_TOPOLOGY_HPP
#define PACT_TOPOLOGY_HPP

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pact/bitset.hpp"
#include "pact/errors.hpp"

namespace pact {

// Finite topological space given by its minimal-neighborhood basis: point p
// carries the least open set U_p containing it. A family {U_p} is a valid
// basis iff p in U_p and q in U_p implies U_q subset of U_p. All other
// topological notions are derived from the basis.
//
// Immutable; copies share storage.
class FinSpace {
 public:
  FinSpace() = default;

  // Validates the basis axioms; throws errc::validation with a witness.
  static FinSpace from_min_basis(std::vector<std::string> labels,
                                 std::vector<PointSet> min_nbhd);

  // Topology generated by an arbitrary family of subsets: U_p is the
  // intersection of every generator containing p (the whole space when none
  // does).
  static FinSpace from_subbasis(const std::vector<std::string>& labels,
                                const std::vector<PointSet>& generators);

  static FinSpace discrete(std::vector<std::string> labels);
  static FinSpace indiscrete(std::vector<std::string> labels);

  std::size_t size() const { return d_ ? d_->labels.size() : 0; }
  const std::vector<std::string>& labels() const;
  const std::string& label(int p) const { return data().labels.at(p); }
  // -1 when absent.
  int index_of(std::string_view label) const;
  const PointSet& nbhd(int p) const { return data().nbhd.at(p); }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full_set(size()); }

  // Renders a subset as "{a,b}" in point order.
  std::string set_label(const PointSet& s) const;

  // Same labels in the same order carrying identical minimal neighborhoods.
  friend bool same_topology(const FinSpace& a, const FinSpace& b) {
    if (a.d_ == b.d_) return true;
    if (a.size() != b.size()) return false;
    return a.data().labels == b.data().labels && a.data().nbhd == b.data().nbhd;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<PointSet> nbhd;
    std::unordered_map<std::string, int> index;
  };

  const Data& data() const {
    assert(d_);
    return *d_;
  }

  static FinSpace wrap(std::vector<std::string> labels,
                       std::vector<PointSet> nbhd);

  std::shared_ptr<const Data> d_;

  friend FinSpace subspace(const FinSpace&, const PointSet&);
  friend FinSpace product(const FinSpace&, const FinSpace&);
  friend FinSpace quotient(const FinSpace&, const std::vector<int>&,
                           const std::vector<std::string>&);
};

struct SeparationFlags {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  bool regular = false;
};

bool is_open(const FinSpace& X, const PointSet& s);
bool is_closed(const FinSpace& X, const PointSet& s);
PointSet closure(const FinSpace& X, const PointSet& s);
PointSet interior(const FinSpace& X, const PointSet& s);
// Least open superset (union of the members' minimal neighborhoods).
PointSet open_hull(const FinSpace& X, const PointSet& s);

// Connectivity of the comparability graph on s: p ~ q iff one lies in the
// minimal neighborhood of the other. s must be nonempty.
bool is_connected(const FinSpace& X, const PointSet& s);

// t0: distinct points have distinct minimal neighborhoods. t1: every minimal
// neighborhood is a singleton. hausdorff: distinct points have disjoint
// minimal neighborhoods (for finite spaces this coincides with t1, i.e. the
// space is discrete). regular: every point and disjoint closed set are
// separated by disjoint opens; on a minimal basis this reduces to
// "U_p meets U_q only if q lies in U_p".
SeparationFlags separation(const FinSpace& X);

// Product topology; point (i,j) is stored at index i * |B| + j with label
// "(a,b)".
FinSpace product(const FinSpace& A, const FinSpace& B);

// Subspace on s; minimal neighborhoods are intersected with s. Labels are
// kept, so indices into the result differ from indices into the parent.
FinSpace subspace(const FinSpace& X, const PointSet& s);

// Quotient by the partition class_of: point index -> class id 0..k-1 (every
// class nonempty). The minimal neighborhood of a class is the image of the
// least saturated open superset of its preimage, computed as a fixpoint of
// open_hull followed by saturation. Class labels default to the label of the
// least member.
FinSpace quotient(const FinSpace& X, const std::vector<int>& class_of,
                  const std::vector<std::string>& class_labels = {});

// Map between finite spaces, possibly defined only on `domain`.
struct PointMap {
  FinSpace source;
  FinSpace target;
  std::vector<int> fwd;  // index into target, -1 outside domain
  PointSet domain;

  static PointMap total(FinSpace source, FinSpace target,
                        std::vector<int> fwd);
  static PointMap partial(FinSpace source, FinSpace target,
                          std::vector<int> fwd, PointSet domain);

  bool is_total() const { return domain == PointSet::full_set(source.size()); }
  int operator()(int p) const { return fwd.at(p); }

  PointSet image_of(const PointSet& s) const;
  PointSet preimage_of(const PointSet& s) const;
  PointSet image() const { return image_of(domain); }
};

PointMap compose(const PointMap& g, const PointMap& f);

// Predicates for total maps. A partial map is interpreted as a total map from
// the subspace on its domain.
bool is_continuous(const PointMap& f);
bool is_open_map(const PointMap& f);
bool is_injective(const PointMap& f);
bool is_bijective(const PointMap& f);
bool is_homeomorphism(const PointMap& f);
// Injective, and a homeomorphism onto the subspace carried by its image.
bool is_embedding(const PointMap& f);

}  // namespace pact

#endif
