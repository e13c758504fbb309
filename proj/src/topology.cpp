#include "pact/topology.hpp"

#include <algorithm>
#include <queue>

namespace pact {

namespace {

std::unordered_map<std::string, int> build_index(
    const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> idx;
  idx.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = idx.emplace(labels[i], static_cast<int>(i));
    if (!inserted)
      fail(errc::validation, "duplicate point label \"" + labels[i] + "\"");
  }
  return idx;
}

}  // namespace

FinSpace FinSpace::wrap(std::vector<std::string> labels,
                        std::vector<PointSet> nbhd) {
  auto d = std::make_shared<Data>();
  d->index = build_index(labels);
  d->labels = std::move(labels);
  d->nbhd = std::move(nbhd);
  FinSpace s;
  s.d_ = std::move(d);
  return s;
}

FinSpace FinSpace::from_min_basis(std::vector<std::string> labels,
                                  std::vector<PointSet> min_nbhd) {
  if (labels.empty()) fail(errc::empty_carrier, "space has no points");
  if (labels.size() != min_nbhd.size())
    fail(errc::validation, "one minimal neighborhood required per point");
  const std::size_t n = labels.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (min_nbhd[p].universe() != n)
      fail(errc::validation, "neighborhood of \"" + labels[p] +
                                 "\" indexes a different universe");
    if (!min_nbhd[p].test(p))
      fail(errc::validation,
           "minimal neighborhood of \"" + labels[p] + "\" does not contain it");
  }
  for (std::size_t p = 0; p < n; ++p) {
    bool ok = true;
    int bad = -1;
    min_nbhd[p].for_each([&](int q) {
      if (!min_nbhd[q].is_subset_of(min_nbhd[p])) {
        ok = false;
        if (bad < 0) bad = q;
      }
    });
    if (!ok)
      fail(errc::validation, "basis not downward closed: \"" + labels[bad] +
                                 "\" lies in the neighborhood of \"" +
                                 labels[p] + "\" but its own neighborhood " +
                                 "is not contained in it");
  }
  return wrap(std::move(labels), std::move(min_nbhd));
}

FinSpace FinSpace::from_subbasis(const std::vector<std::string>& labels,
                                 const std::vector<PointSet>& generators) {
  if (labels.empty()) fail(errc::empty_carrier, "space has no points");
  const std::size_t n = labels.size();
  std::vector<PointSet> nbhd(n);
  for (std::size_t p = 0; p < n; ++p) {
    PointSet u = PointSet::full_set(n);
    for (const PointSet& g : generators) {
      if (g.universe() != n)
        fail(errc::validation, "generator indexes a different universe");
      if (g.test(p)) u &= g;
    }
    nbhd[p] = u;
  }
  return wrap(labels, std::move(nbhd));
}

FinSpace FinSpace::discrete(std::vector<std::string> labels) {
  if (labels.empty()) fail(errc::empty_carrier, "space has no points");
  const std::size_t n = labels.size();
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (std::size_t p = 0; p < n; ++p) nbhd.push_back(PointSet::single(n, p));
  return wrap(std::move(labels), std::move(nbhd));
}

FinSpace FinSpace::indiscrete(std::vector<std::string> labels) {
  if (labels.empty()) fail(errc::empty_carrier, "space has no points");
  const std::size_t n = labels.size();
  std::vector<PointSet> nbhd(n, PointSet::full_set(n));
  return wrap(std::move(labels), std::move(nbhd));
}

const std::vector<std::string>& FinSpace::labels() const {
  static const std::vector<std::string> none;
  return d_ ? d_->labels : none;
}

int FinSpace::index_of(std::string_view label) const {
  if (!d_) return -1;
  auto it = d_->index.find(std::string(label));
  return it == d_->index.end() ? -1 : it->second;
}

std::string FinSpace::set_label(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out += ",";
    out += label(p);
    first = false;
  });
  out += "}";
  return out;
}

bool is_open(const FinSpace& X, const PointSet& s) {
  bool open = true;
  s.for_each([&](int p) {
    if (!X.nbhd(p).is_subset_of(s)) open = false;
  });
  return open;
}

bool is_closed(const FinSpace& X, const PointSet& s) {
  return closure(X, s) == s;
}

PointSet closure(const FinSpace& X, const PointSet& s) {
  PointSet out(X.size());
  for (std::size_t p = 0; p < X.size(); ++p)
    if (X.nbhd(static_cast<int>(p)).intersects(s)) out.set(p);
  return out;
}

PointSet interior(const FinSpace& X, const PointSet& s) {
  PointSet out(X.size());
  s.for_each([&](int p) {
    if (X.nbhd(p).is_subset_of(s)) out.set(p);
  });
  return out;
}

PointSet open_hull(const FinSpace& X, const PointSet& s) {
  PointSet out(X.size());
  s.for_each([&](int p) { out |= X.nbhd(p); });
  return out;
}

bool is_connected(const FinSpace& X, const PointSet& s) {
  if (s.none()) fail(errc::empty_set, "connectivity undefined on empty set");
  std::vector<int> pts = s.members();
  const int start = pts[0];
  PointSet seen(X.size());
  seen.set(start);
  std::queue<int> work;
  work.push(start);
  while (!work.empty()) {
    int p = work.front();
    work.pop();
    for (int q : pts) {
      if (seen.test(q)) continue;
      if (X.nbhd(p).test(q) || X.nbhd(q).test(p)) {
        seen.set(q);
        work.push(q);
      }
    }
  }
  return seen == (seen & s) && seen.count() == s.count();
}

SeparationFlags separation(const FinSpace& X) {
  SeparationFlags f;
  const std::size_t n = X.size();
  f.t0 = true;
  f.t1 = true;
  f.hausdorff = true;
  f.regular = true;
  for (std::size_t p = 0; p < n; ++p) {
    if (X.nbhd(p).count() != 1) f.t1 = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (X.nbhd(p) == X.nbhd(q)) f.t0 = false;
      if (X.nbhd(p).intersects(X.nbhd(q))) {
        f.hausdorff = false;
        if (!X.nbhd(p).test(q)) f.regular = false;
      }
    }
  }
  return f;
}

FinSpace product(const FinSpace& A, const FinSpace& B) {
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  if (n == 0) fail(errc::empty_carrier, "product of an empty space");
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back("(" + A.label(static_cast<int>(i)) + "," +
                       B.label(static_cast<int>(j)) + ")");
      PointSet u(n);
      A.nbhd(static_cast<int>(i)).for_each([&](int a) {
        B.nbhd(static_cast<int>(j)).for_each([&](int b) {
          u.set(static_cast<std::size_t>(a) * nb + static_cast<std::size_t>(b));
        });
      });
      nbhd.push_back(std::move(u));
    }
  return FinSpace::wrap(std::move(labels), std::move(nbhd));
}

FinSpace subspace(const FinSpace& X, const PointSet& s) {
  std::vector<int> pts = s.members();
  std::vector<int> pos(X.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    pos[pts[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  std::vector<PointSet> nbhd;
  nbhd.reserve(pts.size());
  for (int p : pts) {
    labels.push_back(X.label(p));
    PointSet u(pts.size());
    (X.nbhd(p) & s).for_each([&](int q) { u.set(pos[q]); });
    nbhd.push_back(std::move(u));
  }
  return FinSpace::wrap(std::move(labels), std::move(nbhd));
}

FinSpace quotient(const FinSpace& X, const std::vector<int>& class_of,
                  const std::vector<std::string>& class_labels) {
  const std::size_t n = X.size();
  if (class_of.size() != n)
    fail(errc::not_a_partition, "class assignment size differs from space");
  int k = 0;
  for (int c : class_of) {
    if (c < 0) fail(errc::not_a_partition, "negative class id");
    k = std::max(k, c + 1);
  }
  std::vector<PointSet> preimage(k, PointSet(n));
  for (std::size_t p = 0; p < n; ++p) preimage[class_of[p]].set(p);
  for (int c = 0; c < k; ++c)
    if (preimage[c].none())
      fail(errc::not_a_partition,
           "class " + std::to_string(c) + " has no members");
  if (!class_labels.empty() && class_labels.size() != static_cast<size_t>(k))
    fail(errc::not_a_partition, "one label required per class");

  std::vector<std::string> labels(k);
  for (int c = 0; c < k; ++c)
    labels[c] =
        class_labels.empty() ? X.label(preimage[c].first()) : class_labels[c];

  // Least saturated open superset of each class, then its image downstairs.
  std::vector<PointSet> nbhd;
  nbhd.reserve(k);
  for (int c = 0; c < k; ++c) {
    PointSet t = preimage[c];
    for (;;) {
      PointSet grown = open_hull(X, t);
      PointSet saturated(n);
      for (int cc = 0; cc < k; ++cc)
        if (preimage[cc].intersects(grown)) saturated |= preimage[cc];
      if (saturated == t) break;
      t = std::move(saturated);
    }
    PointSet u(k);
    for (int cc = 0; cc < k; ++cc)
      if (preimage[cc].intersects(t)) u.set(cc);
    nbhd.push_back(std::move(u));
  }
  return FinSpace::wrap(std::move(labels), std::move(nbhd));
}

PointMap PointMap::total(FinSpace source, FinSpace target,
                         std::vector<int> fwd) {
  return partial(std::move(source), std::move(target), std::move(fwd),
                 PointSet::full_set(fwd.size()));
}

PointMap PointMap::partial(FinSpace source, FinSpace target,
                           std::vector<int> fwd, PointSet domain) {
  if (fwd.size() != source.size())
    fail(errc::validation, "map table size differs from source space");
  if (domain.universe() != source.size())
    fail(errc::validation, "map domain indexes a different universe");
  for (std::size_t p = 0; p < fwd.size(); ++p) {
    const bool in_dom = domain.test(p);
    if (in_dom && (fwd[p] < 0 || fwd[p] >= static_cast<int>(target.size())))
      fail(errc::foreign_point,
           "image of \"" + source.label(static_cast<int>(p)) +
               "\" is outside the target space");
    if (!in_dom) fwd[p] = -1;
  }
  PointMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.fwd = std::move(fwd);
  m.domain = std::move(domain);
  return m;
}

PointSet PointMap::image_of(const PointSet& s) const {
  PointSet out(target.size());
  (s & domain).for_each([&](int p) { out.set(fwd[p]); });
  return out;
}

PointSet PointMap::preimage_of(const PointSet& s) const {
  PointSet out(source.size());
  domain.for_each([&](int p) {
    if (s.test(fwd[p])) out.set(p);
  });
  return out;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (!same_topology(f.target, g.source))
    fail(errc::validation, "composition domains do not match");
  std::vector<int> fwd(f.source.size(), -1);
  PointSet dom(f.source.size());
  f.domain.for_each([&](int p) {
    int q = f.fwd[p];
    if (g.domain.test(q)) {
      fwd[p] = g.fwd[q];
      dom.set(p);
    }
  });
  return PointMap::partial(f.source, g.target, std::move(fwd), std::move(dom));
}

namespace {

// View a partial map as a total map between the subspaces it connects.
struct TotalView {
  FinSpace src;
  FinSpace tgt;
  std::vector<int> fwd;  // src index -> tgt index
};

TotalView as_total(const PointMap& f) {
  TotalView v;
  if (f.is_total()) {
    v.src = f.source;
    v.tgt = f.target;
    v.fwd = f.fwd;
    return v;
  }
  v.src = subspace(f.source, f.domain);
  v.tgt = f.target;
  std::vector<int> pts = f.domain.members();
  v.fwd.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) v.fwd[i] = f.fwd[pts[i]];
  return v;
}

bool continuous(const TotalView& v) {
  // f(U_p) subset of U_f(p), pointwise form of "preimages of basic opens are
  // open".
  for (std::size_t p = 0; p < v.src.size(); ++p) {
    const PointSet& up = v.src.nbhd(static_cast<int>(p));
    const PointSet& uq = v.tgt.nbhd(v.fwd[p]);
    bool ok = true;
    up.for_each([&](int r) {
      if (!uq.test(v.fwd[r])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool open_map(const TotalView& v) {
  for (std::size_t p = 0; p < v.src.size(); ++p) {
    PointSet img(v.tgt.size());
    v.src.nbhd(static_cast<int>(p)).for_each([&](int r) { img.set(v.fwd[r]); });
    if (!is_open(v.tgt, img)) return false;
  }
  return true;
}

bool injective(const TotalView& v) {
  PointSet seen(v.tgt.size());
  for (int q : v.fwd) {
    if (seen.test(q)) return false;
    seen.set(q);
  }
  return true;
}

}  // namespace

bool is_continuous(const PointMap& f) { return continuous(as_total(f)); }

bool is_open_map(const PointMap& f) { return open_map(as_total(f)); }

bool is_injective(const PointMap& f) { return injective(as_total(f)); }

bool is_bijective(const PointMap& f) {
  TotalView v = as_total(f);
  return injective(v) && v.fwd.size() == v.tgt.size();
}

bool is_homeomorphism(const PointMap& f) {
  TotalView v = as_total(f);
  if (!injective(v) || v.fwd.size() != v.tgt.size()) return false;
  return continuous(v) && open_map(v);
}

bool is_embedding(const PointMap& f) {
  TotalView v = as_total(f);
  if (!injective(v)) return false;
  PointSet img(v.tgt.size());
  for (int q : v.fwd) img.set(q);
  TotalView onto;
  onto.src = v.src;
  onto.tgt = subspace(v.tgt, img);
  onto.fwd.resize(v.fwd.size());
  std::vector<int> pos(v.tgt.size(), -1);
  {
    std::vector<int> pts = img.members();
    for (std::size_t i = 0; i < pts.size(); ++i)
      pos[pts[i]] = static_cast<int>(i);
  }
  for (std::size_t p = 0; p < v.fwd.size(); ++p) onto.fwd[p] = pos[v.fwd[p]];
  return continuous(onto) && open_map(onto);
}

}  // namespace pact
