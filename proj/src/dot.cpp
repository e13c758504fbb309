#include "pact/dot.hpp"

#include <unordered_map>
#include <vector>

namespace pact {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string dot_preorder(const FinSpace& x, const PointSet& highlight,
                         const std::string& name) {
  const int n = static_cast<int>(x.size());
  std::vector<int> cluster_of(n, -1);
  std::vector<std::vector<int>> members;
  std::unordered_map<PointSet, int, PointSetHash> by_nbhd;
  for (int p = 0; p < n; ++p) {
    const auto [it, fresh] =
        by_nbhd.emplace(x.nbhd(p), static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    cluster_of[p] = it->second;
    members[it->second].push_back(p);
  }
  const int k = static_cast<int>(members.size());

  const auto below = [&](int a, int b) {
    return a != b && x.nbhd(members[b][0]).test(members[a][0]);
  };

  std::string out = "digraph \"" + escape(name) + "\" {\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (int c = 0; c < k; ++c) {
    std::string label;
    for (int p : members[c]) {
      if (!label.empty()) label += "=";
      label += x.label(p);
    }
    bool lit = false;
    for (int p : members[c]) lit = lit || highlight.test(p);
    out += "  n" + std::to_string(c) + " [label=\"" + escape(label) + "\"";
    if (lit) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!below(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < k && covering; ++c) {
        if (below(a, c) && below(c, b)) covering = false;
      }
      if (covering) {
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace pact
