#include "pact/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "pact/errors.hpp"

namespace pact {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  fail(errc::parse, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    parse_fail(path, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int point_index(const FinSpace& x, const Json& j, const std::string& path) {
  const std::string label = as_string(j, path);
  const int p = x.index_of(label);
  if (p < 0) parse_fail(path, "unknown point \"" + label + "\"");
  return p;
}

PointSet point_set(const FinSpace& x, const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of points");
  PointSet s(x.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    s.set(point_index(x, j[i], path + "[" + std::to_string(i) + "]"));
  }
  return s;
}

int group_index(const FinGroup& g, const std::string& label,
                const std::string& path) {
  const int gi = g.index_of(label);
  if (gi < 0) parse_fail(path, "unknown group element \"" + label + "\"");
  return gi;
}

}  // namespace

FinGroup group_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  if (j.contains("named")) {
    const std::string name = as_string(j["named"], path + ".named");
    if (name == "trivial") return FinGroup::trivial();
    if (name == "klein4") return FinGroup::klein4();
    if (name == "cyclic") {
      return FinGroup::cyclic(as_int(field(j, "n", path), path + ".n"));
    }
    if (name == "sym") {
      return FinGroup::symmetric(as_int(field(j, "n", path), path + ".n"));
    }
    parse_fail(path + ".named",
               "unknown group name \"" + name +
                   "\" (expected trivial, cyclic, klein4 or sym)");
  }
  std::vector<std::string> elements =
      string_list(field(j, "elements", path), path + ".elements");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<int>(i)).second) {
      parse_fail(path + ".elements", "duplicate element \"" + elements[i] + "\"");
    }
  }
  const Json& rows = field(j, "table", path);
  if (!rows.is_array() || rows.size() != elements.size()) {
    parse_fail(path + ".table", "expected one row per element");
  }
  std::vector<std::vector<int>> table(elements.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string row_path = path + ".table[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != elements.size()) {
      parse_fail(row_path, "expected one entry per element");
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string cell_path = row_path + "[" + std::to_string(c) + "]";
      const std::string label = as_string(rows[r][c], cell_path);
      const auto it = index.find(label);
      if (it == index.end()) {
        parse_fail(cell_path, "unknown element \"" + label + "\"");
      }
      table[r].push_back(it->second);
    }
  }
  return FinGroup::from_table(std::move(elements), std::move(table));
}

FinSpace space_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  std::vector<std::string> points =
      string_list(field(j, "points", path), path + ".points");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], static_cast<int>(i)).second) {
      parse_fail(path + ".points", "duplicate point \"" + points[i] + "\"");
    }
  }
  const bool has_basis = j.contains("min_nbhd");
  const bool has_subbasis = j.contains("subbasis");
  if (has_basis == has_subbasis) {
    parse_fail(path, "expected exactly one of \"min_nbhd\" and \"subbasis\"");
  }
  if (has_subbasis) {
    const Json& gens = j["subbasis"];
    const std::string gens_path = path + ".subbasis";
    if (!gens.is_array()) parse_fail(gens_path, "expected an array of sets");
    FinSpace shape = FinSpace::discrete(points);
    std::vector<PointSet> generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      generators.push_back(
          point_set(shape, gens[i], gens_path + "[" + std::to_string(i) + "]"));
    }
    return FinSpace::from_subbasis(points, generators);
  }
  const Json& basis = j["min_nbhd"];
  const std::string basis_path = path + ".min_nbhd";
  if (!basis.is_object()) parse_fail(basis_path, "expected an object");
  FinSpace shape = FinSpace::discrete(points);
  std::vector<PointSet> nbhd(points.size(), PointSet(points.size()));
  std::vector<bool> seen(points.size(), false);
  for (const auto& [key, value] : basis.items()) {
    const auto it = index.find(key);
    if (it == index.end()) {
      parse_fail(basis_path, "unknown point \"" + key + "\"");
    }
    nbhd[it->second] = point_set(shape, value, basis_path + "." + key);
    seen[it->second] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen[i]) {
      parse_fail(basis_path, "missing neighborhood for point \"" + points[i] + "\"");
    }
  }
  return FinSpace::from_min_basis(std::move(points), std::move(nbhd));
}

namespace {

PartialAction partial_from_json(const Json& j, const FinGroup& group,
                                const FinSpace& space) {
  const int order = static_cast<int>(group.order());
  const int n = static_cast<int>(space.size());
  PartialAction pa;
  pa.group = group;
  pa.space = space;
  pa.carrier.assign(order, PointSet(space.size()));
  pa.theta.assign(order, std::vector<int>(n, -1));

  std::vector<bool> carrier_given(order, false);
  if (j.contains("carriers")) {
    const Json& carriers = j["carriers"];
    if (!carriers.is_object()) parse_fail("$.carriers", "expected an object");
    for (const auto& [key, value] : carriers.items()) {
      const int g = group_index(group, key, "$.carriers");
      pa.carrier[g] = point_set(space, value, "$.carriers." + key);
      carrier_given[g] = true;
    }
  }
  const int e = group.identity();
  if (!carrier_given[e]) pa.carrier[e] = space.full_set();

  std::vector<bool> theta_given(order, false);
  if (j.contains("theta")) {
    const Json& theta = j["theta"];
    if (!theta.is_object()) parse_fail("$.theta", "expected an object");
    for (const auto& [key, value] : theta.items()) {
      const int g = group_index(group, key, "$.theta");
      const std::string map_path = "$.theta." + key;
      if (!value.is_object()) parse_fail(map_path, "expected an object");
      for (const auto& [from, to] : value.items()) {
        const int x = space.index_of(from);
        if (x < 0) parse_fail(map_path, "unknown point \"" + from + "\"");
        pa.theta[g][x] = point_index(space, to, map_path + "." + from);
      }
      theta_given[g] = true;
    }
  }
  if (!theta_given[e]) {
    for (int x = 0; x < n; ++x) {
      pa.theta[e][x] = pa.carrier[e].test(x) ? x : -1;
    }
  }
  return pa;
}

GlobalAction global_from_json(const Json& j, const FinGroup& group,
                              const FinSpace& space) {
  const int order = static_cast<int>(group.order());
  const int n = static_cast<int>(space.size());
  GlobalAction ga;
  ga.group = group;
  ga.space = space;
  ga.act.assign(order, std::vector<int>(n, -1));
  const Json& act = j["act"];
  if (!act.is_object()) parse_fail("$.act", "expected an object");
  std::vector<bool> given(order, false);
  for (const auto& [key, value] : act.items()) {
    const int g = group_index(group, key, "$.act");
    const std::string map_path = "$.act." + key;
    if (!value.is_object()) parse_fail(map_path, "expected an object");
    for (const auto& [from, to] : value.items()) {
      const int x = space.index_of(from);
      if (x < 0) parse_fail(map_path, "unknown point \"" + from + "\"");
      ga.act[g][x] = point_index(space, to, map_path + "." + from);
    }
    given[g] = true;
  }
  for (int g = 0; g < order; ++g) {
    if (!given[g]) {
      parse_fail("$.act", "missing element \"" + group.label(g) + "\"");
    }
    for (int x = 0; x < n; ++x) {
      if (ga.act[g][x] < 0) {
        parse_fail("$.act." + group.label(g),
                   "missing point \"" + space.label(x) + "\"");
      }
    }
  }
  return ga;
}

}  // namespace

PartialAction Instance::action() const {
  if (partial) return *partial;
  return to_partial(*global);
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("$", "expected an object");
  Instance inst;
  inst.group = group_from_json(field(j, "group", "$"), "$.group");
  inst.space = space_from_json(field(j, "space", "$"), "$.space");
  const bool has_global = j.contains("act");
  if (has_global && (j.contains("carriers") || j.contains("theta"))) {
    parse_fail("$", "\"act\" excludes \"carriers\" and \"theta\"");
  }
  if (has_global) {
    inst.global = global_from_json(j, inst.group, inst.space);
  } else {
    inst.partial = partial_from_json(j, inst.group, inst.space);
  }
  if (j.contains("kind")) {
    const std::string name = as_string(j["kind"], "$.kind");
    try {
      inst.kind = kind_from_name(name);
    } catch (const Error&) {
      parse_fail("$.kind", "unknown hyperspace kind \"" + name + "\"");
    }
  }
  if (j.contains("checks")) {
    inst.checks = string_list(j["checks"], "$.checks");
  }
  return inst;
}

Json load_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(errc::parse, file + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(errc::parse, file + ": " + e.what());
  }
}

Instance load_instance(const std::string& file) {
  return instance_from_json(load_json(file));
}

Json group_to_json(const FinGroup& g) {
  Json out;
  out["elements"] = g.elements();
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) {
      row.push_back(g.label(g.mul(static_cast<int>(a), static_cast<int>(b))));
    }
    table.push_back(row);
  }
  out["table"] = table;
  return out;
}

namespace {

Json labels_of(const FinSpace& x, const PointSet& s) {
  Json out = Json::array();
  for (int p : s.members()) out.push_back(x.label(p));
  return out;
}

}  // namespace

Json space_to_json(const FinSpace& x) {
  Json out;
  out["points"] = x.labels();
  Json basis;
  for (std::size_t p = 0; p < x.size(); ++p) {
    basis[x.label(static_cast<int>(p))] =
        labels_of(x, x.nbhd(static_cast<int>(p)));
  }
  out["min_nbhd"] = basis;
  return out;
}

Json partial_to_json(const PartialAction& pa) {
  Json out;
  Json carriers;
  for (std::size_t g = 0; g < pa.group.order(); ++g) {
    carriers[pa.group.label(static_cast<int>(g))] =
        labels_of(pa.space, pa.carrier[g]);
  }
  out["carriers"] = carriers;
  Json theta;
  for (std::size_t g = 0; g < pa.group.order(); ++g) {
    Json entries;
    for (int x : pa.carrier[pa.group.inv(static_cast<int>(g))].members()) {
      const int y = pa.theta[g][x];
      if (y >= 0) entries[pa.space.label(x)] = pa.space.label(y);
    }
    theta[pa.group.label(static_cast<int>(g))] = entries;
  }
  out["theta"] = theta;
  return out;
}

Json global_to_json(const GlobalAction& ga) {
  Json out;
  Json act;
  for (std::size_t g = 0; g < ga.group.order(); ++g) {
    Json entries;
    for (std::size_t x = 0; x < ga.space.size(); ++x) {
      entries[ga.space.label(static_cast<int>(x))] =
          ga.space.label(ga.act[g][x]);
    }
    act[ga.group.label(static_cast<int>(g))] = entries;
  }
  out["act"] = act;
  return out;
}

Json instance_to_json(const Instance& inst) {
  Json out;
  out["group"] = group_to_json(inst.group);
  out["space"] = space_to_json(inst.space);
  if (inst.global) {
    out.update(global_to_json(*inst.global));
  } else {
    out.update(partial_to_json(*inst.partial));
  }
  if (inst.kind) out["kind"] = kind_name(*inst.kind);
  if (!inst.checks.empty()) out["checks"] = inst.checks;
  return out;
}

Json envelope_to_json(const EnvelopingSpace& env) {
  Json out;
  out["classes"] = env.space.labels();
  Json basis;
  for (std::size_t c = 0; c < env.space.size(); ++c) {
    basis[env.space.label(static_cast<int>(c))] =
        labels_of(env.space, env.space.nbhd(static_cast<int>(c)));
  }
  out["min_nbhd"] = basis;
  Json action;
  for (std::size_t g = 0; g < env.action.group.order(); ++g) {
    Json row;
    for (std::size_t c = 0; c < env.space.size(); ++c) {
      row[env.space.label(static_cast<int>(c))] =
          env.space.label(env.action.act[g][c]);
    }
    action[env.action.group.label(static_cast<int>(g))] = row;
  }
  out["action_table"] = action;
  Json iota;
  for (std::size_t x = 0; x < env.source.space.size(); ++x) {
    iota[env.source.space.label(static_cast<int>(x))] =
        env.space.label(env.iota(static_cast<int>(x)));
  }
  out["iota"] = iota;
  Json reports = Json::array();
  for (const CheckReport& r : env.reports) reports.push_back(r.to_json());
  out["reports"] = reports;
  return out;
}

std::string digest(const Json& j) {
  const nlohmann::json sorted = nlohmann::json::parse(j.dump());
  const std::string dump = sorted.dump();
  std::uint64_t hash = 1469598103934665603ull;
  for (const unsigned char c : dump) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace pact
