#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "pact/dot.hpp"
#include "pact/errors.hpp"
#include "pact/harness.hpp"
#include "pact/json_io.hpp"

namespace {

using namespace pact;

constexpr const char* kTool = "pact 0.1.0";

int exit_code_for(errc kind) {
  switch (kind) {
    case errc::usage:
    case errc::unknown_check:
      return 1;
    default:
      return 2;
  }
}

struct Timer {
  bool enabled = false;
  Json rows = Json::array();

  template <class F>
  auto run(const std::string& name, F&& f) {
    if (!enabled) return f();
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const auto stop = std::chrono::steady_clock::now();
    Json row;
    row["name"] = name;
    row["ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(std::move(row));
    return result;
  }
};

Json shell_for(const std::string& command) {
  Json j;
  j["tool"] = kTool;
  j["command"] = command;
  return j;
}

void attach_reports(Json& shell, const std::vector<CheckReport>& reports) {
  Json arr = Json::array();
  long long verified = 0, failed_hypothesis = 0, counterexamples = 0;
  for (const CheckReport& r : reports) {
    arr.push_back(r.to_json());
    switch (r.status()) {
      case CheckStatus::verified: ++verified; break;
      case CheckStatus::hypothesis_failed: ++failed_hypothesis; break;
      case CheckStatus::counterexample: ++counterexamples; break;
    }
  }
  shell["reports"] = std::move(arr);
  Json summary;
  summary["verified"] = verified;
  summary["hypothesis-failed"] = failed_hypothesis;
  summary["counterexample"] = counterexamples;
  shell["summary"] = std::move(summary);
}

int emit(Json& shell, const Timer& timer) {
  if (timer.enabled) shell["timings"] = timer.rows;
  std::cout << shell.dump(2) << "\n";
  const auto& summary = shell["summary"];
  if (!summary.is_null() && summary["counterexample"].get<long long>() > 0) {
    return 3;
  }
  return 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::usage, "cannot write to " + path);
  out << text;
}

// Structural reports shared by `validate` and the validity gate of the other
// commands.
std::vector<CheckReport> structural_reports(const Instance& inst,
                                            const PartialAction& pa) {
  PaVerification verification = verify_pa(pa);
  std::vector<CheckReport> reports;
  reports.push_back(verification.report());
  reports.push_back(verification.equivalence_report());
  if (inst.global) reports.push_back(verify_global(*inst.global));
  reports.push_back(is_topological(pa));
  reports.push_back(is_continuous_pa(pa));
  return reports;
}

bool structurally_valid(const Instance& inst, const PartialAction& pa) {
  if (!verify_pa(pa).valid()) return false;
  if (inst.global &&
      verify_global(*inst.global).status() != CheckStatus::verified) {
    return false;
  }
  return true;
}

// Prints the validation report and returns true when the command should stop
// with exit code 2.
bool validity_gate(Json& shell, const Instance& inst, const PartialAction& pa) {
  if (structurally_valid(inst, pa)) return false;
  attach_reports(shell, structural_reports(inst, pa));
  std::cout << shell.dump(2) << "\n";
  return true;
}

HyperKind pick_kind(const CLI::Option* flag, const std::string& flag_value,
                    const Instance& inst) {
  if (flag->count() > 0) return kind_from_name(flag_value);
  if (inst.kind) return *inst.kind;
  return HyperKind::h1;
}

std::vector<CheckReport> run_check(const std::string& id,
                                   const PartialAction& pa, HyperKind kind,
                                   const MonadOptions& mo,
                                   const HyperCaps& caps) {
  if (id == "prop2.3") return {verify_pa(pa).equivalence_report()};
  if (id == "thm3.2") return check_lift_transfers(pa, kind, caps);
  if (id == "prop3.5") return {check_closed_domain_lift(pa, kind, caps)};
  if (id == "lemma-l1") return {theta_embedding(pa, kind, caps).report};
  if (id == "lemma-l2") return {check_l2(pa, kind, caps)};
  if (id == "thm-equivh") return {check_equivh(pa, kind, caps)};
  if (id == "prop-fin") return check_fin(pa, caps);
  if (id == "thm-regu") return {check_regu(pa, kind, caps)};
  if (id == "monad") return {check_monad_laws(pa, mo, caps)};
  fail(errc::unknown_check, "unknown check id \"" + id + "\" (try `pact list`)");
}

const std::vector<std::pair<const char*, const char*>> kCheckCatalog = {
    {"prop2.3",
     "the axioms for the partially defined map and the conditions on the "
     "bijection family give the same validity verdict"},
    {"thm3.2",
     "lifting a topological partial action to the hyperspace preserves "
     "validity and transfers open defined-pair domains, joint continuity "
     "and globality"},
    {"prop3.5", "a closed defined-pair domain stays closed under the lift"},
    {"lemma-l1",
     "sending a class [g,x] to [g,{x}] embeds the envelope of the base "
     "action into the envelope of the lift"},
    {"lemma-l2",
     "closedness of the pair-gluing relation transfers to the lifted "
     "relation"},
    {"thm-equivh",
     "the envelope of the base action is Hausdorff exactly when the "
     "envelope of the lift is"},
    {"prop-fin",
     "a T1 envelope forces a T1 envelope of the finite-subsets lift; the "
     "converse is reported alongside"},
    {"thm-regu",
     "a jointly continuous action with closed defined-pair domain on a "
     "regular space has regular envelopes at both levels"},
    {"monad",
     "the singleton and union maps on lifts satisfy the unit and "
     "associativity laws"},
};

FinGroup group_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  int n = 0;
  if (colon != std::string::npos) {
    try {
      n = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      fail(errc::usage, "bad group parameter in \"" + spec + "\"");
    }
  }
  if (name == "trivial") return FinGroup::trivial();
  if (name == "klein4") return FinGroup::klein4();
  if (name == "cyclic" && n > 0) return FinGroup::cyclic(n);
  if (name == "sym" && n > 0) return FinGroup::symmetric(n);
  fail(errc::usage,
       "unknown group spec \"" + spec +
           "\" (expected trivial, klein4, cyclic:N or sym:N)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for topological partial group actions"};
  app.require_subcommand(1);

  std::string file;
  std::string dot_path;
  std::string kind_value = "h1";
  std::string check_id;
  std::string space_file;
  std::string group_spec;
  int samples = 10000;
  int fuzz_samples = 200;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool timings = false;
  int seeds = 100;
  int max_space = 5;
  int max_group = 4;
  int lift_cap = 5;
  int monad_cap = 4;

  CLI::App* validate = app.add_subcommand(
      "validate", "verify the structure of an instance file");
  validate->add_option("file", file, "instance file")->required();
  validate->add_flag("--timings", timings, "include wall-clock timings");

  CLI::App* globalize_cmd = app.add_subcommand(
      "globalize", "build the enveloping action and run its check suite");
  globalize_cmd->add_option("file", file, "instance file")->required();
  globalize_cmd->add_option("--dot", dot_path,
                            "write the envelope specialization preorder here");
  globalize_cmd->add_flag("--timings", timings, "include wall-clock timings");

  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "lift the action to the hyperspace and emit it as an instance");
  lift_cmd->add_option("file", file, "instance file")->required();
  CLI::Option* lift_kind =
      lift_cmd->add_option("--kind", kind_value, "hyperspace kind")
          ->check(CLI::IsMember({"h1", "h2", "h3"}));
  lift_cmd->add_option("--dot", dot_path,
                       "write the hyperspace specialization preorder here");
  lift_cmd->add_flag("--timings", timings, "include wall-clock timings");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "run one named checker (or the file's check list)");
  check_cmd->add_option("file", file, "instance file")->required();
  check_cmd->add_option("id", check_id, "check id (see `pact list`)");
  CLI::Option* check_kind =
      check_cmd->add_option("--kind", kind_value, "hyperspace kind")
          ->check(CLI::IsMember({"h1", "h2", "h3"}));
  check_cmd->add_option("--samples", samples, "sample count for monad laws");
  check_cmd->add_option("--seed", seed, "sampling seed");
  check_cmd->add_flag("--exhaustive", exhaustive,
                      "force materialized towers for monad laws");
  check_cmd->add_flag("--timings", timings, "include wall-clock timings");

  CLI::App* monad_cmd = app.add_subcommand(
      "monad", "check the unit and associativity laws on the lift tower");
  monad_cmd->add_option("file", file, "instance file");
  monad_cmd->add_option("--space", space_file,
                        "space file (used with --group instead of an instance)");
  monad_cmd->add_option("--group", group_spec,
                        "group spec: trivial, klein4, cyclic:N, sym:N");
  monad_cmd->add_option("--samples", samples, "sample count in sampled mode");
  monad_cmd->add_option("--seed", seed, "sampling seed");
  monad_cmd->add_flag("--exhaustive", exhaustive,
                      "force materialized towers");
  monad_cmd->add_flag("--timings", timings, "include wall-clock timings");

  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "run the property suite over seeded random instances");
  fuzz_cmd->add_option("--seeds", seeds, "number of seeded instances");
  fuzz_cmd->add_option("--max-space", max_space, "space size limit");
  fuzz_cmd->add_option("--max-group", max_group, "group order limit");
  fuzz_cmd->add_option("--lift-cap", lift_cap,
                       "space size limit for hyperspace checkers");
  CLI::Option* fuzz_kind =
      fuzz_cmd->add_option("--kind", kind_value, "hyperspace kind")
          ->check(CLI::IsMember({"h1", "h2", "h3"}));
  fuzz_cmd->add_option("--monad-cap", monad_cap,
                       "space size limit for sampled monad laws");
  fuzz_cmd->add_option("--samples", fuzz_samples,
                       "monad samples per instance (sampled mode)");
  fuzz_cmd->add_option("--seed", seed, "monad sampling seed");

  CLI::App* list_cmd =
      app.add_subcommand("list", "list the available check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Timer timer;
    timer.enabled = timings;

    if (list_cmd->parsed()) {
      Json shell = shell_for("list");
      Json checks = Json::array();
      for (const auto& [id, description] : kCheckCatalog) {
        Json row;
        row["id"] = id;
        row["description"] = description;
        checks.push_back(std::move(row));
      }
      shell["checks"] = std::move(checks);
      std::cout << shell.dump(2) << "\n";
      return 0;
    }

    if (fuzz_cmd->parsed()) {
      if (seeds <= 0 || max_space <= 0 || max_group <= 0) {
        fail(errc::usage, "fuzz bounds must be positive");
      }
      Json shell = shell_for("fuzz");
      Json family;
      family["seeds"] = seeds;
      family["max_space"] = max_space;
      family["max_group"] = max_group;
      shell["family"] = std::move(family);

      SuiteOptions opts;
      opts.lift_cap = lift_cap;
      opts.kind = fuzz_kind->count() > 0 ? kind_from_name(kind_value)
                                         : HyperKind::h1;
      opts.monad_cap = monad_cap;
      opts.monad_samples = fuzz_samples;
      opts.monad_seed = seed;

      SuiteOutcome outcome;
      for (int s = 0; s < seeds; ++s) {
        PartialAction pa = random_pa(static_cast<std::uint64_t>(s),
                                     {max_group, max_space});
        Json context;
        context["seed"] = s;
        run_property_suite(pa, opts, outcome, context);
      }
      shell["suite"] = outcome.to_json();
      Json summary;
      long long verified = 0, failed_hypothesis = 0, counterexamples = 0;
      for (const auto& [id, tally] : outcome.per_check) {
        verified += tally.verified;
        failed_hypothesis += tally.hypothesis_failed;
        counterexamples += tally.counterexample;
      }
      summary["verified"] = verified;
      summary["hypothesis-failed"] = failed_hypothesis;
      summary["counterexample"] = counterexamples;
      shell["summary"] = std::move(summary);
      std::cout << shell.dump(2) << "\n";
      return outcome.clean() ? 0 : 3;
    }

    if (monad_cmd->parsed()) {
      PartialAction pa = [&] {
        if (!file.empty()) return load_instance(file).action();
        if (space_file.empty() || group_spec.empty()) {
          fail(errc::usage, "monad needs an instance file or --space/--group");
        }
        FinSpace space = space_from_json(load_json(space_file), "$");
        FinGroup group = group_from_spec(group_spec);
        GlobalAction ga;
        ga.group = group;
        ga.space = space;
        std::vector<int> id_map(space.size());
        for (std::size_t x = 0; x < space.size(); ++x) {
          id_map[x] = static_cast<int>(x);
        }
        ga.act.assign(group.order(), id_map);
        return to_partial(ga);
      }();
      Json shell = shell_for("monad");
      shell["instance"] = digest(partial_to_json(pa));
      Instance inst;
      inst.group = pa.group;
      inst.space = pa.space;
      inst.partial = pa;
      if (validity_gate(shell, inst, pa)) return 2;
      MonadOptions mo;
      mo.exhaustive = exhaustive;
      mo.samples = samples;
      mo.seed = seed;
      std::vector<CheckReport> reports = timer.run(
          "monad", [&] { return run_check("monad", pa, HyperKind::h1, mo,
                                          HyperCaps{}); });
      attach_reports(shell, reports);
      return emit(shell, timer);
    }

    Instance inst = load_instance(file);
    PartialAction pa = inst.action();
    const std::string inst_digest = digest(instance_to_json(inst));

    if (validate->parsed()) {
      Json shell = shell_for("validate");
      shell["instance"] = inst_digest;
      std::vector<CheckReport> reports =
          timer.run("structure", [&] { return structural_reports(inst, pa); });
      const DomainTopology dom = domain_topology(pa);
      Json domain;
      domain["open"] = dom.open;
      domain["closed"] = dom.closed;
      shell["domain"] = std::move(domain);
      shell["global"] = is_global_action(pa);
      attach_reports(shell, reports);
      emit(shell, timer);
      return structurally_valid(inst, pa) ? 0 : 2;
    }

    if (globalize_cmd->parsed()) {
      Json shell = shell_for("globalize");
      shell["instance"] = inst_digest;
      if (validity_gate(shell, inst, pa)) return 2;
      EnvelopingSpace env =
          timer.run("globalize", [&] { return globalize(pa); });
      shell.update(envelope_to_json(env));
      std::vector<CheckReport> reports = env.reports;
      reports.push_back(timer.run(
          "relation-closed", [&] { return check_relation_closed(pa); }));
      attach_reports(shell, reports);
      if (!dot_path.empty()) {
        const PointSet embedded = env.iota.image_of(pa.space.full_set());
        write_file(dot_path, dot_preorder(env.space, embedded, "envelope"));
      }
      return emit(shell, timer);
    }

    if (lift_cmd->parsed()) {
      Json shell = shell_for("lift");
      shell["instance"] = inst_digest;
      if (validity_gate(shell, inst, pa)) return 2;
      const HyperKind kind = pick_kind(lift_kind, kind_value, inst);
      shell["kind"] = kind_name(kind);
      Hyperspace h = build_hyperspace(pa.space, kind, HyperCaps{});
      PartialAction lifted =
          timer.run("lift", [&] { return lift_pa(h, pa); });
      Instance lifted_inst;
      lifted_inst.group = lifted.group;
      lifted_inst.space = lifted.space;
      lifted_inst.partial = lifted;
      shell["lifted"] = instance_to_json(lifted_inst);
      std::vector<CheckReport> reports = timer.run("transfers", [&] {
        return check_lift_transfers(pa, kind, HyperCaps{});
      });
      reports.push_back(timer.run("closed-domain", [&] {
        return check_closed_domain_lift(pa, kind, HyperCaps{});
      }));
      attach_reports(shell, reports);
      if (!dot_path.empty()) {
        write_file(dot_path,
                   dot_preorder(lifted.space, lifted.space.empty_set(),
                                "hyperspace"));
      }
      return emit(shell, timer);
    }

    if (check_cmd->parsed()) {
      Json shell = shell_for("check");
      shell["instance"] = inst_digest;
      if (validity_gate(shell, inst, pa)) return 2;
      std::vector<std::string> ids;
      if (!check_id.empty()) {
        ids.push_back(check_id);
      } else if (!inst.checks.empty()) {
        ids = inst.checks;
      } else {
        fail(errc::usage,
             "no check id given and the instance lists no checks");
      }
      const HyperKind kind = pick_kind(check_kind, kind_value, inst);
      MonadOptions mo;
      mo.exhaustive = exhaustive;
      mo.samples = samples;
      mo.seed = seed;
      std::vector<CheckReport> reports;
      for (const std::string& id : ids) {
        std::vector<CheckReport> batch = timer.run(
            id, [&] { return run_check(id, pa, kind, mo, HyperCaps{}); });
        for (CheckReport& r : batch) reports.push_back(std::move(r));
      }
      attach_reports(shell, reports);
      return emit(shell, timer);
    }

    fail(errc::usage, "no command given");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
