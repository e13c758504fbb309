#ifndef PACT_HARNESS_HPP
#define PACT_HARNESS_HPP

#include <map>
#include <string>
#include <vector>

#include "pact/category.hpp"
#include "pact/envelope.hpp"

namespace pact {

// Which tiers of the per-instance property suite to run. The base tier
// (dual-route validation, topology and continuity checks) always runs;
// hyperspace-dependent checkers run only when the space is small enough.
struct SuiteOptions {
  bool envelope = true;
  int lift_cap = 5;     // hyperspace checkers when |X| <= lift_cap
  HyperKind kind = HyperKind::h1;
  int monad_cap = 0;    // sampled monad laws when 0 < |X| <= monad_cap
  int monad_samples = 200;
  std::uint64_t monad_seed = 0;
  HyperCaps caps;
};

struct SuiteTally {
  long long verified = 0;
  long long hypothesis_failed = 0;
  long long counterexample = 0;
};

struct SuiteOutcome {
  std::map<std::string, SuiteTally> per_check;
  std::vector<Json> counterexamples;  // full reports with their context
  long long reports = 0;

  bool clean() const { return counterexamples.empty(); }
  void add(const CheckReport& r, const Json& context);
  Json to_json() const;
};

// Runs every checker applicable to the instance and accumulates the
// verdicts. `context` is attached to recorded counterexamples (seed number,
// fixture name).
void run_property_suite(const PartialAction& pa, const SuiteOptions& opts,
                        SuiteOutcome& out, const Json& context);

}  // namespace pact

#endif
