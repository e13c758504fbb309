#ifndef PACT_JSON_IO_HPP
#define PACT_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "pact/actions.hpp"
#include "pact/envelope.hpp"
#include "pact/hyperspace.hpp"

namespace pact {

// One instance file: a group, a space, and either a partial action (carriers
// plus theta) or a global action (act). The identity column of a partial
// action may be omitted and defaults to the full carrier with the identity
// map; other omitted carriers are empty. Optional fields pick a hyperspace
// kind and a list of checks to run.
struct Instance {
  FinGroup group;
  FinSpace space;
  std::optional<PartialAction> partial;
  std::optional<GlobalAction> global;
  std::optional<HyperKind> kind;
  std::vector<std::string> checks;

  // The partial action either way; a global action is wrapped whole.
  PartialAction action() const;
};

// Parsers throw errc::parse with the offending key path in the message.
FinGroup group_from_json(const Json& j, const std::string& path = "$.group");
FinSpace space_from_json(const Json& j, const std::string& path = "$.space");
Instance instance_from_json(const Json& j);
Json load_json(const std::string& file);
Instance load_instance(const std::string& file);

Json group_to_json(const FinGroup& g);
Json space_to_json(const FinSpace& x);
Json partial_to_json(const PartialAction& pa);
Json global_to_json(const GlobalAction& ga);
Json instance_to_json(const Instance& inst);
Json envelope_to_json(const EnvelopingSpace& env);

// FNV-1a over the key-sorted dump, as 16 hex digits; stable under key
// reordering of the input document.
std::string digest(const Json& j);

}  // namespace pact

#endif
