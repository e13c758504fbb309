#ifndef PACT_REPORT_HPP
#define PACT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pact {

using Json = nlohmann::ordered_json;

enum class CheckStatus { verified, hypothesis_failed, counterexample };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::hypothesis_failed: return "hypothesis-failed";
    case CheckStatus::counterexample: return "counterexample";
  }
  return "unknown";
}

// Uniform verdict for one checked statement. A checker records which
// hypotheses held, whether the conclusion held, and a witness when the
// conclusion failed. Checkers never skip silently: when hypotheses fail the
// conclusion is still computed and reported, just not asserted.
struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool conclusion = false;
  Json witness;  // null unless something concrete is worth recording

  bool hypotheses_hold() const {
    for (const auto& [name, held] : hypotheses)
      if (!held) return false;
    return true;
  }

  CheckStatus status() const {
    if (!hypotheses_hold()) return CheckStatus::hypothesis_failed;
    return conclusion ? CheckStatus::verified : CheckStatus::counterexample;
  }

  Json to_json() const {
    Json hyps = Json::array();
    for (const auto& [name, held] : hypotheses)
      hyps.push_back({{"name", name}, {"holds", held}});
    Json j;
    j["check_id"] = check_id;
    j["hypotheses"] = hyps;
    j["conclusion"] = conclusion;
    j["status"] = status_name(status());
    j["witness"] = witness.is_null() ? Json(nullptr) : witness;
    return j;
  }
};

inline CheckReport make_report(std::string id,
                               std::vector<std::pair<std::string, bool>> hyps,
                               bool conclusion, Json witness = nullptr) {
  CheckReport r;
  r.check_id = std::move(id);
  r.hypotheses = std::move(hyps);
  r.conclusion = conclusion;
  r.witness = std::move(witness);
  return r;
}

}  // namespace pact

#endif
