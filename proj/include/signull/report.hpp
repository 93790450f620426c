#ifndef SIGNULL_REPORT_HPP
#define SIGNULL_REPORT_HPP

// JSON report documents. Keys are emitted in sorted order and the elapsed
// time is left out unless asked for, so identical invocations produce
// byte-identical documents.

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "signull/graph_io.hpp"
#include "signull/recognizers.hpp"
#include "signull/reductions.hpp"
#include "signull/verification.hpp"

namespace signull {

inline constexpr std::string_view kToolName = "signull";
inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::json;

inline Json sign_string(const SwitchingFunction& theta) {
  std::string s;
  for (Sign x : theta.signs) s.push_back(to_char(x));
  return s;
}

inline Json to_json(const BicyclicBase& b) {
  return Json{{"kind", b.kind == BaseKind::infinity ? "infinity" : "theta"},
              {"p", b.p},
              {"q", b.q},
              {"l", b.l},
              {"name", b.name()},
              {"base_vertices", b.base_vertices}};
}

inline Json to_json(const RankClassVerdict& v) {
  Json j{{"matches", v.matches}, {"reason", std::string(to_string(v.reason))}};
  if (v.matches) j["parts"] = v.parts;
  if (v.theta) j["theta"] = sign_string(*v.theta);
  if (!v.neighborhoods.empty()) {
    Json parts = Json::array();
    for (const auto& part : v.neighborhoods) {
      Json rows = Json::array();
      for (const auto& nb : part) {
        rows.push_back({{"vertex", nb.vertex},
                        {"positive", nb.positive},
                        {"negative", nb.negative},
                        {"orientation", std::string(1, to_char(nb.orientation))}});
      }
      parts.push_back(std::move(rows));
    }
    j["neighborhoods"] = std::move(parts);
  }
  return j;
}

inline Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    if (const auto* d = std::get_if<PendantDeletion>(&step)) {
      steps.push_back({{"op", "delete-pendant-pair"}, {"pendant", d->pendant}, {"neighbor", d->neighbor}});
    } else if (const auto* s = std::get_if<SwitchingStep>(&step)) {
      steps.push_back({{"op", "switch"}, {"theta", sign_string(s->theta)}});
    } else {
      const auto& c = std::get<PathContraction>(step);
      steps.push_back({{"op", "contract-special-path"},
                       {"path", {c.path.v1, c.path.v2, c.path.v3}},
                       {"merged", c.merged},
                       {"mapping", c.mapping}});
    }
  }
  return steps;
}

inline Json to_json(const TheoremReport& r, bool with_timing = false) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {{"order", v.order}, {"message", v.message}, {"witness", serialize_graph(v.witness)}});
  }
  Json j{{"theorem", r.theorem_id},
         {"orders_checked", r.orders_checked},
         {"instances_checked", r.instances_checked},
         {"violations", std::move(violations)},
         {"counters", r.counters},
         {"ok", r.ok()}};
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline Json to_json(const NullityCatalog& cat) {
  Json entries = Json::array();
  for (const auto& e : cat.entries) {
    Json sigs = Json::array();
    for (const auto& s : e.signatures) {
      sigs.push_back({{"profile", profile_string(s.profile)},
                      {"balanced", s.balanced},
                      {"witness", serialize_graph(s.witness)}});
    }
    entries.push_back({{"code", e.code.hex()},
                       {"base", to_json(e.base)},
                       {"switching_classes_achieving", e.switching_classes_achieving},
                       {"signatures", std::move(sigs)}});
  }
  return Json{{"order", cat.order},
              {"k", cat.k},
              {"nullity", cat.nullity_class()},
              {"balanced_only", cat.balanced_only},
              {"entry_count", cat.entries.size()},
              {"entries", std::move(entries)}};
}

// Wraps a body with the tool identity and a digest of the input.
inline Json report_document(std::string_view kind, std::string_view input, Json body) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"kind", kind},
              {"input_digest", "fnv1a64:" + fnv1a64_hex(input)},
              {"body", std::move(body)}};
}

inline std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace signull

#endif  // SIGNULL_REPORT_HPP
