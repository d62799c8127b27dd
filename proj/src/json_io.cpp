#include "json_io.hpp"

namespace orthomon {

nlohmann::json element_json(const ReducedWord& x) {
  return nlohmann::json{{"i", x.i},
                        {"m", x.m},
                        {"n", x.n},
                        {"j", x.j},
                        {"type", word_type_name(classify(x))},
                        {"display", display(x)}};
}

nlohmann::json params_json(const Params& p) {
  return nlohmann::json{{"nu", p.nu.str()}, {"mu", p.mu.str()}};
}

nlohmann::json report_json(const CheckReport& report) {
  nlohmann::json doc{{"lemma", report.lemma},
                     {"params", params_json(report.params)},
                     {"window", report.window},
                     {"violations", report.violations},
                     {"not_machine_checked", report.not_machine_checked}};
  if (!report.excluded.empty()) doc["excluded"] = report.excluded;
  return doc;
}

nlohmann::json cross_check_json(const CrossCheckReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& [w1, w2] : report.soundness_violations)
    violations.push_back(nlohmann::json::array({w1, w2}));
  return nlohmann::json{{"params", params_json(report.params)},
                        {"len_bound", report.len_bound},
                        {"words_checked", report.words_checked},
                        {"soundness_violations", violations},
                        {"reachability_failures",
                         report.reachability_failures}};
}

}  // namespace orthomon
