#pragma once

#include "json.hpp"

#include "core.hpp"
#include "oracle.hpp"
#include "structure.hpp"

namespace orthomon {

// {"i":..,"m":..,"n":..,"j":..,"type":"I"|"II"|"II*"|"III","display":..}
nlohmann::json element_json(const ReducedWord& x);

nlohmann::json params_json(const Params& p);

// {"lemma":..,"params":..,"window":..,"violations":[..],
//  "not_machine_checked":[..]} (+ "excluded" when present)
nlohmann::json report_json(const CheckReport& report);

nlohmann::json cross_check_json(const CrossCheckReport& report);

}  // namespace orthomon
