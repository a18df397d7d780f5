#pragma once

#include <string>

#include <json.hpp>

#include "logchern/bundle.hpp"
#include "logchern/closed_forms.hpp"
#include "logchern/oracle.hpp"

namespace logchern {

// {"rank":"3","D":3,"ch":{"1":"3*e1","2":"1/2*e1^2 + 4*e2"}} over e1..eD.
nlohmann::ordered_json character_to_json(const BundleCharacter& a);
BundleCharacter character_from_json(const nlohmann::ordered_json& doc);

// "ch_0 = 3" then one "ch_k = ..." line per degree.
std::string character_to_text(const BundleCharacter& a);

nlohmann::ordered_json discrepancy_to_json(const Discrepancy& d);
nlohmann::ordered_json record_to_json(const VerificationRecord& rec);
// {cases, passed, failed, failures, discrepancies, observations}
nlohmann::ordered_json sweep_to_json(const SweepReport& report);
std::string sweep_to_text(const SweepReport& report, const std::vector<std::string>& whitelist);

nlohmann::ordered_json hc_to_json(const HcShiftReport& report);

}  // namespace logchern
