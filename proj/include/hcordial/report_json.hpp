#pragma once

// JSON mapping for verification reports (nlohmann/json ADL hooks).

#include <json.hpp>

#include "hcordial/labeling.hpp"

namespace hcordial {

void to_json(nlohmann::json& j, const LabelingKind& kind);
void from_json(const nlohmann::json& j, LabelingKind& kind);

void to_json(nlohmann::json& j, const Tally& t);
void from_json(const nlohmann::json& j, Tally& t);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

}  // namespace hcordial
