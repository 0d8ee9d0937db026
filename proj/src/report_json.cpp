#include "hcordial/report_json.hpp"

namespace hcordial {

namespace {

// Tally keys are arbitrary integers, so counts are stored as [value, count] pairs.
nlohmann::json counts_to_json(const std::map<std::int64_t, std::size_t>& counts) {
  auto arr = nlohmann::json::array();
  for (const auto& [value, count] : counts) arr.push_back({value, count});
  return arr;
}

std::map<std::int64_t, std::size_t> counts_from_json(const nlohmann::json& j) {
  std::map<std::int64_t, std::size_t> out;
  for (const auto& pair : j) out[pair.at(0).get<std::int64_t>()] = pair.at(1).get<std::size_t>();
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const LabelingKind& kind) {
  j = nlohmann::json{{"name", kind.name()}, {"k", kind.k}};
  switch (kind.family) {
    case LabelingKind::Family::HCordial: j["family"] = "h"; break;
    case LabelingKind::Family::SemiHCordial: j["family"] = "semi-h"; break;
    case LabelingKind::Family::ZeroMCordial: j["family"] = "zero-m"; break;
    case LabelingKind::Family::HkCordial: j["family"] = "hk"; break;
  }
}

void from_json(const nlohmann::json& j, LabelingKind& kind) {
  kind = parse_kind(j.at("family").get<std::string>(), j.at("k").get<int>());
}

void to_json(nlohmann::json& j, const Tally& t) {
  j = nlohmann::json{{"edges", counts_to_json(t.edges)}, {"vertices", counts_to_json(t.vertices)}};
}

void from_json(const nlohmann::json& j, Tally& t) {
  t.edges = counts_from_json(j.at("edges"));
  t.vertices = counts_from_json(j.at("vertices"));
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  auto violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"condition", v.condition}, {"detail", v.detail}});
  }
  j = nlohmann::json{{"kind", r.kind},
                     {"valid", r.valid},
                     {"tally", r.tally},
                     {"K", r.k_value ? nlohmann::json(*r.k_value) : nlohmann::json(nullptr)},
                     {"violations", violations}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.kind = j.at("kind").get<LabelingKind>();
  r.valid = j.at("valid").get<bool>();
  r.tally = j.at("tally").get<Tally>();
  const auto& k = j.at("K");
  r.k_value = k.is_null() ? std::nullopt : std::optional<VertexValue>(k.get<VertexValue>());
  r.violations.clear();
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("condition").get<std::string>(), v.at("detail").get<std::string>()});
  }
}

}  // namespace hcordial
