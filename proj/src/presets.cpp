#include "qgate/presets.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qgate {

ParameterPreset ParameterPreset::uniform() { return ParameterPreset{}; }

ParameterPreset ParameterPreset::huckel() {
  ParameterPreset p;
  p.name = "huckel";
  p.alpha_C = 0.0;
  p.alpha_N = -2.7;
  p.alpha_S = -4.05;
  p.beta_single = -2.4;
  p.beta_double = -2.7;
  p.beta_triple = -3.0;
  p.beta_aromatic = -2.55;
  p.beta_NC = -1.08;
  p.beta_SC = -2.16;
  return p;
}

ParameterPreset preset_by_name(std::string_view name) {
  if (name == "uniform") {
    return ParameterPreset::uniform();
  }
  if (name == "huckel") {
    return ParameterPreset::huckel();
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() { return {"uniform", "huckel"}; }

std::vector<std::string> preset_violations(const ParameterPreset& p) {
  std::vector<std::string> out;
  const std::pair<const char*, double> couplings[] = {
      {"beta_single", p.beta_single}, {"beta_double", p.beta_double},
      {"beta_triple", p.beta_triple}, {"beta_aromatic", p.beta_aromatic},
      {"beta_NC", p.beta_NC},         {"beta_SC", p.beta_SC},
  };
  for (const auto& [field, value] : couplings) {
    if (!(value < 0.0)) {
      out.push_back(std::string(field) + " = " + std::to_string(value) +
                    " must be negative");
    }
  }
  return out;
}

void validate_preset(const ParameterPreset& p) {
  const auto violations = preset_violations(p);
  if (violations.empty()) {
    return;
  }
  std::string msg = "preset '" + p.name + "' fails coupling-sign validation:";
  for (const auto& v : violations) {
    msg += " " + v + ";";
  }
  throw std::invalid_argument(msg);
}

ParameterPreset preset_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ParameterPreset p;
  if (j.contains("base")) {
    p = preset_by_name(j.at("base").get<std::string>());
  }
  p.name = j.value("name", p.name);
  p.alpha_C = j.value("alpha_C", p.alpha_C);
  p.alpha_N = j.value("alpha_N", p.alpha_N);
  p.alpha_S = j.value("alpha_S", p.alpha_S);
  p.beta_single = j.value("beta_single", p.beta_single);
  p.beta_double = j.value("beta_double", p.beta_double);
  p.beta_triple = j.value("beta_triple", p.beta_triple);
  p.beta_aromatic = j.value("beta_aromatic", p.beta_aromatic);
  p.beta_NC = j.value("beta_NC", p.beta_NC);
  p.beta_SC = j.value("beta_SC", p.beta_SC);
  return p;
}

std::string preset_to_json(const ParameterPreset& p) {
  nlohmann::json j = {
      {"name", p.name},
      {"alpha_C", p.alpha_C},
      {"alpha_N", p.alpha_N},
      {"alpha_S", p.alpha_S},
      {"beta_single", p.beta_single},
      {"beta_double", p.beta_double},
      {"beta_triple", p.beta_triple},
      {"beta_aromatic", p.beta_aromatic},
      {"beta_NC", p.beta_NC},
      {"beta_SC", p.beta_SC},
  };
  return j.dump(2);
}

}  // namespace qgate
