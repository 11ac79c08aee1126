#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qgate {

/// Site energies and coupling elements (eV) used by the graph builders.
///
/// `uniform` is the idealised model (alpha = 0, beta = -1 everywhere);
/// `huckel` carries literature Hueckel values for a conjugated pi-system.
struct ParameterPreset {
  std::string name = "uniform";

  double alpha_C = 0.0;
  double alpha_N = 0.0;
  double alpha_S = 0.0;

  double beta_single = -1.0;    // C-C
  double beta_double = -1.0;    // C=C
  double beta_triple = -1.0;    // C#C
  double beta_aromatic = -1.0;  // C...C
  double beta_NC = -1.0;
  double beta_SC = -1.0;

  static ParameterPreset uniform();
  static ParameterPreset huckel();
};

/// Looks up a shipped preset by name. Throws std::invalid_argument.
ParameterPreset preset_by_name(std::string_view name);

std::vector<std::string> preset_names();

/// Gate construction requires every coupling to be strictly negative.
/// Returns one message per offending field; empty means valid.
std::vector<std::string> preset_violations(const ParameterPreset& p);

/// Throws std::invalid_argument listing every violation.
void validate_preset(const ParameterPreset& p);

/// JSON object with the field names above.
ParameterPreset preset_from_json(const std::string& text);
std::string preset_to_json(const ParameterPreset& p);

}  // namespace qgate
