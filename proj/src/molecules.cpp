#include "qgate/molecules.hpp"

#include <stdexcept>

namespace qgate {

std::vector<int> third_generation_bits(ThirdGenerationTree which) {
  switch (which) {
    case ThirdGenerationTree::A: return {0, 1, 0, 1, 1, 1, 1, 1};
    case ThirdGenerationTree::B: return {0, 1, 1, 1, 1, 1, 1, 1};
    case ThirdGenerationTree::C: return {0, 1, 1, 1, 0, 1, 1, 1};
  }
  return {};
}

ThirdGenerationTree third_generation_from_string(const std::string& s) {
  if (s == "a" || s == "A") return ThirdGenerationTree::A;
  if (s == "b" || s == "B") return ThirdGenerationTree::B;
  if (s == "c" || s == "C") return ThirdGenerationTree::C;
  throw std::invalid_argument("unknown third-generation tree '" + s + "'");
}

Junction third_generation_molecule(ThirdGenerationTree which, const ParameterPreset& preset) {
  BuildOptions options;
  if (which != ThirdGenerationTree::C) {
    options.nitrogen = {PendantRef{0, 0}, PendantRef{3, 1}};
  }
  const auto bits = third_generation_bits(which);
  Junction j;
  j.graph = build_nand_tree(3, bits, preset, options);
  j.device.center_alpha = preset.alpha_C;
  const char* names[] = {"a", "b", "c"};
  j.description = std::string("third-generation tree (") + names[static_cast<int>(which)] + ")";
  j.graph.meta()["molecule"] = j.description;
  return j;
}

std::vector<BackboneSite> thiol_alkyne_linker(const ParameterPreset& preset) {
  return {
      BackboneSite{preset.alpha_C, preset.beta_single, "C"},
      BackboneSite{preset.alpha_C, preset.beta_triple, "C"},
      BackboneSite{preset.alpha_S, preset.beta_SC, "S"},
  };
}

Junction first_generation_molecule(int input_a, int input_b, const ParameterPreset& preset) {
  const std::vector<int> bits{input_a, input_b};
  BuildOptions options;
  for (std::size_t slot = 0; slot < bits.size(); ++slot) {
    if (bits[slot] == 0) {
      options.nitrogen.push_back(PendantRef{slot, 0});
    }
  }
  Junction j;
  j.graph = build_nand_tree(1, bits, preset, options);
  j.device.chain_pad = 0;
  j.device.backbone = thiol_alkyne_linker(preset);
  j.device.center_alpha = preset.alpha_C;
  j.description = "first-generation molecule (" + std::to_string(input_a) + "," + std::to_string(input_b) + ")";
  j.graph.meta()["molecule"] = j.description;
  return j;
}

}  // namespace qgate
