#pragma once

#include <string>
#include <vector>

#include "qgate/builders.hpp"
#include "qgate/negf.hpp"
#include "qgate/presets.hpp"

namespace qgate {

/// A tree graph together with the backbone that joins it to the electrodes.
struct Junction {
  TightBindingGraph graph;
  DeviceOptions device;
  std::string description;

  DeviceRegion make(const LeadModel& lead) const { return make_device(graph, lead, device); }
};

/// Third-generation trees with a carbon backbone.
///   A: inputs 01 01 11 11, nitrogen on the bit-0 site of slot 0 and the
///      terminal site of slot 3; final output 1.
///   B: as A with slot 2 switched to bit 1; final output 0.
///   C: inputs 01 11 01 11, all carbon; final output 0.
enum class ThirdGenerationTree { A, B, C };

std::vector<int> third_generation_bits(ThirdGenerationTree which);
ThirdGenerationTree third_generation_from_string(const std::string& s);
Junction third_generation_molecule(ThirdGenerationTree which,
                                   const ParameterPreset& preset = ParameterPreset::huckel());

/// First-generation NAND molecule between two S-C#C- linkers. Single-site
/// (bit 0) inputs are nitrogen terminals.
Junction first_generation_molecule(int input_a, int input_b,
                                   const ParameterPreset& preset = ParameterPreset::huckel());

/// Thiol-alkyne linker listed from the central carbon outwards.
std::vector<BackboneSite> thiol_alkyne_linker(const ParameterPreset& preset);

}  // namespace qgate
