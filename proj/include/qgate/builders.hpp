#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qgate/graph.hpp"
#include "qgate/presets.hpp"

namespace qgate {

/// An input of a gate node: either another gate node or a pendant slot that
/// is realised as a short path encoding one logical bit.
struct GateInput {
  enum class Kind { Gate, Slot };
  Kind kind = Kind::Gate;
  std::size_t index = 0;

  static GateInput gate(std::size_t i) { return {Kind::Gate, i}; }
  static GateInput slot(std::size_t i) { return {Kind::Slot, i}; }
  friend bool operator==(const GateInput&, const GateInput&) = default;
};

/// Topology of a gate network before input bits are chosen. Gate nodes with
/// two inputs act as NAND, gate nodes with one input as NOT.
struct GateLayout {
  std::vector<std::vector<GateInput>> gates;
  std::size_t slot_count = 0;
  GateInput root = GateInput::gate(0);

  std::size_t gate_count() const { return gates.size(); }
};

/// Addresses one pendant site: `position` 0 is the site bonded to the gate
/// node, 1 the terminal site of a two-node pendant.
struct PendantRef {
  std::size_t slot = 0;
  int position = 0;
};

struct BuildOptions {
  /// Realise bit 1 as a missing pendant instead of a two-node path.
  bool bit_one_disconnected = false;
  /// Bond alternation phase. A bond whose outer site sits at depth d (root
  /// depth 1) is double when (d + phase) is even, single otherwise.
  int bond_phase = 0;
  /// Pendant sites realised as nitrogen (alpha_N, beta_NC to neighbours).
  std::vector<PendantRef> nitrogen;
};

/// Builds the tight-binding graph of a layout for one choice of slot bits.
/// Gate nodes get ids 0..gate_count-1 in breadth-first order from the root;
/// pendant sites follow in slot order. Throws GraphError on bad bits.
TightBindingGraph realize(const GateLayout& layout, std::span<const int> slot_bits,
                          const ParameterPreset& preset, const BuildOptions& options = {});

/// Perfect binary tree of 2^depth - 1 gate nodes; slots 2k, 2k+1 feed the
/// k-th leaf gate node (left to right).
GateLayout nand_tree_layout(int depth);

TightBindingGraph build_nand_tree(int depth, std::span<const int> bits,
                                  const ParameterPreset& preset,
                                  const BuildOptions& options = {});

enum class GateKind { Not, And, Or, Nand };

int gate_arity(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);
std::string to_string(GateKind kind);
GateLayout gate_layout(GateKind kind);

TightBindingGraph build_gate(GateKind kind, std::span<const int> bits,
                             const ParameterPreset& preset, const BuildOptions& options = {});

/// Classical value of a layout: two-input gate nodes compute NAND, one-input
/// nodes NOT, slots pass their bit through.
int evaluate_layout(const GateLayout& layout, std::span<const int> slot_bits);

}  // namespace qgate
