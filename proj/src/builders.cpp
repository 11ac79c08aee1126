#include "qgate/builders.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>

namespace qgate {
namespace {

double bond_beta(const ParameterPreset& preset, const BuildOptions& options, int outer_depth) {
  return (outer_depth + options.bond_phase) % 2 == 0 ? preset.beta_double : preset.beta_single;
}

bool is_nitrogen(const BuildOptions& options, std::size_t slot, int position) {
  return std::any_of(options.nitrogen.begin(), options.nitrogen.end(),
                     [&](const PendantRef& r) { return r.slot == slot && r.position == position; });
}

void check_bits(std::span<const int> bits, std::size_t expected) {
  if (bits.size() != expected) {
    throw GraphError("expected " + std::to_string(expected) + " input bits, got " +
                     std::to_string(bits.size()));
  }
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw GraphError("input bits must be 0 or 1");
    }
  }
}

std::string bits_string(std::span<const int> bits) {
  std::string s;
  for (int b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

}  // namespace

TightBindingGraph realize(const GateLayout& layout, std::span<const int> slot_bits,
                          const ParameterPreset& preset, const BuildOptions& options) {
  check_bits(slot_bits, layout.slot_count);
  TightBindingGraph g;

  // Gate nodes first, breadth-first from the root, so the root gate is id 0.
  std::vector<SiteId> gate_site(layout.gates.size(), -1);
  std::vector<int> gate_depth(layout.gates.size(), 0);
  std::vector<std::size_t> order;
  if (layout.root.kind == GateInput::Kind::Gate) {
    std::queue<std::size_t> frontier;
    frontier.push(layout.root.index);
    gate_depth[layout.root.index] = 1;
    while (!frontier.empty()) {
      const std::size_t k = frontier.front();
      frontier.pop();
      if (gate_site[k] != -1) {
        throw GraphError("gate layout is not a tree");
      }
      gate_site[k] = g.add_site(preset.alpha_C, "C");
      order.push_back(k);
      for (const GateInput& in : layout.gates.at(k)) {
        if (in.kind == GateInput::Kind::Gate) {
          gate_depth.at(in.index) = gate_depth[k] + 1;
          frontier.push(in.index);
        }
      }
    }
    for (std::size_t k : order) {
      for (const GateInput& in : layout.gates[k]) {
        if (in.kind == GateInput::Kind::Gate) {
          g.add_bond(gate_site[in.index], gate_site[k], bond_beta(preset, options, gate_depth[in.index]));
        }
      }
    }
  }

  auto add_pendant = [&](std::size_t slot, SiteId anchor, int anchor_depth) -> SiteId {
    const int length = slot_bits[slot] == 0 ? 1 : (options.bit_one_disconnected ? 0 : 2);
    SiteId prev = anchor;
    SiteId first = -1;
    bool prev_n = false;
    for (int pos = 0; pos < length; ++pos) {
      const bool nitrogen = is_nitrogen(options, slot, pos);
      const SiteId s = g.add_site(nitrogen ? preset.alpha_N : preset.alpha_C, nitrogen ? "N" : "C");
      if (prev >= 0) {
        const double beta = (nitrogen || prev_n) ? preset.beta_NC
                                                 : bond_beta(preset, options, anchor_depth + pos + 1);
        g.add_bond(s, prev, beta);
      }
      if (first < 0) {
        first = s;
      }
      prev = s;
      prev_n = nitrogen;
    }
    return first;
  };

  if (layout.root.kind == GateInput::Kind::Slot) {
    const SiteId first = add_pendant(layout.root.index, -1, 0);
    if (first < 0) {
      throw GraphError("a disconnected input cannot be the root");
    }
    g.set_root(first);
    if (g.site(first).label == "N") {
      g.set_root_coupling(preset.beta_NC);
    } else {
      g.set_root_coupling(bond_beta(preset, options, 1));
    }
  } else {
    for (std::size_t k : order) {
      for (const GateInput& in : layout.gates[k]) {
        if (in.kind == GateInput::Kind::Slot) {
          add_pendant(in.index, gate_site[k], gate_depth[k]);
        }
      }
    }
    g.set_root(gate_site[layout.root.index]);
    g.set_root_coupling(bond_beta(preset, options, 1));
  }

  g.meta()["preset"] = preset.name;
  g.meta()["bits"] = bits_string(slot_bits);
  g.meta()["gate_nodes"] = std::to_string(order.size());
  g.meta()["bond_phase"] = std::to_string(options.bond_phase);
  return g;
}

GateLayout nand_tree_layout(int depth) {
  if (depth < 1) {
    throw GraphError("NAND tree depth must be positive");
  }
  if (depth > 12) {
    throw GraphError("NAND tree depth too large");
  }
  GateLayout layout;
  const std::size_t gates = (std::size_t{1} << depth) - 1;
  const std::size_t first_leaf = (std::size_t{1} << (depth - 1)) - 1;
  layout.gates.resize(gates);
  for (std::size_t k = 0; k < first_leaf; ++k) {
    layout.gates[k] = {GateInput::gate(2 * k + 1), GateInput::gate(2 * k + 2)};
  }
  for (std::size_t k = first_leaf; k < gates; ++k) {
    const std::size_t leaf = k - first_leaf;
    layout.gates[k] = {GateInput::slot(2 * leaf), GateInput::slot(2 * leaf + 1)};
  }
  layout.slot_count = std::size_t{1} << depth;
  layout.root = GateInput::gate(0);
  return layout;
}

TightBindingGraph build_nand_tree(int depth, std::span<const int> bits, const ParameterPreset& preset,
                                  const BuildOptions& options) {
  const GateLayout layout = nand_tree_layout(depth);
  TightBindingGraph g = realize(layout, bits, preset, options);
  g.meta()["kind"] = "nand_tree";
  g.meta()["depth"] = std::to_string(depth);
  return g;
}

int gate_arity(GateKind kind) { return kind == GateKind::Not ? 1 : 2; }

GateKind gate_kind_from_string(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::toupper(c); });
  if (n == "NOT") return GateKind::Not;
  if (n == "AND") return GateKind::And;
  if (n == "OR") return GateKind::Or;
  if (n == "NAND") return GateKind::Nand;
  throw std::invalid_argument("unknown gate '" + name + "'");
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return "NOT";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Nand: return "NAND";
  }
  return "?";
}

GateLayout gate_layout(GateKind kind) {
  GateLayout layout;
  switch (kind) {
    case GateKind::Not:
      layout.gates = {{GateInput::slot(0)}};
      layout.slot_count = 1;
      break;
    case GateKind::Nand:
      layout.gates = {{GateInput::slot(0), GateInput::slot(1)}};
      layout.slot_count = 2;
      break;
    case GateKind::And:
      // NOT stage (root) fed by a NAND node.
      layout.gates = {{GateInput::gate(1)}, {GateInput::slot(0), GateInput::slot(1)}};
      layout.slot_count = 2;
      break;
    case GateKind::Or:
      // NAND of two NOT stages.
      layout.gates = {{GateInput::gate(1), GateInput::gate(2)}, {GateInput::slot(0)}, {GateInput::slot(1)}};
      layout.slot_count = 2;
      break;
  }
  layout.root = GateInput::gate(0);
  return layout;
}

TightBindingGraph build_gate(GateKind kind, std::span<const int> bits, const ParameterPreset& preset,
                             const BuildOptions& options) {
  if (static_cast<int>(bits.size()) != gate_arity(kind)) {
    throw GraphError(to_string(kind) + " takes " + std::to_string(gate_arity(kind)) + " input(s), got " +
                     std::to_string(bits.size()));
  }
  TightBindingGraph g = realize(gate_layout(kind), bits, preset, options);
  g.meta()["kind"] = to_string(kind);
  return g;
}

int evaluate_layout(const GateLayout& layout, std::span<const int> slot_bits) {
  check_bits(slot_bits, layout.slot_count);
  auto eval = [&](auto&& self, const GateInput& in) -> int {
    if (in.kind == GateInput::Kind::Slot) {
      return slot_bits[in.index];
    }
    int all = 1;
    for (const GateInput& child : layout.gates.at(in.index)) {
      all &= self(self, child);
    }
    return 1 - all;
  };
  return eval(eval, layout.root);
}

}  // namespace qgate
