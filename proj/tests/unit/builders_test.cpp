#include "doctest.h"

#include <algorithm>
#include <random>

#include "qgate/builders.hpp"

using namespace qgate;

namespace {

std::size_t labelled(const TightBindingGraph& g, const std::string& label) {
  return static_cast<std::size_t>(
      std::count_if(g.sites().begin(), g.sites().end(), [&](const Site& s) { return s.label == label; }));
}

}  // namespace

TEST_CASE("smallest tree: 5 sites, 4 bonds") {
  const auto g = build_nand_tree(1, std::vector<int>{1, 1}, ParameterPreset::uniform());
  CHECK(g.size() == 5);
  CHECK(g.bonds().size() == 4);
  CHECK(g.root() == 0);
  CHECK(g.is_tree());
}

TEST_CASE("depth-3 tree with all input pairs") {
  const std::vector<int> bits{0, 0, 0, 1, 1, 0, 1, 1};
  const auto g = build_nand_tree(3, bits, ParameterPreset::uniform());
  CHECK(g.size() == 7 + 12);
  CHECK(g.is_tree());
}

TEST_CASE("depth-2 all-zero tree has negative bonds only") {
  const auto g = build_nand_tree(2, std::vector<int>{0, 0, 0, 0}, ParameterPreset::huckel());
  CHECK(g.size() == 3 + 4);
  for (const Bond& b : g.bonds()) CHECK(b.beta < 0.0);
  CHECK(g.root_coupling() < 0.0);
}

TEST_CASE("pendant count and gate count for every input vector") {
  std::mt19937_64 rng(3);
  for (int depth = 1; depth <= 5; ++depth) {
    const std::size_t width = std::size_t{1} << depth;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> bits(width);
      for (int& b : bits) b = static_cast<int>(rng() & 1U);
      const auto ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
      const auto g = build_nand_tree(depth, bits, ParameterPreset::uniform());
      const std::size_t gates = (std::size_t{1} << depth) - 1;
      CHECK(g.size() == gates + (width - ones) + 2 * ones);
      CHECK(nand_tree_layout(depth).gate_count() == gates);
    }
  }
}

TEST_CASE("builders are deterministic") {
  const std::vector<int> bits{0, 1, 1, 0};
  CHECK(build_nand_tree(2, bits, ParameterPreset::huckel()) == build_nand_tree(2, bits, ParameterPreset::huckel()));
}

TEST_CASE("bad arguments") {
  CHECK_THROWS(build_nand_tree(0, std::vector<int>{}, ParameterPreset::uniform()));
  CHECK_THROWS(build_nand_tree(2, std::vector<int>{0, 1}, ParameterPreset::uniform()));
  CHECK_THROWS(build_nand_tree(1, std::vector<int>{0, 2}, ParameterPreset::uniform()));
  CHECK_THROWS(build_gate(GateKind::Not, std::vector<int>{0, 1}, ParameterPreset::uniform()));
  CHECK_THROWS(gate_kind_from_string("xor"));
}

TEST_CASE("disconnected bit-1 variant drops the pendant") {
  BuildOptions opt;
  opt.bit_one_disconnected = true;
  const auto g = build_nand_tree(1, std::vector<int>{0, 1}, ParameterPreset::uniform(), opt);
  CHECK(g.size() == 2);
}

TEST_CASE("gate shapes") {
  const auto u = ParameterPreset::uniform();
  CHECK(build_gate(GateKind::Not, std::vector<int>{0}, u).size() == 2);
  CHECK(build_gate(GateKind::Nand, std::vector<int>{0, 0}, u).size() == 3);
  CHECK(build_gate(GateKind::And, std::vector<int>{1, 1}, u).size() == 2 + 4);
  CHECK(gate_layout(GateKind::Or).gate_count() == 3);
  for (GateKind k : {GateKind::Not, GateKind::And, GateKind::Or, GateKind::Nand}) {
    CHECK(gate_kind_from_string(to_string(k)) == k);
  }
}

TEST_CASE("classical layout evaluation") {
  const auto layout = gate_layout(GateKind::Or);
  CHECK(evaluate_layout(layout, std::vector<int>{0, 0}) == 0);
  CHECK(evaluate_layout(layout, std::vector<int>{0, 1}) == 1);
  CHECK(evaluate_layout(gate_layout(GateKind::And), std::vector<int>{1, 1}) == 1);
  CHECK(evaluate_layout(gate_layout(GateKind::Not), std::vector<int>{0}) == 1);
}

TEST_CASE("nitrogen sites take the nitrogen parameters") {
  BuildOptions opt;
  opt.nitrogen = {PendantRef{0, 0}};
  const auto p = ParameterPreset::huckel();
  const auto g = build_nand_tree(1, std::vector<int>{0, 1}, p, opt);
  REQUIRE(labelled(g, "N") == 1);
  for (const Site& s : g.sites()) {
    if (s.label != "N") continue;
    CHECK(s.alpha == p.alpha_N);
    for (const auto& [other, beta] : g.neighbors(s.id)) CHECK(beta == p.beta_NC);
  }
}
