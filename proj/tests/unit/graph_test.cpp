#include "doctest.h"

#include "qgate/builders.hpp"
#include "qgate/graph.hpp"
#include "qgate/presets.hpp"

using namespace qgate;

TEST_CASE("single site gives a 1x1 zero Hamiltonian") {
  TightBindingGraph g;
  g.set_root(g.add_site(0.0));
  const auto h = assemble_hamiltonian(g);
  CHECK(h.rows() == 1);
  CHECK(h(0, 0) == 0.0);
}

TEST_CASE("two bonded sites") {
  TightBindingGraph g;
  const auto a = g.add_site(0.0);
  const auto b = g.add_site(0.0);
  g.add_bond(a, b, -1.0);
  g.set_root(a);
  const auto h = assemble_hamiltonian(g);
  CHECK(h(0, 1) == -1.0);
  CHECK(h(1, 0) == -1.0);
  CHECK(h(0, 0) == 0.0);
  CHECK(h(1, 1) == 0.0);
}

TEST_CASE("depth-1 tree: absolute row sums are node degrees") {
  const auto g = build_nand_tree(1, std::vector<int>{1, 1}, ParameterPreset::uniform());
  const auto h = assemble_hamiltonian(g);
  REQUIRE(h.rows() == 5);
  for (const Site& s : g.sites()) {
    const auto i = static_cast<Eigen::Index>(g.index_of(s.id));
    CHECK(h.row(i).cwiseAbs().sum() == doctest::Approx(static_cast<double>(g.neighbors(s.id).size())));
  }
  CHECK(h == h.transpose());
}

TEST_CASE("Hamiltonian is exactly symmetric for molecular presets") {
  const std::vector<int> bits{0, 1, 1, 0, 1, 1, 0, 0};
  const auto h = assemble_hamiltonian(build_nand_tree(3, bits, ParameterPreset::huckel()));
  CHECK(h == h.transpose());
}

TEST_CASE("bond validation") {
  TightBindingGraph g;
  const auto a = g.add_site(0.0);
  const auto b = g.add_site(0.0);
  CHECK_THROWS_AS(g.add_bond(a, a, -1.0), GraphError);
  CHECK_THROWS_AS(g.add_bond(a, 7, -1.0), GraphError);
  CHECK_THROWS_AS(g.add_bond(a, b, 0.0), GraphError);
  g.add_bond(a, b, -1.0);
  CHECK_THROWS_AS(g.add_bond(b, a, -2.0), GraphError);
  CHECK_THROWS_AS(g.add_site_with_id(a, 0.0), GraphError);
}

TEST_CASE("disconnected graphs fail validation") {
  TightBindingGraph g;
  g.set_root(g.add_site(0.0));
  g.add_site(0.0);
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(g.validate(), GraphError);
}

TEST_CASE("serialize/deserialize round trip") {
  const std::vector<int> bits{0, 0, 0, 1, 1, 0, 1, 1};
  const auto g = build_nand_tree(3, bits, ParameterPreset::huckel());
  const auto back = deserialize(serialize(g));
  CHECK(back == g);
  CHECK(serialize(back) == serialize(g));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(deserialize("{not json"), GraphError);
  CHECK_THROWS_AS(deserialize(R"({"sites":[{"id":0,"alpha":0}],"bonds":[{"i":0,"j":3,"beta":-1}],"root":0})"),
                  GraphError);
  CHECK_THROWS_AS(
      deserialize(R"({"sites":[{"id":0,"alpha":0},{"id":1,"alpha":0}],"bonds":[{"i":0,"j":1,"beta":0}],"root":0})"),
      GraphError);
  CHECK_THROWS_AS(deserialize(R"({"sites":[{"id":0,"alpha":0},{"id":0,"alpha":1}],"bonds":[],"root":0})"),
                  GraphError);
  CHECK_THROWS_AS(deserialize(R"({"sites":[{"id":0,"alpha":0}],"bonds":[],"root":4})"), GraphError);
}

TEST_CASE("presets") {
  CHECK(preset_violations(ParameterPreset::uniform()).empty());
  CHECK(preset_violations(ParameterPreset::huckel()).empty());
  auto p = ParameterPreset::huckel();
  p.beta_NC = 1.08;
  CHECK(preset_violations(p).size() == 1);
  CHECK_THROWS_AS(validate_preset(p), std::invalid_argument);
  CHECK_THROWS_AS(preset_by_name("nope"), std::invalid_argument);
  const auto q = preset_from_json(preset_to_json(ParameterPreset::huckel()));
  CHECK(q.beta_SC == ParameterPreset::huckel().beta_SC);
  CHECK(preset_from_json(R"({"base":"huckel","alpha_N":-1})").beta_NC == ParameterPreset::huckel().beta_NC);
}
