#include "doctest.h"

#include "qgate/molecules.hpp"
#include "qgate/sweep.hpp"

using namespace qgate;

TEST_CASE("parallel_map keeps order and rethrows") {
  const auto squares = parallel_map(100, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 100; ++i) CHECK(squares[i] == i * i);
  CHECK(parallel_map(0, 3, [](std::size_t i) { return i; }).empty());
  CHECK_THROWS_AS(parallel_map(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                                 return i;
                               }),
                  std::runtime_error);
}

TEST_CASE("linspace") {
  const auto v = linspace(-2.0, 2.0, 5);
  CHECK(v == std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0});
  CHECK(linspace(0.3, 1.0, 1) == std::vector<double>{0.3});
}

TEST_CASE("sweeps are independent of the thread count") {
  const LeadModel lead;
  const auto j = third_generation_molecule(ThirdGenerationTree::B);
  SweepSpec spec{"alpha_N", linspace(0.0, -3.0, 13), 0.0};
  const auto one = run_sweep(j, lead, spec, 1);
  const auto four = run_sweep(j, lead, spec, 4);
  REQUIRE(one.size() == 13);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].value == spec.values[k]);
    CHECK(one[k].T == four[k].T);
  }
  CHECK(one.front().T < 1e-12);
  CHECK(one.back().T > 0.02);
}

TEST_CASE("energy sweeps") {
  const LeadModel lead;
  const auto j = third_generation_molecule(ThirdGenerationTree::C);
  const auto pts = run_sweep(j, lead, SweepSpec{"energy", {-0.5, 0.0, 0.5}, 0.0});
  CHECK(pts[1].T < 1e-12);
  CHECK(pts[0].energy == -0.5);
  CHECK(pts[2].T > 1e-3);
}

TEST_CASE("parameter names") {
  const auto j = third_generation_molecule(ThirdGenerationTree::A);
  CHECK(apply_parameter(j.graph, "site:3", 0.25).site(3).alpha == 0.25);
  CHECK(*apply_parameter(j.graph, "bond:0-1", -0.5).beta(0, 1) == -0.5);
  CHECK(apply_parameter(j.graph, "root_coupling", -0.8).root_coupling() == -0.8);
  CHECK_THROWS_AS(apply_parameter(j.graph, "alpha_X", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(apply_parameter(j.graph, "site:9999", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(apply_parameter(j.graph, "bond:0-7", -1.0), std::invalid_argument);
  CHECK_THROWS_AS(apply_parameter(j.graph, "site:x", 0.0), std::invalid_argument);
}

TEST_CASE("empty or non-finite grids") {
  const LeadModel lead;
  const auto j = third_generation_molecule(ThirdGenerationTree::A);
  CHECK_THROWS_AS(run_sweep(j, lead, SweepSpec{"alpha_N", {}, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(j, lead, SweepSpec{"alpha_N", {NAN}, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(j, lead, SweepSpec{"beta_XX", {1.0}, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(transmission_sweep(j.make(lead), lead, std::vector<double>{}), std::invalid_argument);
}
