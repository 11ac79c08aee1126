#include "doctest.h"

#include <algorithm>

#include "qgate/cases.hpp"

using namespace qgate;

TEST_CASE("ideal leaf outputs") {
  CHECK(case_analysis(LeafStructure::A, 1).ideal.value == BitValue::One);
  CHECK(case_analysis(LeafStructure::B, 1).ideal.value == BitValue::One);
  // Both inputs 1: Y = beta/E -> bit 0.
  CHECK(case_analysis(LeafStructure::C, 1).ideal.value == BitValue::Zero);
}

TEST_CASE("case 2 keeps every structure for many seeds") {
  for (auto s : {LeafStructure::A, LeafStructure::B, LeafStructure::C}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Perturbation p;
      p.seed = seed;
      CHECK(case_analysis(s, 2, p).preserved);
    }
  }
}

TEST_CASE("structure A: one shifted input is fine, two are not") {
  Perturbation p;
  p.alpha = {{"b", 0.5}};
  CHECK(case_analysis(LeafStructure::A, 4, p).preserved);
  p.alpha = {{"c", -0.5}};
  CHECK(case_analysis(LeafStructure::A, 4, p).preserved);
  p.alpha = {{"b", 0.5}, {"c", 0.5}};
  CHECK_FALSE(case_analysis(LeafStructure::A, 4, p).preserved);
}

TEST_CASE("structure B needs alpha_b = 0") {
  Perturbation p;
  p.alpha = {{"b", 0.5}};
  CHECK_FALSE(case_analysis(LeafStructure::B, 4, p).preserved);
  for (const char* free : {"a", "c", "f"}) {
    p.alpha = {{free, 0.5}};
    CHECK(case_analysis(LeafStructure::B, 4, p).preserved);
  }
}

TEST_CASE("structure C needs alpha_a = alpha_e = alpha_f = 0") {
  Perturbation p;
  for (const char* pinned : {"a", "e", "f"}) {
    p.alpha = {{pinned, 0.5}};
    CHECK_FALSE(case_analysis(LeafStructure::C, 4, p).preserved);
  }
  CHECK_FALSE(case_analysis(LeafStructure::C, 3, p).preserved);
}

TEST_CASE("leaf structure plumbing") {
  CHECK(leaf_structure_from_string("b") == LeafStructure::B);
  CHECK_THROWS(leaf_structure_from_string("D"));
  CHECK_THROWS(case_analysis(LeafStructure::A, 5));
  Perturbation bad;
  bad.beta_max = 0.5;
  CHECK_THROWS(case_analysis(LeafStructure::A, 2, bad));
  const auto g = build_leaf_structure(LeafStructure::C);
  CHECK(g.size() == 5);
  CHECK(g.is_tree());
}
