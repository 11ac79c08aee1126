#include "qgate/cases.hpp"

#include <random>
#include <stdexcept>

namespace qgate {

LeafStructure leaf_structure_from_string(const std::string& s) {
  if (s == "A" || s == "a") return LeafStructure::A;
  if (s == "B" || s == "b") return LeafStructure::B;
  if (s == "C" || s == "c") return LeafStructure::C;
  throw std::invalid_argument("unknown leaf structure '" + s + "'");
}

std::string to_string(LeafStructure s) {
  switch (s) {
    case LeafStructure::A: return "A";
    case LeafStructure::B: return "B";
    case LeafStructure::C: return "C";
  }
  return "?";
}

std::vector<std::string> leaf_site_names(LeafStructure s) {
  switch (s) {
    case LeafStructure::A: return {"a", "b", "c"};
    case LeafStructure::B: return {"a", "b", "c", "f"};
    case LeafStructure::C: return {"a", "b", "c", "e", "f"};
  }
  return {};
}

std::vector<std::string> leaf_bond_names(LeafStructure s) {
  switch (s) {
    case LeafStructure::A: return {"a-d", "b-a", "c-a"};
    case LeafStructure::B: return {"a-d", "b-a", "c-a", "f-c"};
    case LeafStructure::C: return {"a-d", "b-a", "c-a", "e-b", "f-c"};
  }
  return {};
}

std::vector<std::string> free_site_energies(LeafStructure s) {
  switch (s) {
    // Either single-site input alone may shift; the other still pins Y -> 0.
    case LeafStructure::A: return {"a", "b", "c"};
    case LeafStructure::B: return {"a", "c", "f"};
    case LeafStructure::C: return {"b", "c"};
  }
  return {};
}

TightBindingGraph build_leaf_structure(LeafStructure s, const LeafParameters& params) {
  TightBindingGraph g;
  std::map<std::string, SiteId> id;
  for (const auto& name : leaf_site_names(s)) {
    auto it = params.alpha.find(name);
    id[name] = g.add_site(it == params.alpha.end() ? 0.0 : it->second, name);
    g.meta()["name:" + std::to_string(id[name])] = name;
  }
  auto beta = [&](const std::string& bond) {
    auto it = params.beta.find(bond);
    return it == params.beta.end() ? -1.0 : it->second;
  };
  for (const auto& bond : leaf_bond_names(s)) {
    const std::string outer = bond.substr(0, 1);
    const std::string inner = bond.substr(2, 1);
    if (inner == "d") {
      g.set_root_coupling(beta(bond));
    } else {
      g.add_bond(id.at(outer), id.at(inner), beta(bond));
    }
  }
  g.set_root(id.at("a"));
  g.meta()["kind"] = "leaf_" + to_string(s);
  return g;
}

CaseOutcome case_analysis(LeafStructure s, int case_number, const Perturbation& perturbation) {
  if (case_number < 1 || case_number > 4) {
    throw std::invalid_argument("case must be 1..4");
  }
  if (!(perturbation.beta_min <= perturbation.beta_max) || !(perturbation.beta_max < 0.0)) {
    throw std::invalid_argument("coupling draws must lie in a negative interval");
  }
  CaseOutcome out;
  out.ideal = classify_bit(build_leaf_structure(s), ClassifyMode::Exact);

  LeafParameters params;
  if (case_number >= 2) {
    std::mt19937_64 rng(perturbation.seed);
    std::uniform_real_distribution<double> draw(perturbation.beta_min, perturbation.beta_max);
    for (const auto& bond : leaf_bond_names(s)) {
      params.beta[bond] = draw(rng);
    }
  }
  if (case_number == 3) {
    for (const auto& name : leaf_site_names(s)) {
      params.alpha[name] = perturbation.arbitrary_alpha;
    }
  }
  if (case_number == 4) {
    params.alpha = perturbation.alpha;
  }
  out.observed = classify_bit(build_leaf_structure(s, params), ClassifyMode::Exact);
  out.preserved = out.observed.value == out.ideal.value;
  out.parameters = std::move(params);
  return out;
}

}  // namespace qgate
