#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgate/graph.hpp"
#include "qgate/scatter.hpp"

namespace qgate {

/// Single-gate leaf structures below a parent node d.
///   A: a with single-site inputs b, c            (inputs 0,0 -> Y = 0)
///   B: a with single-site b and path c-f         (inputs 0,1 -> Y = 0)
///   C: a with paths b-e and c-f                  (inputs 1,1 -> Y = -inf)
enum class LeafStructure { A, B, C };

LeafStructure leaf_structure_from_string(const std::string& s);
std::string to_string(LeafStructure s);

/// Site names present in a structure (excluding d), e.g. {"a","b","c"} for A.
std::vector<std::string> leaf_site_names(LeafStructure s);

/// Sites whose energy may be nonzero without losing the bit value, when
/// perturbed one at a time.
std::vector<std::string> free_site_energies(LeafStructure s);

struct LeafParameters {
  std::map<std::string, double> alpha;  // by site name; missing = 0
  std::map<std::string, double> beta;   // by bond name "b-a", "a-d", ...; missing = -1
};

/// Leaf structure as a tree rooted at a; the root coupling plays beta_{a,d}.
/// Site ids follow leaf_site_names order; meta "name:<id>" records names.
TightBindingGraph build_leaf_structure(LeafStructure s, const LeafParameters& params = {});

/// Bond names of a structure, e.g. {"a-d","b-a","c-a"} for A.
std::vector<std::string> leaf_bond_names(LeafStructure s);

struct Perturbation {
  std::uint64_t seed = 1;
  /// Couplings are drawn uniformly from [beta_min, beta_max] for cases 2-4.
  double beta_min = -4.0;
  double beta_max = -0.1;
  /// Site-energy offsets (eV) by site name. Case 3 applies
  /// `arbitrary_alpha` to every site; case 4 applies exactly this map.
  std::map<std::string, double> alpha;
  double arbitrary_alpha = 0.5;
};

struct CaseOutcome {
  GateBit ideal;     // case 1 reference
  GateBit observed;
  bool preserved = false;
  LeafParameters parameters;
};

/// Restriction cases for the leaf structures:
///   1: beta = -1, alpha = 0
///   2: random negative beta, alpha = 0
///   3: random negative beta, every site energy offset
///   4: random negative beta, site energies from `perturbation.alpha`
CaseOutcome case_analysis(LeafStructure s, int case_number, const Perturbation& perturbation = {});

}  // namespace qgate
