#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "qgate/graph.hpp"
#include "qgate/polynomial.hpp"
#include "qgate/ratio.hpp"

namespace qgate {

/// Raised when the analytical engine cannot handle a graph or energy
/// (cycles, energies outside the band, couplings outside the regime).
class ScatterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of the semi-infinite 1D lattice leads and the device-lead
/// coupling. `eta` is only used by the Green's-function engine.
struct LeadModel {
  double alpha_lead = 0.0;
  double beta_lead = -1.0;
  double gamma = -1.0;
  double eta = 1e-10;

  void validate() const;
};

/// Lattice momentum theta in (0, pi) with E = alpha + 2 beta cos(theta).
struct Momentum {
  double theta = 0.0;

  /// Throws ScatterError when E is outside the open band.
  static Momentum from_energy(double energy, const LeadModel& lead);
  double energy(const LeadModel& lead) const;
};

struct ScatteringSolution {
  std::complex<double> A{1.0, 0.0};  // incident
  std::complex<double> B;            // reflected
  std::complex<double> F;            // transmitted
  Momentum momentum;
  double T = 0.0;
};

enum class BitValue { Zero, One, Indeterminate };

std::string to_string(BitValue b);

/// Gate output read from y(E) as E -> 0.
struct GateBit {
  BitValue value = BitValue::Indeterminate;
  AmplitudeRatio y_limit = AmplitudeRatio::zero();  // limit from E -> 0+
  BitValue value_from_below = BitValue::Indeterminate;  // E -> 0- diagnostic
};

/// Ratio <v|E> / <parent(v)|E> for the tree rooted at g.root(); the parent
/// of the root is chain site r=0 with coupling g.root_coupling().
///
/// Evaluates R_v = beta_{v,p} / (E - alpha_v - sum_c beta_{c,v} R_c) over
/// the subtree of v in projective arithmetic: an infinite child ratio makes
/// the parent ratio exactly zero, a vanishing denominator makes it infinite.
/// Throws ScatterError if the subtree below v contains a cycle.
AmplitudeRatio node_ratio(const TightBindingGraph& g, SiteId v, double energy);

/// y(E) = <root|E> / <r=0|E>. Requires g.root_coupling() == lead.beta_lead
/// (the regime where the closed-form transmitted amplitude holds).
AmplitudeRatio tree_output_y(const TightBindingGraph& g, double energy,
                             const LeadModel& lead = {});

/// F = A 2i sin(theta) / (2i sin(theta) + y), B = F - A, T = |F|^2 with A = 1.
ScatteringSolution transmission_qst(const TightBindingGraph& g, double energy,
                                    const LeadModel& lead = {});

/// Same formula for a given y; infinite y gives F = 0 exactly.
ScatteringSolution transmission_from_y(const AmplitudeRatio& y, double energy,
                                       const LeadModel& lead = {});

/// Exact node ratio as a rational function of E. Parameters are converted
/// exactly from their double values.
RationalFunction exact_node_ratio(const TightBindingGraph& g, SiteId v);
RationalFunction exact_tree_output_y(const TightBindingGraph& g);

enum class ClassifyMode { Numeric, Exact };

/// E ladder used by the numeric classifier.
inline constexpr std::array<double, 3> kClassifierLadder{1e-3, 1e-4, 1e-5};

/// Reads the gate bit from the E -> 0+ behaviour of the root ratio.
///
/// Numeric mode samples y on kClassifierLadder: |y| eps constant within a
/// factor 2 means y ~ 1/E (bit 0); |y| / eps constant within a factor 2
/// means y ~ E (bit 1); anything else is indeterminate. Exact mode reads the
/// limit from the lowest-order coefficients of the rational function.
GateBit classify_bit(const TightBindingGraph& g, ClassifyMode mode = ClassifyMode::Numeric);

/// Limit classification of a single ratio function (used for sub-trees).
GateBit classify_exact(const RationalFunction& y);

}  // namespace qgate
