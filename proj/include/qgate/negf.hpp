#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgate/graph.hpp"
#include "qgate/scatter.hpp"

namespace qgate {

class NegfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Retarded surface Green's function of a semi-infinite chain with site
/// energy alpha and hopping beta, at z = E + i eta.
std::complex<double> surface_green(double energy, double alpha, double beta, double eta);

struct SelfEnergy {
  std::complex<double> sigma;
  double gamma = 0.0;  // broadening i (sigma - sigma*) = -2 Im sigma
};

/// sigma = gamma_c^2 g(E) for a lead attached through coupling lead.gamma.
SelfEnergy self_energy(const LeadModel& lead, double energy);

/// One site of a symmetric backbone, listed from the centre site outwards.
struct BackboneSite {
  double alpha = 0.0;
  double beta_inward = -1.0;  // coupling to the neighbour closer to r=0
  std::string label = "C";
};

struct DeviceOptions {
  /// Explicit lead-like chain sites added on each side, outside the backbone.
  int chain_pad = 2;
  /// Molecular backbone between chain site r=0 and the pads (both sides).
  std::vector<BackboneSite> backbone;
  /// On-site energy of r=0; defaults to the lead site energy.
  std::optional<double> center_alpha;
};

/// Extended device: graph sites, centre site r=0 bonded to the graph root,
/// backbone and pad sites on both sides. Leads attach at the outermost
/// sites through LeadModel::gamma.
struct DeviceRegion {
  Eigen::MatrixXd hamiltonian;
  Eigen::Index left_contact = 0;
  Eigen::Index right_contact = 0;
  int chain_pad = 0;
  Eigen::Index center = 0;
  /// Graph site id for each device index; -1 for chain and backbone sites.
  std::vector<SiteId> graph_site;

  Eigen::Index size() const { return hamiltonian.rows(); }
  void validate() const;
};

DeviceRegion make_device(const TightBindingGraph& g, const LeadModel& lead,
                         const DeviceOptions& options = {});

/// Device made of the backbone and pads only, without any graph attached.
DeviceRegion make_bare_chain(const LeadModel& lead, const DeviceOptions& options = {});

/// Device from an arbitrary Hamiltonian with explicit single-site contacts.
DeviceRegion make_device(Eigen::MatrixXd hamiltonian, Eigen::Index left, Eigen::Index right);

struct TransmissionPoint {
  double energy = 0.0;
  double T = 0.0;
};

/// T(E) = Tr{Gamma_L G^ret Gamma_R G^adv} with
/// G^ret = [(E + i eta) - H - Sigma_L P_L - Sigma_R P_R]^-1 from a dense LU
/// factorisation. Throws NegfError when the matrix is singular.
TransmissionPoint transmission_negf(const DeviceRegion& device, const LeadModel& lead, double energy);

/// Full retarded Green's function (for diagnostics and tests).
Eigen::MatrixXcd retarded_green(const DeviceRegion& device, const LeadModel& lead, double energy);

}  // namespace qgate
