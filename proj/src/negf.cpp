#include "qgate/negf.hpp"

#include <cmath>

namespace qgate {

std::complex<double> surface_green(double energy, double alpha, double beta, double eta) {
  if (!(eta > 0.0)) {
    throw NegfError("broadening eta must be positive");
  }
  if (beta == 0.0) {
    throw NegfError("lead hopping must be nonzero");
  }
  const std::complex<double> w{energy - alpha, eta};
  const double b2 = beta * beta;
  const std::complex<double> s = std::sqrt(w * w - 4.0 * b2);
  const std::complex<double> g1 = (w - s) / (2.0 * b2);
  const std::complex<double> g2 = (w + s) / (2.0 * b2);
  // Retarded branch: Im g <= 0. When rounding has erased the imaginary parts
  // (far outside the band, or eta tiny) fall back to the decaying root.
  if (g1.imag() < 0.0 && g2.imag() >= 0.0) return g1;
  if (g2.imag() < 0.0 && g1.imag() >= 0.0) return g2;
  return std::abs(g1) <= std::abs(g2) ? g1 : g2;
}

SelfEnergy self_energy(const LeadModel& lead, double energy) {
  const std::complex<double> g = surface_green(energy, lead.alpha_lead, lead.beta_lead, lead.eta);
  SelfEnergy se;
  se.sigma = lead.gamma * lead.gamma * g;
  se.gamma = -2.0 * se.sigma.imag();
  return se;
}

void DeviceRegion::validate() const {
  const Eigen::Index n = hamiltonian.rows();
  if (n == 0 || hamiltonian.cols() != n) {
    throw NegfError("device Hamiltonian must be square and non-empty");
  }
  if (left_contact < 0 || left_contact >= n || right_contact < 0 || right_contact >= n) {
    throw NegfError("contact index out of range");
  }
  if (chain_pad < 0) {
    throw NegfError("chain_pad must be non-negative");
  }
  if (hamiltonian != hamiltonian.transpose()) {
    throw NegfError("device Hamiltonian must be symmetric");
  }
}

namespace {

DeviceRegion assemble(const TightBindingGraph* g, const LeadModel& lead, const DeviceOptions& options) {
  lead.validate();
  if (options.chain_pad < 0) {
    throw NegfError("chain_pad must be non-negative");
  }
  const Eigen::Index n_graph = g ? static_cast<Eigen::Index>(g->size()) : 0;
  const Eigen::Index side =
      static_cast<Eigen::Index>(options.backbone.size()) + options.chain_pad;
  const Eigen::Index n = n_graph + 1 + 2 * side;

  DeviceRegion d;
  d.hamiltonian = Eigen::MatrixXd::Zero(n, n);
  d.chain_pad = options.chain_pad;
  d.graph_site.assign(static_cast<std::size_t>(n), -1);
  if (g) {
    g->validate();
    d.hamiltonian.topLeftCorner(n_graph, n_graph) = assemble_hamiltonian(*g);
    for (Eigen::Index k = 0; k < n_graph; ++k) {
      d.graph_site[static_cast<std::size_t>(k)] = g->sites()[static_cast<std::size_t>(k)].id;
    }
  }
  d.center = n_graph;
  d.hamiltonian(d.center, d.center) = options.center_alpha.value_or(lead.alpha_lead);
  if (g) {
    const auto root = static_cast<Eigen::Index>(g->index_of(g->root()));
    d.hamiltonian(root, d.center) = g->root_coupling();
    d.hamiltonian(d.center, root) = g->root_coupling();
  }

  // Left side occupies [center+1, center+side], right side the rest; both
  // list sites from the centre outwards.
  auto build_side = [&](Eigen::Index first) {
    Eigen::Index prev = d.center;
    Eigen::Index idx = first;
    for (const BackboneSite& b : options.backbone) {
      d.hamiltonian(idx, idx) = b.alpha;
      d.hamiltonian(idx, prev) = b.beta_inward;
      d.hamiltonian(prev, idx) = b.beta_inward;
      prev = idx++;
    }
    for (int k = 0; k < options.chain_pad; ++k) {
      d.hamiltonian(idx, idx) = lead.alpha_lead;
      d.hamiltonian(idx, prev) = lead.beta_lead;
      d.hamiltonian(prev, idx) = lead.beta_lead;
      prev = idx++;
    }
    return prev;
  };
  d.left_contact = build_side(d.center + 1);
  d.right_contact = build_side(d.center + 1 + side);
  return d;
}

}  // namespace

DeviceRegion make_device(const TightBindingGraph& g, const LeadModel& lead, const DeviceOptions& options) {
  return assemble(&g, lead, options);
}

DeviceRegion make_bare_chain(const LeadModel& lead, const DeviceOptions& options) {
  return assemble(nullptr, lead, options);
}

DeviceRegion make_device(Eigen::MatrixXd hamiltonian, Eigen::Index left, Eigen::Index right) {
  DeviceRegion d;
  d.hamiltonian = std::move(hamiltonian);
  d.left_contact = left;
  d.right_contact = right;
  d.graph_site.assign(static_cast<std::size_t>(d.hamiltonian.rows()), -1);
  d.validate();
  return d;
}

Eigen::MatrixXcd retarded_green(const DeviceRegion& device, const LeadModel& lead, double energy) {
  device.validate();
  lead.validate();
  const Eigen::Index n = device.size();
  const SelfEnergy se = self_energy(lead, energy);
  Eigen::MatrixXcd m = -device.hamiltonian.cast<std::complex<double>>();
  m.diagonal().array() += std::complex<double>{energy, lead.eta};
  m(device.left_contact, device.left_contact) -= se.sigma;
  m(device.right_contact, device.right_contact) -= se.sigma;

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const auto& packed = lu.matrixLU();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (packed(k, k) == std::complex<double>{0.0, 0.0}) {
      throw NegfError("device matrix is singular at E = " + std::to_string(energy) + " eV");
    }
  }
  Eigen::MatrixXcd g = lu.solve(Eigen::MatrixXcd::Identity(n, n));
  if (!g.allFinite()) {
    throw NegfError("Green's function is not finite at E = " + std::to_string(energy) + " eV");
  }
  return g;
}

TransmissionPoint transmission_negf(const DeviceRegion& device, const LeadModel& lead, double energy) {
  const Eigen::MatrixXcd g_ret = retarded_green(device, lead, energy);
  const double broadening = self_energy(lead, energy).gamma;
  const Eigen::Index l = device.left_contact;
  const Eigen::Index r = device.right_contact;
  // Gamma_L and Gamma_R each have a single nonzero diagonal entry, so
  // Tr{Gamma_L G Gamma_R G^dagger} reduces to the (l, r) element of G.
  const std::complex<double> trace = broadening * g_ret(l, r) * broadening * std::conj(g_ret(l, r));
  return TransmissionPoint{energy, trace.real()};
}

}  // namespace qgate
