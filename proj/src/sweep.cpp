#include "qgate/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace qgate {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return out;
}

std::vector<TransmissionPoint> transmission_sweep(const DeviceRegion& device, const LeadModel& lead,
                                                  std::span<const double> energies, int threads) {
  if (energies.empty()) {
    throw std::invalid_argument("energy grid is empty");
  }
  return parallel_map(energies.size(), threads,
                      [&](std::size_t i) { return transmission_negf(device, lead, energies[i]); });
}

TightBindingGraph apply_parameter(const TightBindingGraph& g, const std::string& name, double value) {
  TightBindingGraph out = g;
  if (name == "alpha_N") {
    for (const Site& s : g.sites()) {
      if (s.label == "N") out.set_alpha(s.id, value);
    }
    return out;
  }
  if (name == "beta_NC") {
    for (const Bond& b : g.bonds()) {
      if (g.site(b.i).label == "N" || g.site(b.j).label == "N") out.set_beta(b.i, b.j, value);
    }
    return out;
  }
  if (name == "root_coupling") {
    out.set_root_coupling(value);
    return out;
  }
  try {
    if (name.rfind("site:", 0) == 0) {
      out.set_alpha(std::stoll(name.substr(5)), value);
      return out;
    }
    if (name.rfind("bond:", 0) == 0) {
      const std::string ids = name.substr(5);
      const auto dash = ids.find('-');
      if (dash == std::string::npos) {
        throw std::invalid_argument("bond parameter must look like bond:<i>-<j>");
      }
      out.set_beta(std::stoll(ids.substr(0, dash)), std::stoll(ids.substr(dash + 1)), value);
      return out;
    }
  } catch (const GraphError& e) {
    throw std::invalid_argument(std::string("parameter '") + name + "': " + e.what());
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("malformed parameter '" + name + "'");
  }
  throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

void SweepSpec::validate() const {
  if (variable.empty()) {
    throw std::invalid_argument("sweep variable is empty");
  }
  if (values.empty()) {
    throw std::invalid_argument("sweep grid is empty");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sweep values must be finite");
    }
  }
  if (!std::isfinite(fixed_energy)) {
    throw std::invalid_argument("fixed energy must be finite");
  }
}

std::vector<SweepPoint> run_sweep(const Junction& junction, const LeadModel& lead, const SweepSpec& spec,
                                  int threads) {
  spec.validate();
  if (spec.variable == "energy") {
    const DeviceRegion device = junction.make(lead);
    return parallel_map(spec.values.size(), threads, [&](std::size_t i) {
      const TransmissionPoint p = transmission_negf(device, lead, spec.values[i]);
      return SweepPoint{spec.values[i], p.energy, p.T};
    });
  }
  // Fail fast on an unknown name before dispatching work.
  apply_parameter(junction.graph, spec.variable, spec.values.front());
  return parallel_map(spec.values.size(), threads, [&](std::size_t i) {
    Junction j = junction;
    j.graph = apply_parameter(junction.graph, spec.variable, spec.values[i]);
    const TransmissionPoint p = transmission_negf(j.make(lead), lead, spec.fixed_energy);
    return SweepPoint{spec.values[i], p.energy, p.T};
  });
}

}  // namespace qgate
