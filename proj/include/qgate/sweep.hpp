#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qgate/molecules.hpp"
#include "qgate/negf.hpp"

namespace qgate {

/// Evaluates fn(0..count-1) on up to `threads` workers; results keep index
/// order. The first exception thrown by any worker is rethrown.
template <typename Fn>
auto parallel_map(std::size_t count, int threads, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1))));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < count; i += workers) {
        slots[i].emplace(fn(i));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count);

std::vector<TransmissionPoint> transmission_sweep(const DeviceRegion& device, const LeadModel& lead,
                                                  std::span<const double> energies, int threads = 1);

/// Names accepted by apply_parameter:
///   alpha_N          every site labelled N
///   beta_NC          every bond touching a site labelled N
///   root_coupling    coupling between the root and chain site r=0
///   site:<id>        on-site energy of one site
///   bond:<i>-<j>     coupling of one bond
/// Throws std::invalid_argument for unknown names or missing sites.
TightBindingGraph apply_parameter(const TightBindingGraph& g, const std::string& name, double value);

struct SweepSpec {
  std::string variable;  // "energy" or an apply_parameter name
  std::vector<double> values;
  double fixed_energy = 0.0;  // used for parameter sweeps

  void validate() const;
};

struct SweepPoint {
  double value = 0.0;
  double energy = 0.0;
  double T = 0.0;
};

/// One point per value; the device is rebuilt for each parameter value.
std::vector<SweepPoint> run_sweep(const Junction& junction, const LeadModel& lead, const SweepSpec& spec,
                                  int threads = 1);

}  // namespace qgate
