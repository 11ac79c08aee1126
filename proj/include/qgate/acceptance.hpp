#pragma once

#include <string>
#include <vector>

#include "qgate/presets.hpp"

namespace qgate::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  std::string anchor;  // the physical claim the criterion checks
};

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Config {
  /// Preset for the molecular junction criteria.
  ParameterPreset molecular = ParameterPreset::huckel();
  int threads = 1;
  std::uint64_t seed = 20240601;
};

const std::vector<Criterion>& criteria();

/// Runs one criterion; an exception inside a check is reported as a failure.
Result run(int id, const Config& config = {});
std::vector<Result> run_all(const Config& config = {});

/// "PASS [n] title -- detail" / "FAIL ...".
std::string format(const Result& r);

}  // namespace qgate::acceptance
