#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nem/metrics.hpp"
#include "nem/ramsey.hpp"

namespace nem {

// Full study definition, loaded from a JSON document. Relative data paths are
// resolved against the config file's directory; referenced files must exist
// at load time. Validation errors carry the offending JSON path.
struct StudyConfig {
  DeviceSet devices;
  CostModel cost;
  std::vector<PolicyTemplate> policies;
  std::vector<double> gammas;
  PaybackParams payback;
  std::filesystem::path price_path;
  std::filesystem::path generation_path;
  int resample_hours = 1;
  std::filesystem::path output_dir = "out";
  SolverOptions solver;

  double periods_per_day() const { return 24.0 / resample_hours; }
};

StudyConfig load_study_config(const std::filesystem::path& path);

// Loads only the "devices" array of a config document; used by the one-shot
// CLI commands that do not need data paths or policies.
DeviceSet load_devices(const std::filesystem::path& path);

// Payback parameters from the "payback" object of a config document.
PaybackParams load_payback_params(const std::filesystem::path& path);

}  // namespace nem
