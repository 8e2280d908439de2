#include "nem/device.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nem/errors.hpp"

namespace nem {

void validate(const DeviceUtility& dev) {
  if (!std::isfinite(dev.marginal_at_zero) || !std::isfinite(dev.marginal_slope) ||
      !std::isfinite(dev.max_energy)) {
    throw ConfigError("device: parameters must be finite");
  }
  if (!(dev.marginal_slope > 0.0)) {
    throw ConfigError("device: marginal slope must be > 0, got " +
                      std::to_string(dev.marginal_slope));
  }
  if (dev.max_energy < 0.0) {
    throw ConfigError("device: max energy must be >= 0, got " +
                      std::to_string(dev.max_energy));
  }
  if (dev.marginal_at_zero - dev.marginal_slope * dev.max_energy < 0.0) {
    throw ConfigError(
        "device: utility must stay increasing over [0, max_energy]; requires "
        "marginal_at_zero >= marginal_slope * max_energy (got " +
        std::to_string(dev.marginal_at_zero) + " < " +
        std::to_string(dev.marginal_slope * dev.max_energy) + ")");
  }
}

namespace {

void check_domain(const DeviceUtility& dev, double energy, const char* op) {
  if (!std::isfinite(energy) || energy < 0.0 || energy > dev.max_energy) {
    throw ConfigError(std::string(op) + ": energy " + std::to_string(energy) +
                      " outside [0, " + std::to_string(dev.max_energy) + "]");
  }
}

}  // namespace

double utility(const DeviceUtility& dev, double energy) {
  check_domain(dev, energy, "utility");
  return dev.marginal_at_zero * energy - 0.5 * dev.marginal_slope * energy * energy;
}

double marginal(const DeviceUtility& dev, double energy) {
  check_domain(dev, energy, "marginal");
  return dev.marginal_at_zero - dev.marginal_slope * energy;
}

double inverse_marginal_clamped(const DeviceUtility& dev, double price) {
  if (!std::isfinite(price)) {
    throw ConfigError("inverse_marginal_clamped: price must be finite");
  }
  const double unconstrained = (dev.marginal_at_zero - price) / dev.marginal_slope;
  return std::clamp(unconstrained, 0.0, dev.max_energy);
}

void validate(const DeviceSet& set) {
  if (set.devices.empty()) {
    throw ConfigError("devices: at least one device required");
  }
  for (std::size_t i = 0; i < set.devices.size(); ++i) {
    try {
      validate(set.devices[i]);
    } catch (const ConfigError& err) {
      throw ConfigError("devices[" + std::to_string(i) + "]: " + err.what());
    }
  }
}

}  // namespace nem
