#pragma once

#include <vector>

namespace nem {

// One flexible load with quadratic consumption utility
//   U(d) = marginal_at_zero * d - (marginal_slope / 2) * d^2,  0 <= d <= max_energy,
// so the marginal value of energy declines linearly from marginal_at_zero.
// The cap must keep the marginal value non-negative over the whole range.
struct DeviceUtility {
  double marginal_at_zero = 0.0;  // $/kWh, value of the first unit
  double marginal_slope = 0.0;    // $/kWh per kWh, > 0
  double max_energy = 0.0;        // kWh per billing period, >= 0
};

void validate(const DeviceUtility& dev);

// U(d); rejects energy outside [0, max_energy].
double utility(const DeviceUtility& dev, double energy);

// dU/dd at the given consumption, strictly decreasing.
double marginal(const DeviceUtility& dev, double energy);

// Consumption at which the marginal value equals the price, clamped into
// [0, max_energy]. Non-increasing in price.
double inverse_marginal_clamped(const DeviceUtility& dev, double price);

struct DeviceSet {
  std::vector<DeviceUtility> devices;
};

void validate(const DeviceSet& set);

}  // namespace nem
