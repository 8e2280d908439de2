#pragma once

#include <optional>
#include <vector>

#include "nem/device.hpp"
#include "nem/tariff.hpp"

namespace nem {

enum class Zone { NetConsumption, NetZero, NetProduction };
const char* to_string(Zone zone);

// Renewable-output thresholds of the optimal consumption policy: below
// `lower` the household net-consumes, above `upper` it net-produces, and in
// between it matches total consumption to the renewable output exactly.
struct Thresholds {
  double lower = 0.0;  // kWh, aggregate consumption priced at the retail rate
  double upper = 0.0;  // kWh, aggregate consumption priced at the sell rate
};

struct Schedule {
  std::vector<double> consumption;     // kWh per device
  Zone zone = Zone::NetConsumption;
  std::optional<double> shadow_price;  // $/kWh, set in the net-zero zone only
  double net_energy = 0.0;             // total consumption minus renewable, kWh
  double surplus = 0.0;                // $, consumption utility minus payment
  double payment = 0.0;                // $
};

Thresholds thresholds(const DeviceSet& devices, const TariffParams& params);

// Surplus-maximizing consumption bundle for the given renewable output.
// Each device consumes up to the point where its marginal value meets the
// effective price: the retail rate below the lower threshold, the sell rate
// above the upper one, and a common shadow price in between chosen so the
// bundle sums to the renewable output.
Schedule optimal_schedule(const DeviceSet& devices, const TariffParams& params,
                          double renewable);

// Exhaustive grid-search reference: maximizes surplus over the product grid
// {0, step, 2*step, ..., cap} per device. Intended as an independent check of
// optimal_schedule; limited to 3 devices.
Schedule brute_force_schedule(const DeviceSet& devices, const TariffParams& params,
                              double renewable, double step);

// Consumption pattern of a device across all three zones, determined by its
// marginal value at zero consumption relative to the two rates.
enum class DevicePriority { AlwaysOn, ConditionalOn, NeverOn };
const char* to_string(DevicePriority priority);
DevicePriority classify_device(const DeviceUtility& dev, const TariffParams& params);

struct DemandPoint {
  double renewable = 0.0;
  double total_consumption = 0.0;
  Zone zone = Zone::NetConsumption;
};

// optimal_schedule evaluated over an ascending grid of renewable outputs.
std::vector<DemandPoint> demand_curve(const DeviceSet& devices, const TariffParams& params,
                                      const std::vector<double>& renewable_grid);

}  // namespace nem
