#include "nem/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "nem/errors.hpp"

namespace nem {

const char* to_string(Zone zone) {
  switch (zone) {
    case Zone::NetConsumption: return "net_consumption";
    case Zone::NetZero: return "net_zero";
    case Zone::NetProduction: return "net_production";
  }
  return "unknown";
}

const char* to_string(DevicePriority priority) {
  switch (priority) {
    case DevicePriority::AlwaysOn: return "always_on";
    case DevicePriority::ConditionalOn: return "conditional_on";
    case DevicePriority::NeverOn: return "never_on";
  }
  return "unknown";
}

namespace {

constexpr double kShadowPriceWidth = 1e-12;  // bisection bracket width on the shadow price
constexpr int kMaxBisectIterations = 200;

double total_consumption_at(const DeviceSet& devices, double price) {
  double total = 0.0;
  for (const DeviceUtility& dev : devices.devices) {
    total += inverse_marginal_clamped(dev, price);
  }
  return total;
}

// Solves sum_i inverse_marginal_clamped(i, mu) = target for mu in
// [sell, retail]. The sum is continuous and decreasing in mu with opposite
// signs at the interval ends, so bisection always brackets a root. A final
// closed-form solve on the clamp pattern identified by the bisection removes
// the trailing bisection residue, making the balance exact to rounding.
double solve_shadow_price(const DeviceSet& devices, double sell, double retail,
                          double target) {
  double lo = sell;
  double hi = retail;
  for (int iter = 0;
       iter < kMaxBisectIterations && hi - lo > kShadowPriceWidth; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (total_consumption_at(devices, mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double price = 0.5 * (lo + hi);

  double inv_slope_sum = 0.0;
  double interior_target = target;
  for (const DeviceUtility& dev : devices.devices) {
    const double d = inverse_marginal_clamped(dev, price);
    if (d <= 0.0 || d >= dev.max_energy) {
      interior_target -= d;  // clamped at a bound, insensitive to the price
    } else {
      inv_slope_sum += 1.0 / dev.marginal_slope;
      interior_target -= dev.marginal_at_zero / dev.marginal_slope;
    }
  }
  if (inv_slope_sum > 0.0) {
    const double candidate =
        std::clamp(-interior_target / inv_slope_sum, sell, retail);
    const double miss_candidate =
        std::abs(total_consumption_at(devices, candidate) - target);
    const double miss_bisected =
        std::abs(total_consumption_at(devices, price) - target);
    if (miss_candidate <= miss_bisected) {
      price = candidate;
    }
  }
  return price;
}

Schedule schedule_at_price(const DeviceSet& devices, const TariffParams& params,
                           double renewable, double effective_price, Zone zone) {
  Schedule result;
  result.zone = zone;
  result.consumption.reserve(devices.devices.size());
  double total_utility = 0.0;
  double total_energy = 0.0;
  for (const DeviceUtility& dev : devices.devices) {
    const double d = inverse_marginal_clamped(dev, effective_price);
    result.consumption.push_back(d);
    total_utility += utility(dev, d);
    total_energy += d;
  }
  result.net_energy = total_energy - renewable;
  result.payment = payment(params, result.net_energy);
  result.surplus = total_utility - result.payment;
  return result;
}

}  // namespace

Thresholds thresholds(const DeviceSet& devices, const TariffParams& params) {
  validate(devices);
  validate(params);
  return Thresholds{total_consumption_at(devices, params.retail_rate),
                    total_consumption_at(devices, params.sell_rate)};
}

Schedule optimal_schedule(const DeviceSet& devices, const TariffParams& params,
                          double renewable) {
  validate(devices);
  validate(params);
  if (!std::isfinite(renewable) || renewable < 0.0) {
    throw ConfigError("optimal_schedule: renewable output must be >= 0, got " +
                      std::to_string(renewable));
  }
  const double lower = total_consumption_at(devices, params.retail_rate);
  const double upper = total_consumption_at(devices, params.sell_rate);
  if (renewable < lower) {
    return schedule_at_price(devices, params, renewable, params.retail_rate,
                             Zone::NetConsumption);
  }
  if (renewable > upper) {
    return schedule_at_price(devices, params, renewable, params.sell_rate,
                             Zone::NetProduction);
  }
  const double mu =
      solve_shadow_price(devices, params.sell_rate, params.retail_rate, renewable);
  Schedule result =
      schedule_at_price(devices, params, renewable, mu, Zone::NetZero);
  result.shadow_price = mu;
  if (std::abs(result.net_energy) > 1e-6) {
    // unreachable for a monotone balance function; guards against misuse
    throw SolverError("optimal_schedule: net-zero balance did not converge");
  }
  return result;
}

Schedule brute_force_schedule(const DeviceSet& devices, const TariffParams& params,
                              double renewable, double step) {
  validate(devices);
  validate(params);
  if (!std::isfinite(renewable) || renewable < 0.0) {
    throw ConfigError("brute_force_schedule: renewable output must be >= 0");
  }
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw ConfigError("brute_force_schedule: step must be > 0");
  }
  const std::size_t device_count = devices.devices.size();
  if (device_count > 3) {
    throw ConfigError("brute_force_schedule: at most 3 devices, got " +
                      std::to_string(device_count));
  }

  // Per-device grids: multiples of step up to the cap, plus the cap itself.
  // Unused axes collapse to the single point 0.
  std::vector<double> energy[3];
  std::vector<double> value[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (i < device_count) {
      const DeviceUtility& dev = devices.devices[i];
      const auto points =
          static_cast<std::int64_t>(std::floor(dev.max_energy / step + 1e-9));
      if (points > 50'000'000) {
        throw ConfigError("brute_force_schedule: grid too fine for device " +
                          std::to_string(i));
      }
      energy[i].reserve(static_cast<std::size_t>(points) + 2);
      for (std::int64_t k = 0; k <= points; ++k) {
        energy[i].push_back(std::min(static_cast<double>(k) * step, dev.max_energy));
      }
      if (energy[i].back() < dev.max_energy) {
        energy[i].push_back(dev.max_energy);
      }
      value[i].reserve(energy[i].size());
      for (const double d : energy[i]) {
        value[i].push_back(utility(dev, d));
      }
    } else {
      energy[i].push_back(0.0);
      value[i].push_back(0.0);
    }
  }

  const double retail = params.retail_rate;
  const double sell = params.sell_rate;
  const double fixed = params.fixed_charge;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index[3] = {0, 0, 0};
  for (std::size_t i0 = 0; i0 < energy[0].size(); ++i0) {
    const double e0 = energy[0][i0];
    const double v0 = value[0][i0];
    for (std::size_t i1 = 0; i1 < energy[1].size(); ++i1) {
      const double e01 = e0 + energy[1][i1];
      const double v01 = v0 + value[1][i1];
      const std::size_t n2 = energy[2].size();
      const double* e2 = energy[2].data();
      const double* v2 = value[2].data();
      for (std::size_t i2 = 0; i2 < n2; ++i2) {
        const double net = e01 + e2[i2] - renewable;
        const double bill = (net >= 0.0 ? retail : sell) * net + fixed;
        const double surplus = v01 + v2[i2] - bill;
        if (surplus > best) {
          best = surplus;
          best_index[0] = i0;
          best_index[1] = i1;
          best_index[2] = i2;
        }
      }
    }
  }

  Schedule result;
  result.consumption.reserve(device_count);
  double total_utility = 0.0;
  double total_energy = 0.0;
  for (std::size_t i = 0; i < device_count; ++i) {
    const double d = energy[i][best_index[i]];
    result.consumption.push_back(d);
    total_utility += utility(devices.devices[i], d);
    total_energy += d;
  }
  result.net_energy = total_energy - renewable;
  result.payment = payment(params, result.net_energy);
  result.surplus = total_utility - result.payment;
  result.zone = result.net_energy > 0.0   ? Zone::NetConsumption
                : result.net_energy < 0.0 ? Zone::NetProduction
                                          : Zone::NetZero;
  return result;
}

DevicePriority classify_device(const DeviceUtility& dev, const TariffParams& params) {
  validate(dev);
  validate(params);
  if (dev.marginal_at_zero > params.retail_rate) {
    return DevicePriority::AlwaysOn;
  }
  if (dev.marginal_at_zero >= params.sell_rate) {
    return DevicePriority::ConditionalOn;
  }
  return DevicePriority::NeverOn;
}

std::vector<DemandPoint> demand_curve(const DeviceSet& devices,
                                      const TariffParams& params,
                                      const std::vector<double>& renewable_grid) {
  for (std::size_t i = 0; i < renewable_grid.size(); ++i) {
    if (!std::isfinite(renewable_grid[i]) || renewable_grid[i] < 0.0) {
      throw ConfigError("demand_curve: renewable grid values must be >= 0");
    }
    if (i > 0 && renewable_grid[i] < renewable_grid[i - 1]) {
      throw ConfigError("demand_curve: renewable grid must be sorted ascending");
    }
  }
  std::vector<DemandPoint> curve;
  curve.reserve(renewable_grid.size());
  for (const double renewable : renewable_grid) {
    const Schedule schedule = optimal_schedule(devices, params, renewable);
    double total = 0.0;
    for (const double d : schedule.consumption) {
      total += d;
    }
    curve.push_back(DemandPoint{renewable, total, schedule.zone});
  }
  return curve;
}

}  // namespace nem
