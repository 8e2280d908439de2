#include "nem/ramsey.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nem/errors.hpp"

namespace nem {

void validate(const PolicyTemplate& tmpl) {
  if (!std::isfinite(tmpl.sell_offset) || tmpl.sell_offset < 0.0) {
    throw ConfigError("policy '" + tmpl.name + "': sell offset must be >= 0");
  }
  if (!std::isfinite(tmpl.uniform_fixed_charge) || tmpl.uniform_fixed_charge < 0.0) {
    throw ConfigError("policy '" + tmpl.name + "': uniform fixed charge must be >= 0");
  }
  if (tmpl.fixed_rule == FixedChargeRule::ProsumerCapacityCharge) {
    if (!std::isfinite(tmpl.cbc_rate_per_kw_month) || tmpl.cbc_rate_per_kw_month < 0.0) {
      throw ConfigError("policy '" + tmpl.name + "': capacity charge rate must be >= 0");
    }
    if (!std::isfinite(tmpl.pv_capacity_kw) || !(tmpl.pv_capacity_kw > 0.0)) {
      throw ConfigError("policy '" + tmpl.name +
                        "': pv capacity must be > 0 when the capacity charge applies");
    }
  }
  if (!(tmpl.days_in_month > 0.0) || !(tmpl.periods_per_day > 0.0)) {
    throw ConfigError("policy '" + tmpl.name +
                      "': days_in_month and periods_per_day must be > 0");
  }
  if (tmpl.tou) {
    const TouSpec& tou = *tmpl.tou;
    if (tou.peak_start_hour < 0 || tou.peak_end_hour > 24 ||
        tou.peak_start_hour >= tou.peak_end_hour) {
      throw ConfigError("policy '" + tmpl.name + "': peak window [" +
                        std::to_string(tou.peak_start_hour) + "," +
                        std::to_string(tou.peak_end_hour) + ") is not a valid hour range");
    }
    if (!std::isfinite(tou.peak_ratio) || tou.peak_ratio < 1.0) {
      throw ConfigError("policy '" + tmpl.name + "': peak ratio must be >= 1");
    }
  }
}

TariffPolicy instantiate(const PolicyTemplate& tmpl, double retail_rate,
                         const CostModel& cost) {
  validate(tmpl);
  validate(cost);
  if (!std::isfinite(retail_rate) || !(retail_rate > 0.0)) {
    throw ConfigError("policy '" + tmpl.name + "': retail rate must be > 0");
  }

  const double uniform_fixed =
      tmpl.fixed_rule == FixedChargeRule::Uniform ? tmpl.uniform_fixed_charge : 0.0;
  const auto window_params = [&](double rate) {
    double sell = 0.0;
    switch (tmpl.sell_rule) {
      case SellRule::EqualToRetail:
        sell = rate;
        break;
      case SellRule::RetailMinusOffset:
        if (tmpl.sell_offset > rate) {
          throw ConfigError("policy '" + tmpl.name + "': sell offset " +
                            std::to_string(tmpl.sell_offset) + " exceeds retail rate " +
                            std::to_string(rate));
        }
        sell = rate - tmpl.sell_offset;
        break;
      case SellRule::SocialMarginalCost:
        sell = 0.0;  // placeholder; resolved per scenario from the wholesale price
        break;
    }
    return TariffParams{rate, sell, uniform_fixed};
  };

  TariffPolicy policy;
  if (tmpl.tou) {
    const TouSpec& tou = *tmpl.tou;
    const TariffParams off_peak = window_params(retail_rate);
    const TariffParams peak = window_params(tou.peak_ratio * retail_rate);
    std::vector<TouPeriod> periods;
    if (tou.peak_start_hour > 0) {
      periods.push_back(TouPeriod{0, tou.peak_start_hour, off_peak});
    }
    periods.push_back(TouPeriod{tou.peak_start_hour, tou.peak_end_hour, peak});
    if (tou.peak_end_hour < 24) {
      periods.push_back(TouPeriod{tou.peak_end_hour, 24, off_peak});
    }
    policy.tou = TouTariff{periods};
  } else {
    policy.tou = flat_tariff(window_params(retail_rate));
  }
  if (tmpl.sell_rule == SellRule::SocialMarginalCost) {
    policy.sell_at_smc = true;
    policy.smc_adder = cost.smc_adder;
  }
  if (tmpl.fixed_rule == FixedChargeRule::ProsumerCapacityCharge) {
    policy.prosumer_fixed_charge = tmpl.cbc_rate_per_kw_month * tmpl.pv_capacity_kw /
                                   (tmpl.days_in_month * tmpl.periods_per_day);
  }
  validate(policy);
  return policy;
}

double breakeven_residual(const PolicyTemplate& tmpl, double retail_rate,
                          const DeviceSet& devices, const CostModel& cost,
                          const ScenarioSet& set, double gamma) {
  validate(set);
  const TariffPolicy policy = instantiate(tmpl, retail_rate, cost);
  double total = 0.0;
  for (const Scenario& scen : set.scenarios) {
    total += scen.weight * utility_surplus(devices, policy, cost, scen, gamma);
  }
  return total;
}

RateSolution solve_breakeven(const PolicyTemplate& tmpl, const DeviceSet& devices,
                             const CostModel& cost, const ScenarioSet& set,
                             double gamma, const SolverOptions& options) {
  validate(tmpl);
  validate(devices);
  validate(cost);
  validate(set);
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw ConfigError("solve_breakeven: gamma must be in [0,1]");
  }
  if (!std::isfinite(options.bracket_lo) || !std::isfinite(options.bracket_hi) ||
      !(options.bracket_lo > 0.0) || !(options.bracket_lo < options.bracket_hi)) {
    throw SolverError("solve_breakeven: invalid bracket [" +
                      std::to_string(options.bracket_lo) + ", " +
                      std::to_string(options.bracket_hi) + "]");
  }
  if (options.prescan_points < 1 || options.max_iterations < 1 ||
      !(options.retail_tol > 0.0) || !(options.breakeven_tol > 0.0)) {
    throw SolverError("solve_breakeven: invalid solver options");
  }

  // Rates at the low end of the bracket may not realize the template (e.g. a
  // sell offset above the rate); such points are excluded from the scan.
  const auto residual_at = [&](double rate) -> std::optional<double> {
    double value = 0.0;
    try {
      value = breakeven_residual(tmpl, rate, devices, cost, set, gamma);
    } catch (const ConfigError&) {
      return std::nullopt;
    }
    if (!std::isfinite(value)) {
      throw SolverError("solve_breakeven: non-finite residual at retail rate " +
                        std::to_string(rate));
    }
    return value;
  };

  RateSolution solution;
  solution.policy_name = tmpl.name;
  solution.gamma = gamma;

  const int intervals = options.prescan_points;
  std::vector<double> rate_grid(intervals + 1);
  std::vector<std::optional<double>> residuals(intervals + 1);
  for (int k = 0; k <= intervals; ++k) {
    rate_grid[k] = options.bracket_lo +
                   (options.bracket_hi - options.bracket_lo) * k / intervals;
    residuals[k] = residual_at(rate_grid[k]);
  }

  // First sign change (scanning upward) selects the smallest break-even rate.
  int found = -1;
  bool any_valid = false;
  for (int k = 0; k < intervals; ++k) {
    if (!residuals[k] || !residuals[k + 1]) {
      continue;
    }
    any_valid = true;
    if (*residuals[k] * *residuals[k + 1] <= 0.0) {
      found = k;
      break;
    }
  }
  if (found < 0) {
    solution.feasible = false;
    solution.message = any_valid
                           ? "expected utility surplus has no zero crossing in the bracket"
                           : "template not realizable anywhere in the bracket";
    return solution;
  }

  double lo = rate_grid[found];
  double hi = rate_grid[found + 1];
  double residual_lo = *residuals[found];
  int iterations = 0;
  while (hi - lo > options.retail_tol && iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const std::optional<double> residual_mid = residual_at(mid);
    if (!residual_mid) {
      throw SolverError("solve_breakeven: template became unrealizable inside the "
                        "bisection interval");
    }
    ++iterations;
    if (residual_lo * *residual_mid <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      residual_lo = *residual_mid;
    }
  }

  const double root = 0.5 * (lo + hi);
  const std::optional<double> residual_root = residual_at(root);
  solution.retail_rate = root;
  solution.iterations = iterations;
  solution.residual = residual_root ? *residual_root
                                    : std::numeric_limits<double>::quiet_NaN();
  solution.feasible =
      residual_root && std::abs(*residual_root) <= options.breakeven_tol;
  if (solution.feasible) {
    solution.tariff = instantiate(tmpl, root, cost);
    solution.welfare = social_welfare(devices, solution.tariff, cost, set, gamma);
  } else {
    solution.message = "bisection did not reach the break-even tolerance";
  }
  return solution;
}

std::vector<RateSolution> sweep_adoption(const PolicyTemplate& tmpl,
                                         const DeviceSet& devices, const CostModel& cost,
                                         const ScenarioSet& set,
                                         const std::vector<double>& gammas,
                                         const SolverOptions& options) {
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!std::isfinite(gammas[i]) || gammas[i] < 0.0 || gammas[i] > 1.0) {
      throw ConfigError("sweep_adoption: gamma values must be in [0,1]");
    }
    if (i > 0 && gammas[i] < gammas[i - 1]) {
      throw ConfigError("sweep_adoption: gamma values must be ascending");
    }
  }
  std::vector<RateSolution> solutions;
  solutions.reserve(gammas.size());
  for (const double gamma : gammas) {
    solutions.push_back(solve_breakeven(tmpl, devices, cost, set, gamma, options));
  }
  return solutions;
}

}  // namespace nem
