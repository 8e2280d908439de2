#include "nem/metrics.hpp"

#include <cmath>
#include <string>

#include "nem/errors.hpp"

namespace nem {

void validate(const PaybackParams& params) {
  if (!std::isfinite(params.install_cost) || !(params.install_cost > 0.0)) {
    throw ConfigError("payback: install cost must be > 0");
  }
  if (!std::isfinite(params.degradation) || params.degradation < 0.0 ||
      params.degradation >= 1.0) {
    throw ConfigError("payback: degradation must be in [0,1)");
  }
  if (!std::isfinite(params.interest) || params.interest < 0.0 ||
      params.interest >= 1.0) {
    throw ConfigError("payback: interest must be in [0,1)");
  }
  if (params.horizon_years < 1) {
    throw ConfigError("payback: horizon must be >= 1 year");
  }
}

double bill_saving(const DeviceSet& devices, const TariffPolicy& policy,
                   const Scenario& scen) {
  const ScenarioTariff tariff = resolve_tariff(policy, scen);
  const Schedule consumer = optimal_schedule(devices, tariff.consumer, 0.0);
  const Schedule prosumer = optimal_schedule(devices, tariff.prosumer, scen.renewable);
  return consumer.payment - prosumer.payment;
}

double expected_bill_saving(const DeviceSet& devices, const TariffPolicy& policy,
                            const ScenarioSet& set) {
  validate(set);
  double total = 0.0;
  for (const Scenario& scen : set.scenarios) {
    total += scen.weight * bill_saving(devices, policy, scen);
  }
  return total;
}

double cost_shift(const DeviceSet& devices, const TariffPolicy& policy,
                  const CostModel& cost, const ScenarioSet& set, double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw ConfigError("cost_shift: gamma must be in [0,1]");
  }
  validate(set);
  validate(cost);
  // Totaled over the rate cycle: the per-scenario expectation scaled back up
  // by the number of billing periods.
  const double periods = static_cast<double>(set.scenarios.size());
  double total = 0.0;
  for (const Scenario& scen : set.scenarios) {
    const double smc = scen.wholesale_price + cost.smc_adder;
    total += gamma * scen.weight * periods *
             (bill_saving(devices, policy, scen) - smc * scen.renewable);
  }
  return total;
}

PaybackResult payback_time(double annual_saving, const PaybackParams& params) {
  validate(params);
  if (!std::isfinite(annual_saving)) {
    throw ConfigError("payback_time: annual saving must be finite");
  }
  PaybackResult result;
  if (!(annual_saving > 0.0)) {
    return result;  // no payback without positive savings
  }
  result.simple_years = params.install_cost / annual_saving;
  const double year_factor = (1.0 - params.degradation) / (1.0 + params.interest);
  double cumulative = 0.0;
  double factor = 1.0;
  for (int year = 0; year <= params.horizon_years; ++year) {
    cumulative += factor * annual_saving;
    if (cumulative >= params.install_cost) {
      result.year = year;
      break;
    }
    factor *= year_factor;
  }
  return result;
}

MetricsReport policy_metrics(const DeviceSet& devices, const TariffPolicy& policy,
                             const CostModel& cost, const ScenarioSet& set,
                             double gamma, const PaybackParams& payback,
                             double periods_per_day) {
  if (!(periods_per_day > 0.0) || !std::isfinite(periods_per_day)) {
    throw ConfigError("policy_metrics: periods_per_day must be > 0");
  }
  MetricsReport report;
  report.expected_bill_saving = expected_bill_saving(devices, policy, set);
  report.annual_saving = report.expected_bill_saving * periods_per_day * 365.0;
  report.cost_shift = cost_shift(devices, policy, cost, set, gamma);
  report.payback = payback_time(report.annual_saving, payback);
  return report;
}

}  // namespace nem
