#include "nem/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nem/errors.hpp"

namespace nem {

namespace {

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw ConfigError("gamma must be in [0,1], got " + std::to_string(gamma));
  }
}

void validate_scenario(const Scenario& scen, std::size_t position) {
  const std::string where = "scenarios[" + std::to_string(position) + "]: ";
  if (!std::isfinite(scen.renewable) || scen.renewable < 0.0) {
    throw ConfigError(where + "renewable must be >= 0");
  }
  if (!std::isfinite(scen.wholesale_price)) {
    throw ConfigError(where + "wholesale price must be finite");
  }
  if (!std::isfinite(scen.weight) || !(scen.weight > 0.0)) {
    throw ConfigError(where + "weight must be > 0");
  }
  if (scen.hour < 0 || scen.hour >= 24) {
    throw ConfigError(where + "hour must be in [0,24)");
  }
}

}  // namespace

void validate(const ScenarioSet& set) {
  if (set.scenarios.empty()) {
    throw ConfigError("scenarios: at least one scenario required");
  }
  double total_weight = 0.0;
  for (std::size_t i = 0; i < set.scenarios.size(); ++i) {
    validate_scenario(set.scenarios[i], i);
    total_weight += set.scenarios[i].weight;
  }
  if (std::abs(total_weight - 1.0) > 1e-9) {
    throw ConfigError("scenarios: weights must sum to 1, got " +
                      std::to_string(total_weight));
  }
}

void validate(const CostModel& cost) {
  if (!std::isfinite(cost.fixed_cost_per_customer) || cost.fixed_cost_per_customer < 0.0) {
    throw ConfigError("cost: fixed cost per customer must be >= 0");
  }
  if (!std::isfinite(cost.smc_adder) || cost.smc_adder < 0.0) {
    throw ConfigError("cost: smc adder must be >= 0");
  }
  if (!std::isfinite(cost.env_price) || cost.env_price < 0.0) {
    throw ConfigError("cost: environmental price must be >= 0");
  }
}

void validate(const TariffPolicy& policy) {
  validate(policy.tou);
  if (!std::isfinite(policy.prosumer_fixed_charge)) {
    throw ConfigError("tariff policy: prosumer fixed charge must be finite");
  }
  if (policy.sell_at_smc && (!std::isfinite(policy.smc_adder) || policy.smc_adder < 0.0)) {
    throw ConfigError("tariff policy: smc adder must be >= 0");
  }
}

ScenarioTariff resolve_tariff(const TariffPolicy& policy, const Scenario& scen) {
  TariffParams base = params_at(policy.tou, scen.hour);
  if (policy.sell_at_smc) {
    const double smc = scen.wholesale_price + policy.smc_adder;
    base.sell_rate = std::clamp(smc, 0.0, base.retail_rate);
  }
  TariffParams prosumer = base;
  prosumer.fixed_charge += policy.prosumer_fixed_charge;
  return ScenarioTariff{prosumer, base};
}

double customer_surplus(const DeviceSet& devices, const TariffPolicy& policy,
                        const Scenario& scen, double gamma) {
  check_gamma(gamma);
  const ScenarioTariff tariff = resolve_tariff(policy, scen);
  const Schedule prosumer = optimal_schedule(devices, tariff.prosumer, scen.renewable);
  const Schedule consumer = optimal_schedule(devices, tariff.consumer, 0.0);
  return gamma * prosumer.surplus + (1.0 - gamma) * consumer.surplus;
}

double utility_surplus(const DeviceSet& devices, const TariffPolicy& policy,
                       const CostModel& cost, const Scenario& scen, double gamma) {
  check_gamma(gamma);
  const ScenarioTariff tariff = resolve_tariff(policy, scen);
  const Schedule prosumer = optimal_schedule(devices, tariff.prosumer, scen.renewable);
  const Schedule consumer = optimal_schedule(devices, tariff.consumer, 0.0);
  const double net_demand = gamma * prosumer.net_energy + (1.0 - gamma) * consumer.net_energy;
  const double cost_to_serve =
      scen.wholesale_price * net_demand + cost.fixed_cost_per_customer;
  return gamma * prosumer.payment + (1.0 - gamma) * consumer.payment - cost_to_serve;
}

double env_benefit(const CostModel& cost, const Scenario& scen) {
  return cost.env_price * scen.renewable;
}

WelfareBreakdown social_welfare(const DeviceSet& devices, const TariffPolicy& policy,
                                const CostModel& cost, const ScenarioSet& set,
                                double gamma) {
  check_gamma(gamma);
  validate(set);
  validate(cost);
  validate(policy);

  WelfareBreakdown out;
  out.detail.reserve(set.scenarios.size());
  for (const Scenario& scen : set.scenarios) {  // fixed order for reproducibility
    const ScenarioTariff tariff = resolve_tariff(policy, scen);
    const Schedule prosumer = optimal_schedule(devices, tariff.prosumer, scen.renewable);
    const Schedule consumer = optimal_schedule(devices, tariff.consumer, 0.0);

    const double cs = gamma * prosumer.surplus + (1.0 - gamma) * consumer.surplus;
    const double net_demand =
        gamma * prosumer.net_energy + (1.0 - gamma) * consumer.net_energy;
    const double us = gamma * prosumer.payment + (1.0 - gamma) * consumer.payment -
                      (scen.wholesale_price * net_demand + cost.fixed_cost_per_customer);
    const double env = cost.env_price * scen.renewable;

    ScenarioOutcome outcome;
    outcome.index = scen.index;
    outcome.hour = scen.hour;
    outcome.renewable = scen.renewable;
    outcome.wholesale_price = scen.wholesale_price;
    outcome.weight = scen.weight;
    outcome.customer_surplus = cs;
    outcome.utility_surplus = us;
    outcome.env_benefit = env;
    outcome.welfare = cs + us + gamma * env;
    out.detail.push_back(outcome);

    out.customer_surplus += scen.weight * cs;
    out.utility_surplus += scen.weight * us;
    out.env_benefit += scen.weight * gamma * env;
  }
  out.welfare = out.customer_surplus + out.utility_surplus + out.env_benefit;
  return out;
}

}  // namespace nem
