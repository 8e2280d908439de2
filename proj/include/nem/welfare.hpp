#pragma once

#include <vector>

#include "nem/scheduler.hpp"
#include "nem/tariff.hpp"

namespace nem {

// One representative billing period within a rate-setting cycle.
struct Scenario {
  int index = 0;
  double renewable = 0.0;        // kWh produced behind the meter
  double wholesale_price = 0.0;  // $/kWh
  int hour = 0;                  // hour of day in [0,24), selects the TOU window
  double weight = 0.0;           // probability mass over the set
};

struct ScenarioSet {
  std::vector<Scenario> scenarios;
};

// Weights must be positive and sum to 1 within 1e-9; renewables non-negative.
void validate(const ScenarioSet& set);

// Utility-side service cost and externality prices. The cost of serving a net
// demand y is wholesale * y + fixed_cost_per_customer, with negative y
// credited at wholesale.
struct CostModel {
  double fixed_cost_per_customer = 0.0;  // $ per billing period per customer
  double smc_adder = 0.0;                // $/kWh over wholesale in the social marginal cost
  double env_price = 0.0;                // $/kWh of renewable production
};

void validate(const CostModel& cost);

// A fully instantiated customer-facing tariff. Customers without generation
// face the TOU schedule as-is; adopters additionally pay
// prosumer_fixed_charge each billing period. With sell_at_smc the sell rate
// tracks the scenario's wholesale price plus smc_adder, clamped into
// [0, retail] so the tariff stays valid.
struct TariffPolicy {
  TouTariff tou;
  bool sell_at_smc = false;
  double smc_adder = 0.0;
  double prosumer_fixed_charge = 0.0;
};

void validate(const TariffPolicy& policy);

struct ScenarioTariff {
  TariffParams prosumer;
  TariffParams consumer;
};

ScenarioTariff resolve_tariff(const TariffPolicy& policy, const Scenario& scen);

// Expected customer surplus in one billing period: the adopter fraction gamma
// schedules against the scenario's renewable, the rest against zero.
double customer_surplus(const DeviceSet& devices, const TariffPolicy& policy,
                        const Scenario& scen, double gamma);

// Expected utility (seller) surplus: customer payments minus the cost of
// serving the aggregate net demand.
double utility_surplus(const DeviceSet& devices, const TariffPolicy& policy,
                       const CostModel& cost, const Scenario& scen, double gamma);

// Environmental and health benefit of the scenario's renewable production.
double env_benefit(const CostModel& cost, const Scenario& scen);

struct ScenarioOutcome {
  int index = 0;
  int hour = 0;
  double renewable = 0.0;
  double wholesale_price = 0.0;
  double weight = 0.0;
  double customer_surplus = 0.0;
  double utility_surplus = 0.0;
  double env_benefit = 0.0;  // not scaled by the adoption fraction
  double welfare = 0.0;      // customer + utility + gamma * env
};

struct WelfareBreakdown {
  double customer_surplus = 0.0;  // expectation over the scenario set
  double utility_surplus = 0.0;
  double env_benefit = 0.0;       // adoption-weighted expectation
  double welfare = 0.0;           // sum of the three fields above
  std::vector<ScenarioOutcome> detail;
};

WelfareBreakdown social_welfare(const DeviceSet& devices, const TariffPolicy& policy,
                                const CostModel& cost, const ScenarioSet& set,
                                double gamma);

}  // namespace nem
