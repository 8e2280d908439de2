#pragma once

#include <optional>

#include "nem/welfare.hpp"

namespace nem {

// DER investment payback inputs. Savings degrade by `degradation` per year
// and future savings are discounted at `interest`.
struct PaybackParams {
  double install_cost = 0.0;  // $, installed system cost net of rebates
  double degradation = 0.0;   // fraction per year, in [0,1)
  double interest = 0.0;      // fraction per year, in [0,1)
  int horizon_years = 50;
};

void validate(const PaybackParams& params);

struct PaybackResult {
  // First year index (starting at 0) at which cumulative discounted savings
  // reach the install cost; absent when not reached within the horizon.
  std::optional<int> year;
  // Undiscounted install_cost / annual_saving; absent when savings are not
  // positive.
  std::optional<double> simple_years;
};

// Bill reduction an adopter realizes in one billing period relative to an
// identical customer without generation. Negative when adopter-only fixed
// charges outweigh the volumetric saving.
double bill_saving(const DeviceSet& devices, const TariffPolicy& policy,
                   const Scenario& scen);

double expected_bill_saving(const DeviceSet& devices, const TariffPolicy& policy,
                            const ScenarioSet& set);

// Adopter bill savings in excess of the utility's avoided social marginal
// cost, totaled over the rate cycle and scaled by the adoption fraction.
// Positive values are cross-subsidies borne by non-adopters.
double cost_shift(const DeviceSet& devices, const TariffPolicy& policy,
                  const CostModel& cost, const ScenarioSet& set, double gamma);

PaybackResult payback_time(double annual_saving, const PaybackParams& params);

struct MetricsReport {
  double expected_bill_saving = 0.0;  // $ per billing period
  double annual_saving = 0.0;         // $ per year
  double cost_shift = 0.0;            // $ per rate cycle
  PaybackResult payback;
};

MetricsReport policy_metrics(const DeviceSet& devices, const TariffPolicy& policy,
                             const CostModel& cost, const ScenarioSet& set,
                             double gamma, const PaybackParams& payback,
                             double periods_per_day);

}  // namespace nem
