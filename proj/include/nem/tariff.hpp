#pragma once

#include <vector>

namespace nem {

// Net-metered retail tariff for one billing period. A signed net consumption
// z (consumption minus on-site generation, kWh) is billed at retail_rate when
// z >= 0 and credited at sell_rate when z < 0; fixed_charge applies either way.
struct TariffParams {
  double retail_rate = 0.0;   // $/kWh on net consumption
  double sell_rate = 0.0;     // $/kWh credited on net production
  double fixed_charge = 0.0;  // $ per billing period, may be negative
};

// Throws ConfigError unless retail_rate >= sell_rate >= 0 and all fields finite.
void validate(const TariffParams& params);

// Billing-period payment for signed net consumption (kWh). Continuous in the
// net quantity; the value at zero is the fixed charge.
double payment(const TariffParams& params, double net_energy);

// Same tariff with sell_rate = retail_rate - offset. Requires 0 <= offset <= retail_rate.
TariffParams with_sell_offset(const TariffParams& params, double offset);

// One time-of-use window [start_hour, end_hour) with its own parameters.
struct TouPeriod {
  int start_hour = 0;
  int end_hour = 24;
  TariffParams params;
};

// Hour-of-day schedule. Periods must cover [0, 24) exactly once, in order.
struct TouTariff {
  std::vector<TouPeriod> periods;
};

// Single all-day period.
TouTariff flat_tariff(const TariffParams& params);

void validate(const TouTariff& tou);

// Parameters of the unique period containing the given hour of day.
const TariffParams& params_at(const TouTariff& tou, int hour);

}  // namespace nem
