#include "nem/tariff.hpp"

#include <cmath>
#include <string>

#include "nem/errors.hpp"

namespace nem {

void validate(const TariffParams& params) {
  if (!std::isfinite(params.retail_rate) || !std::isfinite(params.sell_rate) ||
      !std::isfinite(params.fixed_charge)) {
    throw ConfigError("tariff: rates and fixed charge must be finite");
  }
  if (params.retail_rate < 0.0) {
    throw ConfigError("tariff: retail rate must be >= 0, got " +
                      std::to_string(params.retail_rate));
  }
  if (params.sell_rate < 0.0) {
    throw ConfigError("tariff: sell rate must be >= 0, got " +
                      std::to_string(params.sell_rate));
  }
  if (params.sell_rate > params.retail_rate) {
    throw ConfigError("tariff: sell rate " + std::to_string(params.sell_rate) +
                      " exceeds retail rate " + std::to_string(params.retail_rate));
  }
}

double payment(const TariffParams& params, double net_energy) {
  if (!std::isfinite(net_energy)) {
    throw ConfigError("payment: net energy must be finite");
  }
  // Net consumption of exactly zero sits on the retail branch; both branches
  // agree there, so only the effective rate label differs.
  const double rate = net_energy >= 0.0 ? params.retail_rate : params.sell_rate;
  return rate * net_energy + params.fixed_charge;
}

TariffParams with_sell_offset(const TariffParams& params, double offset) {
  if (!std::isfinite(offset) || offset < 0.0) {
    throw ConfigError("with_sell_offset: offset must be >= 0");
  }
  if (offset > params.retail_rate) {
    throw ConfigError("with_sell_offset: offset " + std::to_string(offset) +
                      " exceeds retail rate " + std::to_string(params.retail_rate));
  }
  TariffParams out = params;
  out.sell_rate = params.retail_rate - offset;
  return out;
}

TouTariff flat_tariff(const TariffParams& params) {
  return TouTariff{{TouPeriod{0, 24, params}}};
}

void validate(const TouTariff& tou) {
  if (tou.periods.empty()) {
    throw ConfigError("tou: at least one period required");
  }
  int cursor = 0;
  for (const TouPeriod& period : tou.periods) {
    if (period.start_hour != cursor) {
      throw ConfigError("tou: periods must cover [0,24) without gaps or overlap; "
                        "expected start hour " + std::to_string(cursor) + ", got " +
                        std::to_string(period.start_hour));
    }
    if (period.end_hour <= period.start_hour || period.end_hour > 24) {
      throw ConfigError("tou: period [" + std::to_string(period.start_hour) + "," +
                        std::to_string(period.end_hour) + ") is not a valid hour range");
    }
    validate(period.params);
    cursor = period.end_hour;
  }
  if (cursor != 24) {
    throw ConfigError("tou: periods must end at hour 24, got " + std::to_string(cursor));
  }
}

const TariffParams& params_at(const TouTariff& tou, int hour) {
  if (hour < 0 || hour >= 24) {
    throw ConfigError("params_at: hour must be in [0,24), got " + std::to_string(hour));
  }
  for (const TouPeriod& period : tou.periods) {
    if (hour >= period.start_hour && hour < period.end_hour) {
      return period.params;
    }
  }
  throw ConfigError("params_at: tariff periods do not cover hour " + std::to_string(hour));
}

}  // namespace nem
