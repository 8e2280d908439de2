#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nem/welfare.hpp"

namespace nem {

enum class SellRule { EqualToRetail, RetailMinusOffset, SocialMarginalCost };
enum class FixedChargeRule { None, Uniform, ProsumerCapacityCharge };

struct TouSpec {
  int peak_start_hour = 16;
  int peak_end_hour = 21;
  double peak_ratio = 1.5;  // peak retail = ratio * base retail, ratio >= 1
};

// Everything about a tariff except the base retail rate, which the break-even
// solve determines. The capacity charge is quoted per kW of installed PV per
// month and prorated to a billing period.
struct PolicyTemplate {
  std::string name;
  SellRule sell_rule = SellRule::EqualToRetail;
  double sell_offset = 0.0;            // $/kWh, RetailMinusOffset only
  FixedChargeRule fixed_rule = FixedChargeRule::None;
  double uniform_fixed_charge = 0.0;   // $ per billing period, Uniform only
  double cbc_rate_per_kw_month = 0.0;  // $/kW/month, ProsumerCapacityCharge only
  double pv_capacity_kw = 0.0;         // kW, > 0 when the capacity charge applies
  double days_in_month = 30.0;
  double periods_per_day = 24.0;       // billing periods per day
  std::optional<TouSpec> tou;
};

void validate(const PolicyTemplate& tmpl);

// Concrete tariff at the given base retail rate. Throws ConfigError when the
// rate cannot realize the template (e.g. sell offset above the retail rate).
TariffPolicy instantiate(const PolicyTemplate& tmpl, double retail_rate,
                         const CostModel& cost);

struct SolverOptions {
  double bracket_lo = 0.001;    // $/kWh
  double bracket_hi = 5.0;      // $/kWh
  double breakeven_tol = 1e-6;  // $ on the expected utility surplus
  double retail_tol = 1e-12;    // $/kWh bisection bracket width
  int prescan_points = 64;      // intervals in the sign-change pre-scan
  int max_iterations = 200;
};

struct RateSolution {
  std::string policy_name;
  double gamma = 0.0;
  bool feasible = false;
  double retail_rate = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();  // expected utility surplus at the rate
  int iterations = 0;
  TariffPolicy tariff;       // populated when feasible
  WelfareBreakdown welfare;  // populated when feasible
  std::string message;       // diagnostic when infeasible
};

// Expected utility surplus under the template instantiated at the given rate.
// Break-even is the root of this function in the retail rate.
double breakeven_residual(const PolicyTemplate& tmpl, double retail_rate,
                          const DeviceSet& devices, const CostModel& cost,
                          const ScenarioSet& set, double gamma);

// Finds the smallest retail rate in the bracket where the expected utility
// surplus crosses zero: a coarse pre-scan locates the first sign change,
// bisection refines it. No sign change anywhere marks the cell infeasible.
RateSolution solve_breakeven(const PolicyTemplate& tmpl, const DeviceSet& devices,
                             const CostModel& cost, const ScenarioSet& set,
                             double gamma, const SolverOptions& options = {});

// Break-even solve per adoption fraction; infeasible entries are flagged in
// the result rather than raised.
std::vector<RateSolution> sweep_adoption(const PolicyTemplate& tmpl,
                                         const DeviceSet& devices, const CostModel& cost,
                                         const ScenarioSet& set,
                                         const std::vector<double>& gammas,
                                         const SolverOptions& options = {});

}  // namespace nem
