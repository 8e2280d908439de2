#include "nem/study.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nem/errors.hpp"
#include "nem/timeseries.hpp"

namespace nem {

namespace {

std::string fmt(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError(path.string() + ": cannot open for writing");
  }
  out << content;
  if (!out) {
    throw DataError(path.string() + ": write failed");
  }
}

}  // namespace

double representative_sell(const RateSolution& solution, const ScenarioSet& set) {
  if (solution.tariff.sell_at_smc) {
    double total = 0.0;
    for (const Scenario& scen : set.scenarios) {
      total += scen.weight * (scen.wholesale_price + solution.tariff.smc_adder);
    }
    return total;
  }
  return params_at(solution.tariff.tou, 0).sell_rate;
}

StudyResult run_study(const StudyConfig& config, const std::filesystem::path& out_dir) {
  const auto prices = load_timeseries(config.price_path, SeriesKind::Price);
  const auto generation = load_timeseries(config.generation_path, SeriesKind::Generation);

  StudyResult result;
  result.scenarios = build_scenarios(prices, generation, config.resample_hours);

  std::string rates_csv = "gamma,policy,retail,sell,fixed,welfare,cs,us,env,feasible\n";
  std::string welfare_csv =
      "policy,gamma,scenario,hour,renewable,wholesale,weight,cs,us,env,welfare\n";
  std::string metrics_csv =
      "policy,gamma,expected_bill_saving,annual_saving,cost_shift,"
      "payback_simple_years,payback_npv_years\n";
  nlohmann::ordered_json summary;
  summary["scenario_count"] = result.scenarios.scenarios.size();
  summary["periods_per_day"] = config.periods_per_day();
  summary["solver"] = {
      {"bracket", {config.solver.bracket_lo, config.solver.bracket_hi}},
      {"breakeven_tol", config.solver.breakeven_tol},
      {"retail_tol", config.solver.retail_tol},
      {"prescan_points", config.solver.prescan_points},
      {"max_iterations", config.solver.max_iterations},
  };
  summary["cells"] = nlohmann::ordered_json::array();

  for (const PolicyTemplate& tmpl : config.policies) {
    for (const double gamma : config.gammas) {
      StudyCell cell;
      cell.rate = solve_breakeven(tmpl, config.devices, config.cost, result.scenarios,
                                  gamma, config.solver);

      nlohmann::ordered_json diag;
      diag["policy"] = tmpl.name;
      diag["gamma"] = gamma;
      diag["feasible"] = cell.rate.feasible;
      diag["iterations"] = cell.rate.iterations;
      if (cell.rate.feasible) {
        diag["retail"] = cell.rate.retail_rate;
        diag["residual"] = cell.rate.residual;
      } else {
        diag["message"] = cell.rate.message;
      }
      summary["cells"].push_back(diag);

      if (cell.rate.feasible) {
        cell.metrics =
            policy_metrics(config.devices, cell.rate.tariff, config.cost,
                           result.scenarios, gamma, config.payback,
                           config.periods_per_day());

        const TariffParams& base = params_at(cell.rate.tariff.tou, 0);
        const double prosumer_fixed =
            base.fixed_charge + cell.rate.tariff.prosumer_fixed_charge;
        rates_csv += fmt(gamma) + "," + tmpl.name + "," + fmt(cell.rate.retail_rate) +
                     "," + fmt(representative_sell(cell.rate, result.scenarios)) + "," +
                     fmt(prosumer_fixed) + "," + fmt(cell.rate.welfare.welfare) + "," +
                     fmt(cell.rate.welfare.customer_surplus) + "," +
                     fmt(cell.rate.welfare.utility_surplus) + "," +
                     fmt(cell.rate.welfare.env_benefit) + ",1\n";

        for (const ScenarioOutcome& outcome : cell.rate.welfare.detail) {
          welfare_csv += tmpl.name + "," + fmt(gamma) + "," +
                         std::to_string(outcome.index) + "," +
                         std::to_string(outcome.hour) + "," + fmt(outcome.renewable) +
                         "," + fmt(outcome.wholesale_price) + "," + fmt(outcome.weight) +
                         "," + fmt(outcome.customer_surplus) + "," +
                         fmt(outcome.utility_surplus) + "," + fmt(outcome.env_benefit) +
                         "," + fmt(outcome.welfare) + "\n";
        }

        const std::string simple = cell.metrics.payback.simple_years
                                       ? fmt(*cell.metrics.payback.simple_years)
                                       : "";
        const std::string npv = cell.metrics.payback.year
                                    ? std::to_string(*cell.metrics.payback.year)
                                    : "";
        metrics_csv += tmpl.name + "," + fmt(gamma) + "," +
                       fmt(cell.metrics.expected_bill_saving) + "," +
                       fmt(cell.metrics.annual_saving) + "," +
                       fmt(cell.metrics.cost_shift) + "," + simple + "," + npv + "\n";
      } else {
        rates_csv += fmt(gamma) + "," + tmpl.name + ",,,,,,,,0\n";
        metrics_csv += tmpl.name + "," + fmt(gamma) + ",,,,,\n";
      }
      result.cells.push_back(std::move(cell));
    }
  }

  // Stage everything, then move into place; a failure leaves no partial reports.
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path staging = out_dir / ".staging";
  std::error_code ignored;
  fs::remove_all(staging, ignored);
  fs::create_directories(staging);
  try {
    write_file(staging / "rates.csv", rates_csv);
    write_file(staging / "welfare.csv", welfare_csv);
    write_file(staging / "metrics.csv", metrics_csv);
    write_file(staging / "summary.json", summary.dump(2) + "\n");
    for (const char* name : {"rates.csv", "welfare.csv", "metrics.csv", "summary.json"}) {
      fs::rename(staging / name, out_dir / name);
    }
    fs::remove_all(staging);
  } catch (...) {
    fs::remove_all(staging, ignored);
    throw;
  }
  return result;
}

}  // namespace nem
