// nemtool — net energy metering tariff analysis CLI.
//
// Subcommands:
//   schedule    optimal consumption bundle for a tariff, device set and renewable output
//   thresholds  the two renewable thresholds of the optimal policy
//   classify    per-device consumption pattern under a tariff
//   rates       break-even retail rate per policy and adoption fraction (CSV to stdout)
//   study       full pipeline: data -> scenarios -> rates -> welfare/metrics reports
//   payback     payback time for a given annual bill saving
//   fixture     synthetic price/solar CSV inputs for experiments
//
// Exit codes: 0 success, 2 config error, 3 data error, 4 solver error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nem/config.hpp"
#include "nem/errors.hpp"
#include "nem/study.hpp"
#include "nem/timeseries.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json schedule_to_json(const nem::Schedule& schedule) {
  ordered_json out;
  out["consumption"] = schedule.consumption;
  out["zone"] = nem::to_string(schedule.zone);
  if (schedule.shadow_price) {
    out["shadow_price"] = *schedule.shadow_price;
  } else {
    out["shadow_price"] = nullptr;
  }
  out["net"] = schedule.net_energy;
  out["surplus"] = schedule.surplus;
  out["payment"] = schedule.payment;
  return out;
}

std::string fmt(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

struct TariffFlags {
  double retail = 0.0;
  double sell = 0.0;
  double fixed = 0.0;
};

void add_tariff_flags(CLI::App* cmd, TariffFlags* flags) {
  cmd->add_option("--retail", flags->retail, "Retail rate, $/kWh")->required();
  cmd->add_option("--sell", flags->sell, "Sell rate, $/kWh")->required();
  cmd->add_option("--fixed", flags->fixed, "Fixed charge, $/billing period");
}

int run(int argc, char** argv) {
  CLI::App app{"Net energy metering tariff analysis"};
  app.require_subcommand(1);

  // schedule
  auto* schedule_cmd =
      app.add_subcommand("schedule", "Optimal consumption bundle for one billing period");
  std::string schedule_config;
  TariffFlags schedule_tariff;
  double renewable = 0.0;
  schedule_cmd->add_option("--config", schedule_config, "Config JSON with a devices array")
      ->required();
  add_tariff_flags(schedule_cmd, &schedule_tariff);
  schedule_cmd->add_option("--renewable,-r", renewable, "Renewable output, kWh")
      ->required();

  // thresholds
  auto* thresholds_cmd =
      app.add_subcommand("thresholds", "Renewable thresholds of the optimal policy");
  std::string thresholds_config;
  TariffFlags thresholds_tariff;
  thresholds_cmd->add_option("--config", thresholds_config, "Config JSON with a devices array")
      ->required();
  add_tariff_flags(thresholds_cmd, &thresholds_tariff);

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Consumption pattern of each device under a tariff");
  std::string classify_config;
  TariffFlags classify_tariff;
  classify_cmd->add_option("--config", classify_config, "Config JSON with a devices array")
      ->required();
  add_tariff_flags(classify_cmd, &classify_tariff);

  // rates
  auto* rates_cmd =
      app.add_subcommand("rates", "Break-even retail rates per policy (CSV to stdout)");
  std::string rates_config;
  std::vector<double> rates_gammas;
  rates_cmd->add_option("--config", rates_config, "Study config JSON")->required();
  rates_cmd->add_option("--gamma", rates_gammas, "Adoption fractions (overrides config)")
      ->delimiter(',');

  // study
  auto* study_cmd = app.add_subcommand("study", "Run the full study pipeline");
  std::string study_config;
  std::string study_out;
  study_cmd->add_option("--config", study_config, "Study config JSON")->required();
  study_cmd->add_option("--out", study_out, "Output directory (overrides config)");

  // payback
  auto* payback_cmd = app.add_subcommand("payback", "Payback time for an annual saving");
  std::string payback_config;
  double annual_saving = 0.0;
  double install_cost = 0.0;
  double degradation = 0.0;
  double interest = 0.0;
  int horizon = 50;
  payback_cmd->add_option("--saving", annual_saving, "Annual bill saving, $")->required();
  auto* payback_config_opt =
      payback_cmd->add_option("--config", payback_config, "Config JSON with a payback object");
  auto* install_opt =
      payback_cmd->add_option("--install-cost", install_cost, "Installed cost, $");
  payback_cmd->add_option("--degradation", degradation, "Annual output degradation");
  payback_cmd->add_option("--interest", interest, "Annual interest rate");
  payback_cmd->add_option("--horizon", horizon, "Horizon cap, years");
  install_opt->excludes(payback_config_opt);

  // fixture
  auto* fixture_cmd =
      app.add_subcommand("fixture", "Write synthetic price and solar CSV inputs");
  std::string fixture_out = ".";
  int fixture_days = 1;
  double fixture_price = 0.05;
  double fixture_peak_kw = 2.0;
  double fixture_shape = 1.0;
  double fixture_jitter = 0.0;
  unsigned fixture_seed = 0;
  fixture_cmd->add_option("--out", fixture_out, "Output directory");
  fixture_cmd->add_option("--days", fixture_days, "Number of days")->check(CLI::Range(1, 365));
  fixture_cmd->add_option("--price", fixture_price, "Flat wholesale price, $/kWh");
  fixture_cmd->add_option("--peak-kw", fixture_peak_kw, "Midday solar peak, kW");
  fixture_cmd->add_option("--shape", fixture_shape, "Sine exponent; larger narrows the peak")
      ->check(CLI::PositiveNumber);
  fixture_cmd->add_option("--jitter", fixture_jitter, "Relative noise amplitude");
  fixture_cmd->add_option("--seed", fixture_seed, "Seed for the jitter draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  }

  if (schedule_cmd->parsed()) {
    const nem::DeviceSet devices = nem::load_devices(schedule_config);
    const nem::TariffParams params{schedule_tariff.retail, schedule_tariff.sell,
                                   schedule_tariff.fixed};
    nem::validate(params);
    const nem::Schedule schedule = nem::optimal_schedule(devices, params, renewable);
    std::cout << schedule_to_json(schedule).dump(2) << "\n";
    return 0;
  }

  if (thresholds_cmd->parsed()) {
    const nem::DeviceSet devices = nem::load_devices(thresholds_config);
    const nem::TariffParams params{thresholds_tariff.retail, thresholds_tariff.sell,
                                   thresholds_tariff.fixed};
    nem::validate(params);
    const nem::Thresholds th = nem::thresholds(devices, params);
    ordered_json out;
    out["lower"] = th.lower;
    out["upper"] = th.upper;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (classify_cmd->parsed()) {
    const nem::DeviceSet devices = nem::load_devices(classify_config);
    const nem::TariffParams params{classify_tariff.retail, classify_tariff.sell,
                                   classify_tariff.fixed};
    nem::validate(params);
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < devices.devices.size(); ++i) {
      ordered_json entry;
      entry["device"] = i;
      entry["priority"] = nem::to_string(nem::classify_device(devices.devices[i], params));
      out.push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (rates_cmd->parsed()) {
    const nem::StudyConfig config = nem::load_study_config(rates_config);
    const auto prices = nem::load_timeseries(config.price_path, nem::SeriesKind::Price);
    const auto generation =
        nem::load_timeseries(config.generation_path, nem::SeriesKind::Generation);
    const nem::ScenarioSet scenarios =
        nem::build_scenarios(prices, generation, config.resample_hours);
    const std::vector<double>& gammas =
        rates_gammas.empty() ? config.gammas : rates_gammas;
    std::cout << "gamma,policy,retail,sell,fixed,feasible\n";
    bool any_feasible = false;
    for (const nem::PolicyTemplate& tmpl : config.policies) {
      const auto solutions = nem::sweep_adoption(tmpl, config.devices, config.cost,
                                                 scenarios, gammas, config.solver);
      for (const nem::RateSolution& sol : solutions) {
        if (sol.feasible) {
          any_feasible = true;
          const nem::TariffParams& base = nem::params_at(sol.tariff.tou, 0);
          std::cout << fmt(sol.gamma) << "," << tmpl.name << ","
                    << fmt(sol.retail_rate) << ","
                    << fmt(nem::representative_sell(sol, scenarios)) << ","
                    << fmt(base.fixed_charge + sol.tariff.prosumer_fixed_charge)
                    << ",1\n";
        } else {
          std::cout << fmt(sol.gamma) << "," << tmpl.name << ",,,,0\n";
        }
      }
    }
    // break-even unattainable everywhere: signal it to callers
    return any_feasible ? 0 : 4;
  }

  if (study_cmd->parsed()) {
    const nem::StudyConfig config = nem::load_study_config(study_config);
    const std::filesystem::path out_dir =
        study_out.empty() ? config.output_dir : std::filesystem::path(study_out);
    nem::run_study(config, out_dir);
    std::cout << "reports written to " << out_dir.string() << "\n";
    return 0;
  }

  if (payback_cmd->parsed()) {
    nem::PaybackParams params;
    if (!payback_config.empty()) {
      params = nem::load_payback_params(payback_config);
    } else {
      params.install_cost = install_cost;
      params.degradation = degradation;
      params.interest = interest;
      params.horizon_years = horizon;
      nem::validate(params);
    }
    const nem::PaybackResult result = nem::payback_time(annual_saving, params);
    ordered_json out;
    out["annual_saving"] = annual_saving;
    out["install_cost"] = params.install_cost;
    if (result.year) {
      out["payback_year"] = *result.year;
    } else {
      out["payback_year"] = nullptr;
    }
    if (result.simple_years) {
      out["simple_years"] = *result.simple_years;
    } else {
      out["simple_years"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (fixture_cmd->parsed()) {
    namespace fs = std::filesystem;
    fs::create_directories(fixture_out);
    std::mt19937 rng(fixture_seed);
    std::uniform_real_distribution<double> noise(-fixture_jitter, fixture_jitter);

    const auto stamp = [](int day, int hour, int minute) {
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "2019-06-%02dT%02d:%02d:00", day + 1, hour,
                    minute);
      return std::string(buffer);
    };

    std::ofstream prices(fs::path(fixture_out) / "prices.csv");
    prices << "timestamp,value\n";
    for (int day = 0; day < fixture_days; ++day) {
      for (int hour = 0; hour < 24; ++hour) {
        double price = fixture_price;
        if (fixture_jitter > 0.0) {
          price *= 1.0 + noise(rng);
        }
        prices << stamp(day, hour, 0) << "," << fmt(price) << "\n";
      }
    }

    // 15-minute solar rows: a half-sine between 06:00 and 18:00.
    std::ofstream solar(fs::path(fixture_out) / "solar.csv");
    solar << "timestamp,value\n";
    const double pi = std::acos(-1.0);
    for (int day = 0; day < fixture_days; ++day) {
      for (int slot = 0; slot < 96; ++slot) {
        const double hour_mid = slot * 0.25 + 0.125;
        double power = 0.0;
        if (hour_mid > 6.0 && hour_mid < 18.0) {
          power = fixture_peak_kw *
                  std::pow(std::sin(pi * (hour_mid - 6.0) / 12.0), fixture_shape);
        }
        if (fixture_jitter > 0.0 && power > 0.0) {
          power *= std::max(0.0, 1.0 + noise(rng));
        }
        solar << stamp(day, slot / 4, (slot % 4) * 15) << "," << fmt(power * 0.25)
              << "\n";
      }
    }
    std::cout << "fixture written to " << fixture_out << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nem::ConfigError& err) {
    nlohmann::ordered_json record;
    record["error"] = {{"category", "config"}, {"message", err.what()}};
    std::cerr << record.dump() << "\n";
    return 2;
  } catch (const nem::DataError& err) {
    nlohmann::ordered_json record;
    record["error"] = {{"category", "data"}, {"message", err.what()}};
    std::cerr << record.dump() << "\n";
    return 3;
  } catch (const nem::SolverError& err) {
    nlohmann::ordered_json record;
    record["error"] = {{"category", "solver"}, {"message", err.what()}};
    std::cerr << record.dump() << "\n";
    return 4;
  } catch (const std::exception& err) {
    nlohmann::ordered_json record;
    record["error"] = {{"category", "internal"}, {"message", err.what()}};
    std::cerr << record.dump() << "\n";
    return 1;
  }
}
