#include "nem/config.hpp"

#include <fstream>
#include <string>

#include <json.hpp>

#include "nem/errors.hpp"

namespace nem {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path.string() + ": cannot open config file");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ConfigError(path.string() + ": " + err.what());
  }
}

const json& require(const json& parent, const std::string& key, const std::string& where) {
  const auto it = parent.find(key);
  if (it == parent.end()) {
    throw ConfigError(where + ": missing required field '" + key + "'");
  }
  return *it;
}

double as_number(const json& node, const std::string& where) {
  if (!node.is_number()) {
    throw ConfigError(where + ": expected a number");
  }
  return node.get<double>();
}

double number_field(const json& parent, const std::string& key, const std::string& where) {
  return as_number(require(parent, key, where), where + "." + key);
}

double number_field_or(const json& parent, const std::string& key,
                       const std::string& where, double fallback) {
  const auto it = parent.find(key);
  return it == parent.end() ? fallback : as_number(*it, where + "." + key);
}

int int_field_or(const json& parent, const std::string& key, const std::string& where,
                 int fallback) {
  const auto it = parent.find(key);
  if (it == parent.end()) {
    return fallback;
  }
  if (!it->is_number_integer()) {
    throw ConfigError(where + "." + key + ": expected an integer");
  }
  return it->get<int>();
}

std::string string_field(const json& parent, const std::string& key,
                         const std::string& where) {
  const json& node = require(parent, key, where);
  if (!node.is_string()) {
    throw ConfigError(where + "." + key + ": expected a string");
  }
  return node.get<std::string>();
}

DeviceSet parse_devices(const json& root, const std::string& where) {
  const json& node = require(root, "devices", where);
  if (!node.is_array() || node.empty()) {
    throw ConfigError(where + ".devices: expected a non-empty array");
  }
  DeviceSet set;
  set.devices.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string dev_where = where + ".devices[" + std::to_string(i) + "]";
    const json& dev_node = node[i];
    if (!dev_node.is_object()) {
      throw ConfigError(dev_where + ": expected an object");
    }
    DeviceUtility dev;
    dev.marginal_at_zero = number_field(dev_node, "a", dev_where);
    dev.marginal_slope = number_field(dev_node, "b", dev_where);
    dev.max_energy = number_field(dev_node, "d_max", dev_where);
    try {
      validate(dev);
    } catch (const ConfigError& err) {
      throw ConfigError(dev_where + ": " + err.what());
    }
    set.devices.push_back(dev);
  }
  return set;
}

CostModel parse_cost(const json& root, const std::string& where) {
  const json& node = require(root, "cost", where);
  const std::string cost_where = where + ".cost";
  CostModel cost;
  cost.fixed_cost_per_customer =
      number_field(node, "fixed_cost_per_customer", cost_where);
  cost.smc_adder = number_field_or(node, "smc_adder", cost_where, 0.030);
  cost.env_price = number_field_or(node, "env_price", cost_where, 0.035);
  try {
    validate(cost);
  } catch (const ConfigError& err) {
    throw ConfigError(cost_where + ": " + err.what());
  }
  return cost;
}

PolicyTemplate parse_policy(const json& node, const std::string& where,
                            double periods_per_day) {
  if (!node.is_object()) {
    throw ConfigError(where + ": expected an object");
  }
  PolicyTemplate tmpl;
  tmpl.name = string_field(node, "name", where);
  if (tmpl.name.empty() || tmpl.name.find_first_of(",\n\r") != std::string::npos) {
    throw ConfigError(where + ".name: must be non-empty without commas or newlines");
  }
  tmpl.periods_per_day = periods_per_day;

  const std::string sell_rule = string_field(node, "sell_rule", where);
  if (sell_rule == "equal") {
    tmpl.sell_rule = SellRule::EqualToRetail;
  } else if (sell_rule == "offset") {
    tmpl.sell_rule = SellRule::RetailMinusOffset;
    tmpl.sell_offset = number_field(node, "sell_offset", where);
  } else if (sell_rule == "smc") {
    tmpl.sell_rule = SellRule::SocialMarginalCost;
  } else {
    throw ConfigError(where + ".sell_rule: expected 'equal', 'offset' or 'smc', got '" +
                      sell_rule + "'");
  }

  const std::string fixed_rule =
      node.contains("fixed_charge_rule") ? string_field(node, "fixed_charge_rule", where)
                                         : "none";
  if (fixed_rule == "none") {
    tmpl.fixed_rule = FixedChargeRule::None;
  } else if (fixed_rule == "uniform") {
    tmpl.fixed_rule = FixedChargeRule::Uniform;
    tmpl.uniform_fixed_charge = number_field(node, "uniform_fixed_charge", where);
  } else if (fixed_rule == "prosumer_cbc") {
    tmpl.fixed_rule = FixedChargeRule::ProsumerCapacityCharge;
    tmpl.cbc_rate_per_kw_month = number_field(node, "cbc_rate_per_kw_month", where);
    tmpl.pv_capacity_kw = number_field(node, "pv_capacity_kw", where);
    tmpl.days_in_month = number_field_or(node, "days_in_month", where, 30.0);
  } else {
    throw ConfigError(where + ".fixed_charge_rule: expected 'none', 'uniform' or "
                      "'prosumer_cbc', got '" + fixed_rule + "'");
  }

  if (node.contains("tou")) {
    const json& tou_node = node["tou"];
    const std::string tou_where = where + ".tou";
    if (!tou_node.is_object()) {
      throw ConfigError(tou_where + ": expected an object");
    }
    TouSpec tou;
    tou.peak_start_hour = int_field_or(tou_node, "peak_start_hour", tou_where, 16);
    tou.peak_end_hour = int_field_or(tou_node, "peak_end_hour", tou_where, 21);
    tou.peak_ratio = number_field_or(tou_node, "peak_ratio", tou_where, 1.5);
    tmpl.tou = tou;
  }

  try {
    validate(tmpl);
  } catch (const ConfigError& err) {
    throw ConfigError(where + ": " + err.what());
  }
  return tmpl;
}

PaybackParams parse_payback(const json& root, const std::string& where) {
  const json& node = require(root, "payback", where);
  const std::string pb_where = where + ".payback";
  PaybackParams params;
  params.install_cost = number_field(node, "install_cost", pb_where);
  params.degradation = number_field_or(node, "degradation", pb_where, 0.0);
  params.interest = number_field_or(node, "interest", pb_where, 0.0);
  params.horizon_years = int_field_or(node, "horizon_years", pb_where, 50);
  try {
    validate(params);
  } catch (const ConfigError& err) {
    throw ConfigError(pb_where + ": " + err.what());
  }
  return params;
}

}  // namespace

StudyConfig load_study_config(const std::filesystem::path& path) {
  const json root = parse_file(path);
  const std::string where = path.filename().string();
  if (!root.is_object()) {
    throw ConfigError(where + ": expected a JSON object");
  }
  const std::filesystem::path base_dir = path.parent_path();

  StudyConfig config;
  config.devices = parse_devices(root, where);
  config.cost = parse_cost(root, where);
  config.payback = parse_payback(root, where);

  const json& data = require(root, "data", where);
  const std::string data_where = where + ".data";
  config.price_path = base_dir / string_field(data, "prices", data_where);
  config.generation_path = base_dir / string_field(data, "generation", data_where);
  config.resample_hours = int_field_or(data, "resample_hours", data_where, 1);
  if (config.resample_hours < 1 || config.resample_hours > 24 ||
      24 % config.resample_hours != 0) {
    throw ConfigError(data_where + ".resample_hours: must divide 24");
  }
  if (!std::filesystem::exists(config.price_path)) {
    throw ConfigError(data_where + ".prices: file not found: " +
                      config.price_path.string());
  }
  if (!std::filesystem::exists(config.generation_path)) {
    throw ConfigError(data_where + ".generation: file not found: " +
                      config.generation_path.string());
  }

  const json& policies = require(root, "policies", where);
  if (!policies.is_array() || policies.empty()) {
    throw ConfigError(where + ".policies: expected a non-empty array");
  }
  for (std::size_t i = 0; i < policies.size(); ++i) {
    config.policies.push_back(parse_policy(
        policies[i], where + ".policies[" + std::to_string(i) + "]",
        config.periods_per_day()));
  }

  const json& gammas = require(root, "gammas", where);
  if (!gammas.is_array() || gammas.empty()) {
    throw ConfigError(where + ".gammas: expected a non-empty array");
  }
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const std::string g_where = where + ".gammas[" + std::to_string(i) + "]";
    const double gamma = as_number(gammas[i], g_where);
    if (gamma < 0.0 || gamma > 1.0) {
      throw ConfigError(g_where + ": must be in [0,1]");
    }
    if (i > 0 && gamma < config.gammas.back()) {
      throw ConfigError(g_where + ": gamma grid must be ascending");
    }
    config.gammas.push_back(gamma);
  }

  if (root.contains("output")) {
    config.output_dir = base_dir / string_field(root, "output", where);
  }

  if (root.contains("solver")) {
    const json& solver = root["solver"];
    const std::string solver_where = where + ".solver";
    if (!solver.is_object()) {
      throw ConfigError(solver_where + ": expected an object");
    }
    if (solver.contains("bracket")) {
      const json& bracket = solver["bracket"];
      if (!bracket.is_array() || bracket.size() != 2) {
        throw ConfigError(solver_where + ".bracket: expected [lo, hi]");
      }
      config.solver.bracket_lo = as_number(bracket[0], solver_where + ".bracket[0]");
      config.solver.bracket_hi = as_number(bracket[1], solver_where + ".bracket[1]");
    }
    config.solver.breakeven_tol =
        number_field_or(solver, "breakeven_tol", solver_where, config.solver.breakeven_tol);
    config.solver.retail_tol =
        number_field_or(solver, "retail_tol", solver_where, config.solver.retail_tol);
    config.solver.prescan_points =
        int_field_or(solver, "prescan_points", solver_where, config.solver.prescan_points);
    config.solver.max_iterations =
        int_field_or(solver, "max_iterations", solver_where, config.solver.max_iterations);
    if (!(config.solver.breakeven_tol > 0.0) || !(config.solver.retail_tol > 0.0) ||
        config.solver.prescan_points < 1 || config.solver.max_iterations < 1) {
      throw ConfigError(solver_where + ": tolerances and iteration counts must be > 0");
    }
  }
  return config;
}

DeviceSet load_devices(const std::filesystem::path& path) {
  const json root = parse_file(path);
  const std::string where = path.filename().string();
  if (!root.is_object()) {
    throw ConfigError(where + ": expected a JSON object");
  }
  return parse_devices(root, where);
}

PaybackParams load_payback_params(const std::filesystem::path& path) {
  const json root = parse_file(path);
  const std::string where = path.filename().string();
  if (!root.is_object()) {
    throw ConfigError(where + ": expected a JSON object");
  }
  return parse_payback(root, where);
}

}  // namespace nem
