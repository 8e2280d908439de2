// Acceptance suite: one check per release criterion, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nem/errors.hpp"
#include "nem/metrics.hpp"
#include "nem/ramsey.hpp"
#include "nem/scheduler.hpp"
#include "nem/study.hpp"

namespace fs = std::filesystem;
using nem::DeviceSet;
using nem::DeviceUtility;
using nem::Schedule;
using nem::TariffParams;
using nem::Thresholds;
using nem::Zone;

namespace {

const fs::path kFixtureDir = NEM_FIXTURE_DIR;

struct Check {
  int failures = 0;
  int checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) {
        first_failure = what;
      }
    }
  }
};

struct Instance {
  DeviceSet devices;
  TariffParams params;
};

Instance draw_instance(std::mt19937& rng, int device_count, double cap_hi) {
  std::uniform_real_distribution<double> value(0.1, 2.0);
  std::uniform_real_distribution<double> slope(0.05, 1.0);
  std::uniform_real_distribution<double> cap(0.5, cap_hi);
  std::uniform_real_distribution<double> retail(0.05, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Instance inst;
  for (int i = 0; i < device_count; ++i) {
    DeviceUtility dev;
    dev.marginal_at_zero = value(rng);
    dev.marginal_slope = slope(rng);
    dev.max_energy = std::min(
        cap(rng), dev.marginal_at_zero / dev.marginal_slope * (1.0 - 1e-12));
    inst.devices.devices.push_back(dev);
  }
  inst.params.retail_rate = retail(rng);
  inst.params.sell_rate = unit(rng) * inst.params.retail_rate;
  inst.params.fixed_charge = 0.0;
  return inst;
}

double total(const Schedule& schedule) {
  double sum = 0.0;
  for (const double d : schedule.consumption) {
    sum += d;
  }
  return sum;
}

std::string fmt(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

// ---------------------------------------------------------------------------
// 1. Closed-form schedule vs exhaustive grid search at step 1e-3.
// ---------------------------------------------------------------------------
bool criterion_oracle_equivalence(std::string* summary) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  std::mt19937 rng(20190601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double step = 1e-3;

  // device-count mix keeps the product grids within the time budget
  const struct {
    int devices;
    int instances;
    double cap_hi;
  } plan[] = {{1, 250, 5.0}, {2, 200, 2.5}, {3, 50, 0.6}};

  double worst_gap = 0.0;
  int instances = 0;
  for (const auto& group : plan) {
    for (int i = 0; i < group.instances; ++i) {
      const Instance inst = draw_instance(rng, group.devices, group.cap_hi);
      const Thresholds th = nem::thresholds(inst.devices, inst.params);
      const double renewable = unit(rng) * (th.upper * 1.4 + 0.5);
      const Schedule closed =
          nem::optimal_schedule(inst.devices, inst.params, renewable);
      const Schedule grid =
          nem::brute_force_schedule(inst.devices, inst.params, renewable, step);

      double lipschitz = 0.0;
      for (const DeviceUtility& dev : inst.devices.devices) {
        lipschitz += (dev.marginal_at_zero + inst.params.retail_rate) * step;
      }
      const double gap = closed.surplus - grid.surplus;
      worst_gap = std::max(worst_gap, std::abs(gap));
      check.expect(gap >= -1e-6, "grid search beat the closed form");
      check.expect(gap <= std::max(1e-3, lipschitz),
                   "closed form exceeded the grid optimum beyond the step bound");
      ++instances;
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(elapsed < 60.0, "oracle suite exceeded 60 s");
  *summary = std::to_string(instances) + " instances, worst |gap| " + fmt(worst_gap) +
             ", " + fmt(elapsed) + " s" +
             (check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

// ---------------------------------------------------------------------------
// 2. Structure of the optimal policy: sandwich, shadow price range, balance,
//    continuity.
// ---------------------------------------------------------------------------
bool criterion_structure(std::string* summary) {
  Check check;
  std::mt19937 rng(77001);
  std::uniform_int_distribution<int> device_count(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int i = 0; i < 1000; ++i) {
    const Instance inst = draw_instance(rng, device_count(rng), 5.0);
    const Thresholds th = nem::thresholds(inst.devices, inst.params);
    check.expect(th.lower <= th.upper + 1e-12, "thresholds out of order");

    const double r_zero = th.lower + unit(rng) * (th.upper - th.lower);
    const Schedule s = nem::optimal_schedule(inst.devices, inst.params, r_zero);
    if (s.zone == Zone::NetZero) {
      check.expect(std::abs(s.net_energy) <= 1e-7, "net-zero balance above 1e-7");
      if (s.shadow_price) {
        check.expect(*s.shadow_price >= inst.params.sell_rate - 1e-12 &&
                         *s.shadow_price <= inst.params.retail_rate + 1e-12,
                     "shadow price outside the rate interval");
      } else {
        check.expect(false, "net-zero schedule missing its shadow price");
      }
      for (std::size_t d = 0; d < inst.devices.devices.size(); ++d) {
        const DeviceUtility& dev = inst.devices.devices[d];
        const double lo = nem::inverse_marginal_clamped(dev, inst.params.retail_rate);
        const double hi = nem::inverse_marginal_clamped(dev, inst.params.sell_rate);
        check.expect(s.consumption[d] >= lo - 1e-9 && s.consumption[d] <= hi + 1e-9,
                     "per-device consumption outside its zone sandwich");
      }
    }

    const double r_any = unit(rng) * (th.upper * 1.3 + 0.5);
    const double t0 =
        total(nem::optimal_schedule(inst.devices, inst.params, r_any));
    const double t1 =
        total(nem::optimal_schedule(inst.devices, inst.params, r_any + 1e-6));
    check.expect(std::abs(t1 - t0) <= 2e-6, "total consumption jumped at 1e-6 probe");
  }
  *summary = "1000 instances" +
             std::string(check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

// ---------------------------------------------------------------------------
// 3. Comparative statics sign table at interior points of each zone.
// ---------------------------------------------------------------------------
bool criterion_comparative_statics(std::string* summary) {
  Check check;
  std::mt19937 rng(88002);
  std::uniform_int_distribution<int> device_count(1, 3);
  const double eps = 1e-3;
  const double zero_tol = 1e-9;

  int tested = 0;
  int attempts = 0;
  while (tested < 200 && attempts < 20000) {
    ++attempts;
    Instance inst = draw_instance(rng, device_count(rng), 5.0);
    // keep the probes interior: fat zones, strictly positive sell rate, a
    // margin below the retail rate and one device strictly interior at retail
    std::uniform_real_distribution<double> retail_dist(0.1, 1.0);
    inst.params.retail_rate = retail_dist(rng);
    std::uniform_real_distribution<double> sell_dist(0.01, inst.params.retail_rate - 0.02);
    if (inst.params.retail_rate - 0.02 <= 0.01) {
      continue;
    }
    inst.params.sell_rate = sell_dist(rng);

    const Thresholds th = nem::thresholds(inst.devices, inst.params);
    if (th.lower < 0.02 || th.upper - th.lower < 0.02) {
      continue;
    }
    bool interior_at_retail = false;
    for (const DeviceUtility& dev : inst.devices.devices) {
      const double d =
          (dev.marginal_at_zero - inst.params.retail_rate) / dev.marginal_slope;
      if (d > 1e-3 + eps / dev.marginal_slope && d < dev.max_energy - 1e-3) {
        interior_at_retail = true;
      }
    }
    if (!interior_at_retail) {
      continue;
    }
    ++tested;

    const auto eval = [&](const TariffParams& params, double renewable) {
      return nem::optimal_schedule(inst.devices, params, renewable);
    };

    // --- renewable output increases ---
    {
      const double r_plus = th.lower / 2.0;
      const Schedule a = eval(inst.params, r_plus);
      const Schedule b = eval(inst.params, r_plus + eps);
      check.expect(std::abs(total(b) - total(a)) <= zero_tol, "r+ d changed in zone +");
      check.expect(b.surplus - a.surplus > zero_tol, "r+ surplus not increasing");
      check.expect(b.payment - a.payment < -zero_tol, "r+ payment not decreasing");

      const double r_zero = th.lower + 0.4 * (th.upper - th.lower);
      const Schedule c = eval(inst.params, r_zero);
      const Schedule d = eval(inst.params, r_zero + eps);
      check.expect(total(d) - total(c) > zero_tol, "r0 consumption not increasing");
      check.expect(d.surplus - c.surplus > zero_tol, "r0 surplus not increasing");
      check.expect(std::abs(d.payment - c.payment) <= zero_tol, "r0 payment moved");

      const double r_minus = th.upper + 0.5;
      const Schedule e = eval(inst.params, r_minus);
      const Schedule f = eval(inst.params, r_minus + eps);
      check.expect(std::abs(total(f) - total(e)) <= zero_tol, "r- d changed in zone -");
      check.expect(f.surplus - e.surplus > zero_tol, "r- surplus not increasing");
      check.expect(f.payment - e.payment < -zero_tol, "r- payment not decreasing");
    }

    // --- retail rate increases ---
    {
      TariffParams bumped = inst.params;
      bumped.retail_rate += eps;
      const Thresholds th2 = nem::thresholds(inst.devices, bumped);
      check.expect(th2.lower < th.lower - zero_tol, "pi+ did not shrink the lower threshold");
      check.expect(th2.upper == th.upper, "pi+ moved the upper threshold");

      const double r_plus = th2.lower / 2.0;
      const Schedule a = eval(inst.params, r_plus);
      const Schedule b = eval(bumped, r_plus);
      for (std::size_t d = 0; d < a.consumption.size(); ++d) {
        check.expect(b.consumption[d] <= a.consumption[d] + 1e-12,
                     "pi+ raised a device's consumption in zone +");
      }
      check.expect(total(b) < total(a) - zero_tol, "pi+ did not lower total consumption");
      check.expect(b.surplus < a.surplus - zero_tol, "pi+ did not lower surplus in zone +");
      // payment response in zone + is ambiguous; not asserted

      const double r_zero = th.lower + 0.4 * (th.upper - th.lower);
      const Schedule c = eval(inst.params, r_zero);
      const Schedule d = eval(bumped, r_zero);
      check.expect(std::abs(total(d) - total(c)) <= zero_tol, "pi+ moved zone 0 consumption");
      check.expect(std::abs(d.surplus - c.surplus) <= zero_tol, "pi+ moved zone 0 surplus");
      check.expect(std::abs(d.payment - c.payment) <= zero_tol, "pi+ moved zone 0 payment");

      const double r_minus = th.upper + 0.5;
      const Schedule e = eval(inst.params, r_minus);
      const Schedule f = eval(bumped, r_minus);
      check.expect(std::abs(total(f) - total(e)) <= zero_tol, "pi+ moved zone - consumption");
      check.expect(std::abs(f.surplus - e.surplus) <= zero_tol, "pi+ moved zone - surplus");
      check.expect(std::abs(f.payment - e.payment) <= zero_tol, "pi+ moved zone - payment");
    }

    // --- sell rate increases ---
    {
      TariffParams bumped = inst.params;
      bumped.sell_rate += eps;
      const Thresholds th2 = nem::thresholds(inst.devices, bumped);
      check.expect(th2.upper <= th.upper + 1e-12, "pi- raised the upper threshold");
      check.expect(th2.lower == th.lower, "pi- moved the lower threshold");

      const double r_minus = th.upper + 0.5;
      const Schedule a = eval(inst.params, r_minus);
      const Schedule b = eval(bumped, r_minus);
      for (std::size_t d = 0; d < a.consumption.size(); ++d) {
        check.expect(b.consumption[d] <= a.consumption[d] + 1e-12,
                     "pi- raised a device's consumption in zone -");
      }
      check.expect(b.payment < a.payment - zero_tol, "pi- did not lower payment in zone -");
      check.expect(b.surplus > a.surplus + zero_tol, "pi- did not raise surplus in zone -");

      const double r_plus = th.lower / 2.0;
      const Schedule c = eval(inst.params, r_plus);
      const Schedule d = eval(bumped, r_plus);
      check.expect(std::abs(total(d) - total(c)) <= zero_tol, "pi- moved zone + consumption");
      check.expect(std::abs(d.surplus - c.surplus) <= zero_tol, "pi- moved zone + surplus");
      check.expect(std::abs(d.payment - c.payment) <= zero_tol, "pi- moved zone + payment");

      if (th2.upper - th.lower > 0.005) {
        const double r_zero = th.lower + 0.4 * (th2.upper - th.lower);
        const Schedule e = eval(inst.params, r_zero);
        const Schedule f = eval(bumped, r_zero);
        check.expect(std::abs(total(f) - total(e)) <= zero_tol, "pi- moved zone 0 consumption");
        check.expect(std::abs(f.surplus - e.surplus) <= zero_tol, "pi- moved zone 0 surplus");
        check.expect(std::abs(f.payment - e.payment) <= zero_tol, "pi- moved zone 0 payment");
      }
    }

    // --- fixed charge increases ---
    {
      TariffParams bumped = inst.params;
      bumped.fixed_charge += eps;
      for (const double r : {th.lower / 2.0, th.lower + 0.4 * (th.upper - th.lower),
                             th.upper + 0.5}) {
        const Schedule a = eval(inst.params, r);
        const Schedule b = eval(bumped, r);
        check.expect(a.consumption == b.consumption, "pi0 changed consumption");
        check.expect(std::abs((b.payment - a.payment) - eps) <= 1e-12,
                     "pi0 did not shift payment by exactly eps");
        check.expect(std::abs((a.surplus - b.surplus) - eps) <= 1e-12,
                     "pi0 did not shift surplus by exactly -eps");
      }
    }
  }

  *summary = std::to_string(tested) + " instances x 4 parameters" +
             (check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0 && tested >= 200;
}

// ---------------------------------------------------------------------------
// 4. Device priority classification matches observed schedules.
// ---------------------------------------------------------------------------
bool criterion_priority(std::string* summary) {
  Check check;
  std::mt19937 rng(99003);
  std::uniform_int_distribution<int> device_count(1, 3);

  for (int i = 0; i < 1000; ++i) {
    const Instance inst = draw_instance(rng, device_count(rng), 5.0);
    const Thresholds th = nem::thresholds(inst.devices, inst.params);

    std::vector<Schedule> schedules;
    if (th.lower > 1e-9) {
      schedules.push_back(nem::optimal_schedule(inst.devices, inst.params, th.lower / 2.0));
    }
    schedules.push_back(nem::optimal_schedule(inst.devices, inst.params,
                                              0.5 * (th.lower + th.upper)));
    schedules.push_back(nem::optimal_schedule(inst.devices, inst.params, th.upper + 1.0));

    for (std::size_t d = 0; d < inst.devices.devices.size(); ++d) {
      const nem::DevicePriority priority =
          nem::classify_device(inst.devices.devices[d], inst.params);
      for (const Schedule& s : schedules) {
        if (priority == nem::DevicePriority::NeverOn) {
          check.expect(s.consumption[d] <= 1e-12, "NeverOn device consumed");
        } else if (priority == nem::DevicePriority::AlwaysOn) {
          check.expect(s.consumption[d] > 1e-12, "AlwaysOn device idle");
        }
      }
    }
  }
  *summary = "1000 instances" +
             std::string(check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

// ---------------------------------------------------------------------------
// 5. Break-even solutions re-evaluate to zero; analytic identity instance.
// ---------------------------------------------------------------------------
bool criterion_breakeven(std::string* summary, const nem::StudyConfig& config,
                         const nem::StudyResult& study) {
  Check check;

  // identity: one scenario, no fixed costs, no adopters -> retail = wholesale
  {
    const DeviceSet devices{{DeviceUtility{1.0, 0.5, 2.0}}};
    const nem::CostModel cost{0.0, 0.0, 0.0};
    const double wholesale = 0.07;
    nem::Scenario scen;
    scen.wholesale_price = wholesale;
    scen.renewable = 0.0;
    scen.hour = 12;
    scen.weight = 1.0;
    const nem::ScenarioSet set{{scen}};
    nem::PolicyTemplate tmpl;
    tmpl.name = "identity";
    nem::SolverOptions options;
    options.bracket_lo = 0.5 * wholesale;
    options.bracket_hi = 2.0 * wholesale;
    const nem::RateSolution solution =
        nem::solve_breakeven(tmpl, devices, cost, set, 0.0, options);
    check.expect(solution.feasible, "identity instance infeasible");
    check.expect(std::abs(solution.retail_rate - wholesale) <= 1e-9,
                 "identity retail off by more than 1e-9");
  }

  // every feasible cell of the study re-evaluates within tolerance
  int feasible_cells = 0;
  const std::size_t gammas = config.gammas.size();
  for (std::size_t c = 0; c < study.cells.size(); ++c) {
    const nem::RateSolution& rate = study.cells[c].rate;
    if (!rate.feasible) {
      continue;
    }
    ++feasible_cells;
    const nem::PolicyTemplate& tmpl = config.policies[c / gammas];
    const double residual = nem::breakeven_residual(
        tmpl, rate.retail_rate, config.devices, config.cost, study.scenarios, rate.gamma);
    check.expect(std::abs(residual) <= 1e-6,
                 "re-evaluated residual above 1e-6 for " + rate.policy_name);
  }
  check.expect(feasible_cells > 0, "no feasible cells in the study");

  *summary = "identity root + " + std::to_string(feasible_cells) + " feasible cells" +
             (check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

// ---------------------------------------------------------------------------
// 6. Payback accumulation: exact unit case plus randomized oracle agreement.
// ---------------------------------------------------------------------------
bool criterion_payback(std::string* summary) {
  Check check;
  {
    const nem::PaybackResult unit = nem::payback_time(1.0, {3.0, 0.0, 0.0, 50});
    check.expect(unit.year.has_value() && *unit.year == 2, "unit case t* != 2");
  }

  std::mt19937 rng(31004);
  std::uniform_real_distribution<double> frac(0.0, 0.2);
  std::uniform_real_distribution<double> saving_dist(50.0, 2000.0);
  std::uniform_real_distribution<double> cost_dist(1000.0, 30000.0);
  for (int i = 0; i < 100; ++i) {
    const nem::PaybackParams params{cost_dist(rng), frac(rng), frac(rng), 60};
    const double annual = saving_dist(rng);
    const nem::PaybackResult result = nem::payback_time(annual, params);

    // independent accumulation with per-term discounting
    std::optional<int> expected;
    double cumulative = 0.0;
    for (int t = 0; t <= params.horizon_years; ++t) {
      cumulative +=
          std::pow((1.0 - params.degradation) / (1.0 + params.interest), t) * annual;
      if (cumulative >= params.install_cost) {
        expected = t;
        break;
      }
    }
    check.expect(result.year == expected, "payback year disagrees with the oracle");
    if (result.simple_years) {
      check.expect(std::abs(*result.simple_years - params.install_cost / annual) <= 1e-12,
                   "simple ratio mismatch");
    }
  }
  *summary = "unit case + 100 random draws" +
             std::string(check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

// ---------------------------------------------------------------------------
// 7. Qualitative orderings on the bundled fixture.
// ---------------------------------------------------------------------------
bool criterion_orderings(std::string* summary, const nem::StudyConfig& config,
                         const nem::StudyResult& study) {
  Check check;
  const std::size_t gammas = config.gammas.size();

  const auto cell_at = [&](const std::string& policy,
                           double gamma) -> const nem::StudyCell* {
    for (std::size_t c = 0; c < study.cells.size(); ++c) {
      if (config.policies[c / gammas].name == policy &&
          study.cells[c].rate.gamma == gamma) {
        return &study.cells[c];
      }
    }
    return nullptr;
  };

  const nem::StudyCell* nem1 = cell_at("NEM 1.0", 0.2);
  const nem::StudyCell* nem2 = cell_at("NEM 2.0", 0.2);
  const nem::StudyCell* smc = cell_at("NEM SMC", 0.2);
  check.expect(nem1 && nem1->rate.feasible, "NEM 1.0 at gamma 0.2 missing or infeasible");
  check.expect(nem2 && nem2->rate.feasible, "NEM 2.0 at gamma 0.2 missing or infeasible");
  check.expect(smc && smc->rate.feasible, "NEM SMC at gamma 0.2 missing or infeasible");
  std::string detail;
  if (nem1 && nem2 && smc && nem1->rate.feasible && nem2->rate.feasible &&
      smc->rate.feasible) {
    check.expect(nem1->metrics.cost_shift >= nem2->metrics.cost_shift - 1e-9,
                 "cost shift: NEM 1.0 < NEM 2.0");
    check.expect(nem2->metrics.cost_shift >= smc->metrics.cost_shift - 1e-9,
                 "cost shift: NEM 2.0 < NEM SMC");

    const auto years = [&](const nem::StudyCell& cell) {
      return cell.metrics.payback.year ? *cell.metrics.payback.year
                                       : config.payback.horizon_years + 1;
    };
    check.expect(years(*nem1) <= years(*nem2), "payback: NEM 1.0 > NEM 2.0");
    check.expect(years(*nem2) <= years(*smc), "payback: NEM 2.0 > NEM SMC");
    detail = "cost shift " + fmt(nem1->metrics.cost_shift) + " >= " +
             fmt(nem2->metrics.cost_shift) + " >= " + fmt(smc->metrics.cost_shift) +
             "; payback " + std::to_string(years(*nem1)) + " <= " +
             std::to_string(years(*nem2)) + " <= " + std::to_string(years(*smc));
  }

  // NEM 1.0 retail rate non-decreasing over the gamma grid
  double previous = -1.0;
  for (const double gamma : {0.0, 0.1, 0.2, 0.3}) {
    const nem::StudyCell* cell = cell_at("NEM 1.0", gamma);
    check.expect(cell && cell->rate.feasible,
                 "NEM 1.0 infeasible at gamma " + fmt(gamma));
    if (cell && cell->rate.feasible) {
      check.expect(cell->rate.retail_rate >= previous - 1e-9,
                   "NEM 1.0 retail decreased at gamma " + fmt(gamma));
      previous = cell->rate.retail_rate;
    }
  }

  *summary = detail + (check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

// ---------------------------------------------------------------------------
// 8. Pipeline determinism and runtime on the fixture.
// ---------------------------------------------------------------------------
bool criterion_determinism(std::string* summary, const nem::StudyConfig& config) {
  Check check;
  const fs::path out_a = fs::temp_directory_path() / "nem_accept_a";
  const fs::path out_b = fs::temp_directory_path() / "nem_accept_b";
  fs::remove_all(out_a);
  fs::remove_all(out_b);

  const auto start = std::chrono::steady_clock::now();
  nem::run_study(config, out_a);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  nem::run_study(config, out_b);

  const auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  for (const char* name : {"rates.csv", "welfare.csv", "metrics.csv", "summary.json"}) {
    check.expect(slurp(out_a / name) == slurp(out_b / name),
                 std::string(name) + " differs between runs");
  }
  check.expect(elapsed < 30.0, "fixture study exceeded 30 s");
  fs::remove_all(out_a);
  fs::remove_all(out_b);

  *summary = "two byte-identical runs, " + fmt(elapsed) + " s" +
             (check.failures ? "; FIRST FAILURE: " + check.first_failure : "");
  return check.failures == 0;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int number, const char* label, bool ok,
                          const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number, label,
                detail.c_str());
    if (!ok) {
      ++failures;
    }
  };

  try {
    std::string detail;

    bool ok = criterion_oracle_equivalence(&detail);
    report(1, "scheduler matches the exhaustive grid oracle", ok, detail);

    ok = criterion_structure(&detail);
    report(2, "two-threshold structure, balance and continuity", ok, detail);

    ok = criterion_comparative_statics(&detail);
    report(3, "comparative statics sign table", ok, detail);

    ok = criterion_priority(&detail);
    report(4, "device priority classification", ok, detail);

    const nem::StudyConfig config =
        nem::load_study_config(kFixtureDir / "study_config.json");
    const fs::path scratch = fs::temp_directory_path() / "nem_accept_study";
    fs::remove_all(scratch);
    const nem::StudyResult study = nem::run_study(config, scratch);
    fs::remove_all(scratch);

    ok = criterion_breakeven(&detail, config, study);
    report(5, "break-even roots re-evaluate to zero", ok, detail);

    ok = criterion_payback(&detail);
    report(6, "payback accumulation", ok, detail);

    ok = criterion_orderings(&detail, config, study);
    report(7, "policy orderings on the synthetic fixture", ok, detail);

    ok = criterion_determinism(&detail, config);
    report(8, "pipeline determinism and runtime", ok, detail);
  } catch (const std::exception& err) {
    std::printf("[FAIL] acceptance suite aborted: %s\n", err.what());
    return 1;
  }

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
