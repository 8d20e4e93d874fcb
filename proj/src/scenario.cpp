#include "netsel/scenario.hpp"

#include <cmath>
#include <sstream>

#include "netsel/errors.hpp"
#include "netsel/random.hpp"

namespace netsel {

namespace {

void check_range(const Range& r, const std::string& where) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
    throw ValidationError(where + ": bounds must be finite");
  }
  if (r.lo < 0.0) {
    std::ostringstream os;
    os << where << ": lo (" << r.lo << ") must be >= 0";
    throw ValidationError(os.str());
  }
  if (r.lo > r.hi) {
    std::ostringstream os;
    os << where << ": lo (" << r.lo << ") > hi (" << r.hi << ")";
    throw ValidationError(os.str());
  }
}

void check_nonnegative(double v, const std::string& where) {
  if (!std::isfinite(v) || v < 0.0) throw ValidationError(where + " must be finite and >= 0");
}

}  // namespace

void validate_spec(const ScenarioSpec& spec) {
  if (spec.profiles.empty()) throw ValidationError("scenario needs at least one profile");
  if (spec.instances_per_profile < 1) {
    throw ValidationError("instances_per_profile must be at least 1");
  }
  if (!(spec.uplink_fraction >= 0.0 && spec.uplink_fraction <= 1.0)) {
    throw ValidationError("uplink_fraction must lie in [0, 1]");
  }
  for (std::size_t p = 0; p < spec.profiles.size(); ++p) {
    const auto& prof = spec.profiles[p];
    const std::string at = "profiles[" + std::to_string(p) + "]";
    if (prof.name.empty()) throw ValidationError(at + ".name is empty");
    check_range(prof.bandwidth, at + ".bandwidth");
    check_range(prof.delay, at + ".delay");
    check_range(prof.plr, at + ".plr");
    if (!std::isfinite(prof.cost_level) || prof.cost_level <= 0.0) {
      throw ValidationError(at + ".cost must be finite and > 0");
    }
    check_nonnegative(prof.energy.alpha_up, at + ".energy.alpha_u");
    check_nonnegative(prof.energy.alpha_down, at + ".energy.alpha_d");
    check_nonnegative(prof.energy.beta, at + ".energy.beta");
  }
}

double energy_consumption(double th_up, double th_down, const EnergyCoefficients& coeffs) {
  if (th_up < 0.0 || th_down < 0.0 || coeffs.alpha_up < 0.0 || coeffs.alpha_down < 0.0 ||
      coeffs.beta < 0.0) {
    throw ValidationError("energy_consumption: inputs must be nonnegative");
  }
  return coeffs.alpha_up * th_up + coeffs.alpha_down * th_down + coeffs.beta;
}

double energy_for_bandwidth(double bandwidth, double uplink_fraction,
                            const EnergyCoefficients& coeffs) {
  const double up = bandwidth * uplink_fraction;
  const double down = bandwidth * (1.0 - uplink_fraction);
  return energy_consumption(up, down, coeffs);
}

std::vector<CriterionSpec> network_criteria() {
  return {
      {"Bandwidth", Direction::Benefit, "Mbps"},
      {"Delay", Direction::Cost, "ms"},
      {"PLR", Direction::Cost, "%"},
      {"Energy", Direction::Cost, "mJ/s"},
      {"Cost", Direction::Cost, ""},
  };
}

DecisionMatrix generate_matrix(const ScenarioSpec& spec) {
  validate_spec(spec);
  Rng rng(spec.seed);
  std::vector<std::string> labels;
  Grid values;
  for (const auto& prof : spec.profiles) {
    for (std::size_t k = 0; k < spec.instances_per_profile; ++k) {
      // Draw order is part of the reproducibility contract.
      const double bw = rng.uniform(prof.bandwidth.lo, prof.bandwidth.hi);
      const double delay = rng.uniform(prof.delay.lo, prof.delay.hi);
      const double plr = rng.uniform(prof.plr.lo, prof.plr.hi);
      const double energy = energy_for_bandwidth(bw, spec.uplink_fraction, prof.energy);
      labels.push_back("N(" + std::to_string(labels.size()) + ")");
      values.push_back({bw, delay, plr, energy, prof.cost_level});
    }
  }
  return DecisionMatrix(std::move(labels), network_criteria(), std::move(values));
}

std::vector<RatProfile> table1_profiles(const std::array<EnergyCoefficients, 3>& energy) {
  return {
      {"Wi-Fi", {1.0, 11.0}, {100.0, 150.0}, {0.2, 3.0}, 1.0, energy[0]},
      {"3G", {1.0, 14.0}, {25.0, 50.0}, {0.2, 3.0}, 5.0, energy[1]},
      {"LTE", {1.0, 100.0}, {60.0, 100.0}, {0.2, 3.0}, 2.0, energy[2]},
  };
}

std::array<EnergyCoefficients, 3> illustrative_energy_coefficients() {
  // mW per Mbps (= mJ/s per Mbps) and baseline mW, Wi-Fi / 3G / LTE.
  return {{
      {283.17, 137.01, 132.86},
      {868.98, 122.12, 817.88},
      {438.39, 51.97, 1288.04},
  }};
}

ScenarioSpec table1_scenario(std::uint64_t seed) {
  ScenarioSpec spec;
  spec.profiles = table1_profiles(illustrative_energy_coefficients());
  spec.instances_per_profile = 2;
  spec.seed = seed;
  spec.uplink_fraction = 0.1;
  return spec;
}

DecisionMatrix table2_matrix() {
  return DecisionMatrix({"N(0)", "N(1)", "N(2)", "N(3)", "N(4)", "N(5)"}, network_criteria(),
                        {
                            {1.730, 105.85, 7.94, 1.00, 0.2},
                            {5.076, 134.88, 6.70, 2.6, 0.2},
                            {6.849, 43.98, 2.84, 6.26, 1.0},
                            {6.329, 32.15, 3.05, 5.86, 1.0},
                            {66.66, 95.15, 6.32, 12.78, 0.4},
                            {62.5, 99.73, 5.80, 10.28, 0.4},
                        });
}

}  // namespace netsel
