#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "netsel/decision_core.hpp"

namespace netsel {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Linear power model coefficients: mJ/s per Mbps uplink and downlink, plus
/// a baseline in mJ/s.
struct EnergyCoefficients {
  double alpha_up = 0.0;
  double alpha_down = 0.0;
  double beta = 0.0;
};

struct RatProfile {
  std::string name;
  Range bandwidth;  // Mbps
  Range delay;      // ms
  Range plr;        // %
  double cost_level = 1.0;
  EnergyCoefficients energy;
};

struct ScenarioSpec {
  std::vector<RatProfile> profiles;
  std::size_t instances_per_profile = 1;
  std::uint64_t seed = 0;
  /// Share of the drawn bandwidth treated as uplink throughput.
  double uplink_fraction = 0.1;
};

/// Throws ValidationError naming the offending field, e.g.
/// "profiles[1].delay: lo (50) > hi (25)".
void validate_spec(const ScenarioSpec& spec);

/// P = alpha_up * th_up + alpha_down * th_down + beta, in mJ/s.
double energy_consumption(double th_up, double th_down, const EnergyCoefficients& coeffs);

/// Energy column value for a drawn bandwidth under `uplink_fraction`.
double energy_for_bandwidth(double bandwidth, double uplink_fraction,
                            const EnergyCoefficients& coeffs);

/// Criteria Bandwidth (benefit), Delay, PLR, Energy, Cost (all cost), in that order.
std::vector<CriterionSpec> network_criteria();

/// Draws bandwidth, delay and PLR uniformly from each profile's ranges,
/// `instances_per_profile` rows per profile, labelled N(0), N(1), ... in
/// profile order. Deterministic in spec.seed.
DecisionMatrix generate_matrix(const ScenarioSpec& spec);

/// Wi-Fi, 3G and LTE margins (bandwidth, delay, PLR, cost level). The
/// energy coefficients are caller-supplied, in the same order.
std::vector<RatProfile> table1_profiles(const std::array<EnergyCoefficients, 3>& energy);

/// Illustrative Wi-Fi/3G/LTE power coefficients from published smartphone
/// measurements. Example values only; they are also shipped in
/// data/table1_scenario.json.
std::array<EnergyCoefficients, 3> illustrative_energy_coefficients();

/// Built-in Wi-Fi/3G/LTE margin profiles with the illustrative energy coefficients, two instances
/// per profile and a 10% uplink share.
ScenarioSpec table1_scenario(std::uint64_t seed = 0);

/// The fixed six-network test matrix N(0)..N(5).
DecisionMatrix table2_matrix();

}  // namespace netsel
