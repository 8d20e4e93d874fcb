#pragma once

// Reference implementations used only by tests. They work from raw values
// with the most direct formula available and share no code with src/.

#include <string>
#include <vector>

#include "netsel/decision_core.hpp"
#include "netsel/madm_methods.hpp"
#include "netsel/random.hpp"

namespace netsel::oracle {

/// k_ij by counting: alternatives strictly better on criterion j, plus the
/// tie adjustment (earlier equal rows for StableIndex, half the equal
/// others for MeanRank). O(n^2 m).
std::vector<double> msaw_totals(const DecisionMatrix& matrix, const std::vector<double>& weights,
                                TiePolicy tie, unsigned alpha);

/// SAW straight from raw values: benefit v / max, cost min / v.
std::vector<double> saw_scores(const DecisionMatrix& matrix, const std::vector<double>& weights);

/// Indices sorted by descending score, ties by index.
std::vector<std::string> order_by_score(const std::vector<std::string>& labels,
                                        const std::vector<double>& scores);

/// Pairs (a, b) of labels surviving in both orders whose relative order differs,
/// found by checking every pair.
std::vector<std::pair<std::string, std::string>> brute_force_flips(
    const std::vector<std::string>& before, const std::vector<std::string>& after);

/// Kendall tau by enumerating pairs over label positions.
double kendall_tau(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct RandomMatrixOptions {
  std::size_t min_n = 1, max_n = 6;
  std::size_t min_m = 1, max_m = 5;
  /// Values drawn from a small integer grid so ties occur.
  bool integer_grid = false;
};

DecisionMatrix random_matrix(Rng& rng, const RandomMatrixOptions& opt);
std::vector<double> random_weights(Rng& rng, std::size_t m);

}  // namespace netsel::oracle
