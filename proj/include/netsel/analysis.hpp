#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netsel/decision_core.hpp"
#include "netsel/madm_methods.hpp"
#include "netsel/scenario.hpp"

namespace netsel {

enum class Perturbation { Drop, Duplicate };

std::string_view to_string(Perturbation p);

/// Outcome of ranking a matrix before and after removing (or duplicating)
/// one alternative.
struct ReversalReport {
  Method method;
  Perturbation perturbation = Perturbation::Drop;
  /// The dropped alternative, or the one that was duplicated.
  std::string target;
  std::vector<std::string> baseline_order;
  /// Order on the perturbed matrix; for Duplicate the copy is omitted.
  std::vector<std::string> reduced_order;
  /// baseline_order with the dropped label deleted (Drop) or unchanged (Duplicate).
  std::vector<std::string> expected_order;
  bool reversed = false;
  /// Pairs (a, b) with a ahead of b in expected_order but behind it in reduced_order.
  std::vector<std::pair<std::string, std::string>> flips;
};

ReversalReport reversal_experiment(const DecisionMatrix& matrix, std::span<const double> weights,
                                   Method method, const std::string& removed,
                                   const MethodOptions& options = {});

/// Appends a copy of `duplicated` and compares the surviving order.
ReversalReport duplication_experiment(const DecisionMatrix& matrix,
                                      std::span<const double> weights, Method method,
                                      const std::string& duplicated,
                                      const MethodOptions& options = {});

/// Pairs ordered one way in `expected` and the other way in `actual`. Both
/// must be permutations of the same labels.
std::vector<std::pair<std::string, std::string>> order_flips(
    const std::vector<std::string>& expected, const std::vector<std::string>& actual);

/// (concordant - discordant) / (n(n-1)/2) between two strict orders over
/// the same labels. Orders of length 1 give 1.
double kendall_tau(const std::vector<std::string>& order_a,
                   const std::vector<std::string>& order_b);

struct AgreementReport {
  std::vector<Method> methods;
  std::vector<RankingResult> rankings;
  /// tau[a][b] = kendall_tau(rankings[a].order, rankings[b].order)
  Grid tau;
};

AgreementReport agreement_report(const DecisionMatrix& matrix, std::span<const double> weights,
                                 const std::vector<Method>& methods,
                                 const MethodOptions& options = {});

struct MonteCarloSpec {
  /// Profiles, instances and uplink split for each random matrix. The seed
  /// field is ignored; each trial derives its own from `seed`.
  ScenarioSpec scenario;
  std::vector<double> weights;
  std::vector<Method> methods;
  MethodOptions options;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  /// Worker threads; results do not depend on it.
  unsigned threads = 1;
};

struct MethodReversalStats {
  Method method;
  std::size_t trials = 0;
  std::size_t reversals = 0;
  std::size_t total_flips = 0;

  double frequency() const {
    return trials ? static_cast<double>(reversals) / static_cast<double>(trials) : 0.0;
  }
};

struct MonteCarloReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<MethodReversalStats> per_method;
};

/// Trial t generates a matrix from derive_seed(seed, t), drops one uniformly
/// chosen alternative and runs reversal_experiment for every method.
MonteCarloReport montecarlo_reversal(const MonteCarloSpec& spec);

}  // namespace netsel
