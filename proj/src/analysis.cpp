#include "netsel/analysis.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <unordered_map>

#include "netsel/errors.hpp"
#include "netsel/random.hpp"

namespace netsel {

std::string_view to_string(Perturbation p) {
  return p == Perturbation::Drop ? "drop" : "duplicate";
}

namespace {

std::unordered_map<std::string, std::size_t> positions(const std::vector<std::string>& order) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!pos.emplace(order[i], i).second) {
      throw ValidationError("order lists '" + order[i] + "' twice");
    }
  }
  return pos;
}

void require_same_labels(const std::vector<std::string>& a,
                         const std::unordered_map<std::string, std::size_t>& pos_b,
                         std::size_t size_b) {
  if (a.size() != size_b) throw ValidationError("orders have different lengths");
  for (const auto& label : a) {
    if (!pos_b.contains(label)) {
      throw ValidationError("label '" + label + "' missing from the other order");
    }
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> order_flips(
    const std::vector<std::string>& expected, const std::vector<std::string>& actual) {
  const auto pos = positions(actual);
  positions(expected);
  require_same_labels(expected, pos, actual.size());
  std::vector<std::pair<std::string, std::string>> flips;
  for (std::size_t a = 0; a < expected.size(); ++a) {
    for (std::size_t b = a + 1; b < expected.size(); ++b) {
      if (pos.at(expected[a]) > pos.at(expected[b])) flips.emplace_back(expected[a], expected[b]);
    }
  }
  return flips;
}

double kendall_tau(const std::vector<std::string>& order_a,
                   const std::vector<std::string>& order_b) {
  const auto pos_a = positions(order_a);
  const auto pos_b = positions(order_b);
  require_same_labels(order_a, pos_b, order_b.size());
  const std::size_t n = order_a.size();
  if (n == 0) throw ValidationError("kendall_tau needs nonempty orders");
  if (n == 1) return 1.0;
  long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // order_a places order_a[i] ahead of order_a[j]
      if (pos_b.at(order_a[i]) < pos_b.at(order_a[j])) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

ReversalReport reversal_experiment(const DecisionMatrix& matrix, std::span<const double> weights,
                                   Method method, const std::string& removed,
                                   const MethodOptions& options) {
  if (!matrix.index_of(removed)) throw ValidationError("unknown alternative '" + removed + "'");
  const auto reduced = drop_alternative(matrix, removed);

  ReversalReport report;
  report.method = method;
  report.perturbation = Perturbation::Drop;
  report.target = removed;
  report.baseline_order = rank(method, matrix, weights, options).order;
  report.reduced_order = rank(method, reduced, weights, options).order;
  for (const auto& label : report.baseline_order) {
    if (label != removed) report.expected_order.push_back(label);
  }
  report.flips = order_flips(report.expected_order, report.reduced_order);
  report.reversed = !report.flips.empty();
  return report;
}

ReversalReport duplication_experiment(const DecisionMatrix& matrix,
                                      std::span<const double> weights, Method method,
                                      const std::string& duplicated,
                                      const MethodOptions& options) {
  const auto extended = duplicate_alternative(matrix, duplicated);
  const std::string copy = extended.alternatives().back();

  ReversalReport report;
  report.method = method;
  report.perturbation = Perturbation::Duplicate;
  report.target = duplicated;
  report.baseline_order = rank(method, matrix, weights, options).order;
  for (const auto& label : rank(method, extended, weights, options).order) {
    if (label != copy) report.reduced_order.push_back(label);
  }
  report.expected_order = report.baseline_order;
  report.flips = order_flips(report.expected_order, report.reduced_order);
  report.reversed = !report.flips.empty();
  return report;
}

AgreementReport agreement_report(const DecisionMatrix& matrix, std::span<const double> weights,
                                 const std::vector<Method>& methods,
                                 const MethodOptions& options) {
  if (methods.empty()) throw ValidationError("agreement_report needs at least one method");
  AgreementReport report;
  report.methods = methods;
  for (Method m : methods) report.rankings.push_back(rank(m, matrix, weights, options));
  const std::size_t k = methods.size();
  report.tau.assign(k, std::vector<double>(k, 1.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      report.tau[a][b] = kendall_tau(report.rankings[a].order, report.rankings[b].order);
    }
  }
  return report;
}

namespace {

struct TrialOutcome {
  std::vector<std::size_t> flips;  // per method
};

TrialOutcome run_trial(const MonteCarloSpec& spec, std::size_t trial) {
  ScenarioSpec scenario = spec.scenario;
  scenario.seed = derive_seed(spec.seed, trial);
  const auto matrix = generate_matrix(scenario);
  Rng pick(derive_seed(scenario.seed, 1));
  const auto& removed = matrix.alternatives()[pick.below(matrix.alternative_count())];

  TrialOutcome out;
  for (Method m : spec.methods) {
    out.flips.push_back(
        reversal_experiment(matrix, spec.weights, m, removed, spec.options).flips.size());
  }
  return out;
}

}  // namespace

MonteCarloReport montecarlo_reversal(const MonteCarloSpec& spec) {
  if (spec.methods.empty()) throw ValidationError("Monte-Carlo run needs at least one method");
  if (spec.trials == 0) throw ValidationError("Monte-Carlo run needs at least one trial");
  validate_spec(spec.scenario);
  if (spec.scenario.profiles.size() * spec.scenario.instances_per_profile < 2) {
    throw ValidationError("Monte-Carlo run needs at least two alternatives per matrix");
  }

  std::vector<TrialOutcome> outcomes(spec.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, spec.trials));
  if (workers == 1) {
    for (std::size_t t = 0; t < spec.trials; ++t) outcomes[t] = run_trial(spec, t);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t t = w; t < spec.trials; t += workers) {
              outcomes[t] = run_trial(spec, t);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  MonteCarloReport report;
  report.trials = spec.trials;
  report.seed = spec.seed;
  for (Method m : spec.methods) report.per_method.push_back({m, spec.trials, 0, 0});
  for (const auto& o : outcomes) {
    for (std::size_t k = 0; k < spec.methods.size(); ++k) {
      if (o.flips[k] > 0) ++report.per_method[k].reversals;
      report.per_method[k].total_flips += o.flips[k];
    }
  }
  return report;
}

}  // namespace netsel
