#include "netsel/madm_methods.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "netsel/errors.hpp"

namespace netsel {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Msaw: return "msaw";
    case Method::Saw: return "saw";
    case Method::Wpm: return "wpm";
    case Method::Topsis: return "topsis";
    case Method::Ahp: return "ahp";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != '-' && c != '_')
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (Method m : kAllMethods) {
    if (key == to_string(m)) return m;
  }
  return std::nullopt;
}

std::string_view to_string(TiePolicy t) {
  return t == TiePolicy::StableIndex ? "stable" : "mean";
}

std::optional<TiePolicy> parse_tie_policy(std::string_view text) {
  if (text == "stable" || text == "stable-index" || text == "StableIndex")
    return TiePolicy::StableIndex;
  if (text == "mean" || text == "mean-rank" || text == "MeanRank") return TiePolicy::MeanRank;
  return std::nullopt;
}

namespace {

void check_inputs(const DecisionMatrix& matrix, std::span<const double> weights) {
  require_valid(matrix);
  if (weights.size() != matrix.criterion_count()) {
    throw ValidationError("weight vector has " + std::to_string(weights.size()) +
                          " entries but the matrix has " +
                          std::to_string(matrix.criterion_count()) + " criteria");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!std::isfinite(weights[j]) || weights[j] < 0.0) {
      throw ValidationError("weight " + std::to_string(j) + " must be finite and nonnegative");
    }
    sum += weights[j];
  }
  if (!(sum > 0.0)) throw ValidationError("weights sum to zero");
}

// Row indices ordered best first on column j; equal values keep row order.
std::vector<std::size_t> column_order(const DecisionMatrix& matrix, std::size_t j) {
  const auto col = matrix.column(j);
  std::vector<std::size_t> idx(col.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (matrix.criteria()[j].direction == Direction::Benefit) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return col[a] > col[b]; });
  } else {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });
  }
  return idx;
}

}  // namespace

MsawIncomeBreakdown msaw_income(const DecisionMatrix& matrix, std::span<const double> weights,
                                TiePolicy tie, std::optional<unsigned> alpha) {
  check_inputs(matrix, weights);
  const std::size_t n = matrix.alternative_count();
  const std::size_t m = matrix.criterion_count();
  if (alpha && *alpha < n) {
    throw ValidationError("alpha (" + std::to_string(*alpha) +
                          ") must be at least the number of alternatives (" + std::to_string(n) +
                          ")");
  }

  MsawIncomeBreakdown out;
  out.alpha = alpha.value_or(static_cast<unsigned>(n));
  out.ranks.assign(n, std::vector<double>(m, 0.0));
  out.income.assign(n, std::vector<double>(m, 0.0));
  out.totals.assign(n, 0.0);

  for (std::size_t j = 0; j < m; ++j) {
    const auto order = column_order(matrix, j);
    for (std::size_t k = 0; k < n; ++k) out.ranks[order[k]][j] = static_cast<double>(k);

    if (tie == TiePolicy::MeanRank) {
      std::size_t start = 0;
      while (start < n) {
        std::size_t end = start + 1;
        while (end < n && matrix.at(order[end], j) == matrix.at(order[start], j)) ++end;
        if (end - start > 1) {
          // positions start..end-1 share their mean
          const double mean = 0.5 * static_cast<double>(start + end - 1);
          for (std::size_t k = start; k < end; ++k) out.ranks[order[k]][j] = mean;
        }
        start = end;
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      out.income[i][j] = (static_cast<double>(out.alpha) - out.ranks[i][j]) * weights[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.totals[i] += out.income[i][j];
  }
  return out;
}

MsawResult rank_msaw(const DecisionMatrix& matrix, std::span<const double> weights,
                     TiePolicy tie, std::optional<unsigned> alpha) {
  auto breakdown = msaw_income(matrix, weights, tie, alpha);
  auto ranking = make_ranking(std::string(to_string(Method::Msaw)), matrix.alternatives(),
                              breakdown.totals);
  return MsawResult{std::move(ranking), std::move(breakdown)};
}

MsawResult rank_msaw(const DecisionMatrix& matrix, const WeightVector& weights, TiePolicy tie,
                     std::optional<unsigned> alpha) {
  return rank_msaw(matrix, weights.values(), tie, alpha);
}

RankingResult rank_saw(const DecisionMatrix& matrix, std::span<const double> weights) {
  check_inputs(matrix, weights);
  const auto r = normalize(matrix);
  std::vector<double> scores(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < weights.size(); ++j) scores[i] += weights[j] * r[i][j];
  return make_ranking(std::string(to_string(Method::Saw)), matrix.alternatives(),
                      std::move(scores));
}

RankingResult rank_saw(const DecisionMatrix& matrix, const WeightVector& weights) {
  return rank_saw(matrix, weights.values());
}

RankingResult rank_wpm(const DecisionMatrix& matrix, std::span<const double> weights) {
  check_inputs(matrix, weights);
  for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
      if (matrix.at(i, j) <= 0.0) {
        throw ValidationError("WPM needs strictly positive values; got " +
                              std::to_string(matrix.at(i, j)) + " at (row " + std::to_string(i) +
                              ", col " + std::to_string(j) + ")");
      }
    }
  }
  const auto r = normalize(matrix);
  std::vector<double> scores(r.size(), 1.0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < weights.size(); ++j) scores[i] *= std::pow(r[i][j], weights[j]);
  return make_ranking(std::string(to_string(Method::Wpm)), matrix.alternatives(),
                      std::move(scores));
}

RankingResult rank_wpm(const DecisionMatrix& matrix, const WeightVector& weights) {
  return rank_wpm(matrix, weights.values());
}

RankingResult rank_topsis(const DecisionMatrix& matrix, std::span<const double> weights) {
  check_inputs(matrix, weights);
  const std::size_t n = matrix.alternative_count();
  const std::size_t m = matrix.criterion_count();

  Grid v(n, std::vector<double>(m));
  std::vector<double> ideal(m), anti(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto col = matrix.column(j);
    double norm = 0.0;
    for (double x : col) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      throw NumericError("TOPSIS: criterion '" + matrix.criteria()[j].name +
                         "' has a zero-norm column");
    }
    for (std::size_t i = 0; i < n; ++i) v[i][j] = weights[j] * col[i] / norm;

    double lo = v[0][j], hi = v[0][j];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, v[i][j]);
      hi = std::max(hi, v[i][j]);
    }
    const bool benefit = matrix.criteria()[j].direction == Direction::Benefit;
    ideal[j] = benefit ? hi : lo;
    anti[j] = benefit ? lo : hi;
  }

  std::vector<double> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dp = 0.0, dm = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      dp += (v[i][j] - ideal[j]) * (v[i][j] - ideal[j]);
      dm += (v[i][j] - anti[j]) * (v[i][j] - anti[j]);
    }
    dp = std::sqrt(dp);
    dm = std::sqrt(dm);
    // Both distances vanish only when the ideal and anti-ideal coincide; the
    // alternative then sits on the ideal point.
    scores[i] = (dp + dm == 0.0) ? 1.0 : dm / (dp + dm);
  }
  return make_ranking(std::string(to_string(Method::Topsis)), matrix.alternatives(),
                      std::move(scores));
}

RankingResult rank_topsis(const DecisionMatrix& matrix, const WeightVector& weights) {
  return rank_topsis(matrix, weights.values());
}

RankingResult rank_ahp(const DecisionMatrix& matrix, std::span<const double> weights) {
  check_inputs(matrix, weights);
  const std::size_t n = matrix.alternative_count();
  const std::size_t m = matrix.criterion_count();
  std::vector<double> scores(n, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    auto col = matrix.column(j);
    if (matrix.criteria()[j].direction == Direction::Cost) {
      for (double& x : col) x = 1.0 / x;
    }
    const double sum = std::accumulate(col.begin(), col.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) scores[i] += weights[j] * col[i] / sum;
  }
  return make_ranking(std::string(to_string(Method::Ahp)), matrix.alternatives(),
                      std::move(scores));
}

RankingResult rank_ahp(const DecisionMatrix& matrix, const WeightVector& weights) {
  return rank_ahp(matrix, weights.values());
}

RankingResult rank(Method method, const DecisionMatrix& matrix, std::span<const double> weights,
                   const MethodOptions& options) {
  switch (method) {
    case Method::Msaw: return rank_msaw(matrix, weights, options.tie, options.alpha).ranking;
    case Method::Saw: return rank_saw(matrix, weights);
    case Method::Wpm: return rank_wpm(matrix, weights);
    case Method::Topsis: return rank_topsis(matrix, weights);
    case Method::Ahp: return rank_ahp(matrix, weights);
  }
  throw ValidationError("unknown method");
}

RankingResult rank(Method method, const DecisionMatrix& matrix, const WeightVector& weights,
                   const MethodOptions& options) {
  return rank(method, matrix, weights.values(), options);
}

}  // namespace netsel
