#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netsel/decision_core.hpp"

namespace netsel {

enum class Method { Msaw, Saw, Wpm, Topsis, Ahp };

inline constexpr std::array<Method, 5> kAllMethods = {Method::Msaw, Method::Saw, Method::Wpm,
                                                      Method::Topsis, Method::Ahp};

/// Stable identifiers: msaw, saw, wpm, topsis, ahp.
std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

/// How M-SAW assigns per-criterion positions to alternatives with equal raw values.
enum class TiePolicy {
  StableIndex,  ///< earlier matrix row takes the better position
  MeanRank,     ///< every tied alternative gets the mean of the positions spanned
};

std::string_view to_string(TiePolicy t);
std::optional<TiePolicy> parse_tie_policy(std::string_view text);

struct MsawIncomeBreakdown {
  unsigned alpha = 0;
  /// ranks[i][j]: position of alternative i on criterion j, 0 = best.
  Grid ranks;
  /// income[i][j] = (alpha - ranks[i][j]) * w_j
  Grid income;
  /// Row sums of `income`.
  std::vector<double> totals;
};

struct MsawResult {
  RankingResult ranking;
  MsawIncomeBreakdown breakdown;
};

struct MethodOptions {
  TiePolicy tie = TiePolicy::MeanRank;
  /// M-SAW offset; defaults to the number of alternatives. Must be >= n.
  std::optional<unsigned> alpha;
};

// The ranking functions accept any finite nonnegative weights with a positive
// sum and the matrix's criterion count; they need not sum to one. Scaling the
// weights scales (M-SAW, SAW, AHP) or reshapes monotonically (WPM) every score
// and never changes an order. The WeightVector overloads are the usual entry.

/// Per-criterion rank positions turned into incomes (alpha - k_ij) * w_j and
/// summed per alternative. Benefit columns rank descending, cost columns ascending.
MsawIncomeBreakdown msaw_income(const DecisionMatrix& matrix, std::span<const double> weights,
                                TiePolicy tie, std::optional<unsigned> alpha = std::nullopt);

MsawResult rank_msaw(const DecisionMatrix& matrix, std::span<const double> weights,
                     TiePolicy tie = TiePolicy::MeanRank,
                     std::optional<unsigned> alpha = std::nullopt);
MsawResult rank_msaw(const DecisionMatrix& matrix, const WeightVector& weights,
                     TiePolicy tie = TiePolicy::MeanRank,
                     std::optional<unsigned> alpha = std::nullopt);

/// Weighted sum of max-normalized values.
RankingResult rank_saw(const DecisionMatrix& matrix, std::span<const double> weights);
RankingResult rank_saw(const DecisionMatrix& matrix, const WeightVector& weights);

/// Weighted product of max-normalized values; every raw value must be positive.
RankingResult rank_wpm(const DecisionMatrix& matrix, std::span<const double> weights);
RankingResult rank_wpm(const DecisionMatrix& matrix, const WeightVector& weights);

/// Relative closeness to the ideal point after Euclidean column normalization.
RankingResult rank_topsis(const DecisionMatrix& matrix, std::span<const double> weights);
RankingResult rank_topsis(const DecisionMatrix& matrix, const WeightVector& weights);

/// Weighted sum of local priorities: each direction-adjusted column scaled
/// to unit sum (cost columns use reciprocals).
RankingResult rank_ahp(const DecisionMatrix& matrix, std::span<const double> weights);
RankingResult rank_ahp(const DecisionMatrix& matrix, const WeightVector& weights);

RankingResult rank(Method method, const DecisionMatrix& matrix, std::span<const double> weights,
                   const MethodOptions& options = {});
RankingResult rank(Method method, const DecisionMatrix& matrix, const WeightVector& weights,
                   const MethodOptions& options = {});

}  // namespace netsel
