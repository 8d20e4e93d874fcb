#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netsel {

using Grid = std::vector<std::vector<double>>;

/// Absolute tolerance under which two scores count as tied.
inline constexpr double kScoreTieTolerance = 1e-9;

/// Tolerance on the sum of a WeightVector.
inline constexpr double kWeightSumTolerance = 1e-9;

enum class Direction { Benefit, Cost };

std::string_view to_string(Direction d);
/// Accepts "benefit"/"b"/"cost"/"c" in any case.
std::optional<Direction> parse_direction(std::string_view text);

struct CriterionSpec {
  std::string name;
  Direction direction;
  std::string unit;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// Alternatives x criteria table of raw values. Construction does not
/// validate; every operation that consumes a matrix checks it first.
class DecisionMatrix {
 public:
  DecisionMatrix(std::vector<std::string> alternatives,
                 std::vector<CriterionSpec> criteria, Grid values);

  std::size_t alternative_count() const { return alternatives_.size(); }
  std::size_t criterion_count() const { return criteria_.size(); }

  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::vector<CriterionSpec>& criteria() const { return criteria_; }
  const Grid& values() const { return values_; }

  double at(std::size_t row, std::size_t col) const { return values_.at(row).at(col); }
  std::vector<double> column(std::size_t col) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<CriterionSpec> criteria_;
  Grid values_;
};

struct Violation {
  enum class Kind {
    Empty,
    DimensionMismatch,
    EmptyLabel,
    DuplicateAlternative,
    DuplicateCriterion,
    NonFinite,
    NonPositiveCost,
    NegativeBenefit,
    ZeroBenefitColumn,
  };
  Kind kind;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  std::string message;
};

struct ValidationVerdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// One line per violation.
  std::string summary() const;
};

ValidationVerdict validate_matrix(const DecisionMatrix& matrix);

/// Throws ValidationError carrying the verdict summary when invalid.
void require_valid(const DecisionMatrix& matrix);

/// Direction-aware max normalization: benefit columns divide by the column
/// max, cost columns take min/value. The best entry of each column maps to 1.
Grid normalize(const DecisionMatrix& matrix);

/// Copy of `matrix` without the row labelled `label`. Rejects unknown labels
/// and removal of the last remaining row.
DecisionMatrix drop_alternative(const DecisionMatrix& matrix, std::string_view label);

/// Copy of `matrix` with the row `label` appended again under `copy_label`
/// (defaults to `label` followed by an apostrophe).
DecisionMatrix duplicate_alternative(const DecisionMatrix& matrix, std::string_view label,
                                     std::optional<std::string> copy_label = std::nullopt);

/// Nonnegative criterion weights summing to one.
class WeightVector {
 public:
  /// Requires finite nonnegative entries summing to 1 within kWeightSumTolerance.
  static WeightVector create(std::vector<double> weights);
  /// Divides by the sum first; requires a positive sum.
  static WeightVector normalized(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }

 private:
  explicit WeightVector(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

struct RankingResult {
  std::string method;
  /// Alternatives in matrix order; scores are aligned with them.
  std::vector<std::string> alternatives;
  std::vector<double> scores;
  /// Best first. Equal scores keep matrix order.
  std::vector<std::string> order;
  /// Groups of labels (size >= 2) whose scores agree within kScoreTieTolerance.
  std::vector<std::vector<std::string>> ties;

  double score_of(std::string_view label) const;
};

/// Builds the order and tie groups from per-alternative scores (higher is better).
RankingResult make_ranking(std::string method, const std::vector<std::string>& alternatives,
                           std::vector<double> scores);

}  // namespace netsel
