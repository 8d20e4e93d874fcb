#include "netsel/decision_core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "netsel/errors.hpp"

namespace netsel {

std::string_view to_string(Direction d) {
  return d == Direction::Benefit ? "benefit" : "cost";
}

std::optional<Direction> parse_direction(std::string_view text) {
  std::string lower;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (lower == "benefit" || lower == "b" || lower == "max") return Direction::Benefit;
  if (lower == "cost" || lower == "c" || lower == "min") return Direction::Cost;
  return std::nullopt;
}

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<CriterionSpec> criteria, Grid values)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      values_(std::move(values)) {}

std::vector<double> DecisionMatrix::column(std::size_t col) const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& row : values_) out.push_back(row.at(col));
  return out;
}

std::optional<std::size_t> DecisionMatrix::index_of(std::string_view label) const {
  auto it = std::find(alternatives_.begin(), alternatives_.end(), label);
  if (it == alternatives_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alternatives_.begin());
}

namespace {

std::string coord(std::size_t row, std::size_t col) {
  std::ostringstream os;
  os << "(row " << row << ", col " << col << ")";
  return os.str();
}

}  // namespace

std::string ValidationVerdict::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << '\n';
    os << violations[i].message;
  }
  return os.str();
}

ValidationVerdict validate_matrix(const DecisionMatrix& matrix) {
  ValidationVerdict verdict;
  auto add = [&](Violation::Kind kind, std::optional<std::size_t> row,
                 std::optional<std::size_t> col, std::string msg) {
    verdict.violations.push_back({kind, row, col, std::move(msg)});
  };

  const auto& labels = matrix.alternatives();
  const auto& criteria = matrix.criteria();
  const auto& values = matrix.values();
  const std::size_t n = labels.size();
  const std::size_t m = criteria.size();

  if (n == 0) add(Violation::Kind::Empty, std::nullopt, std::nullopt, "matrix has no alternatives");
  if (m == 0) add(Violation::Kind::Empty, std::nullopt, std::nullopt, "matrix has no criteria");

  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) {
      add(Violation::Kind::EmptyLabel, i, std::nullopt,
          "alternative label at row " + std::to_string(i) + " is empty");
    } else if (!seen.insert(labels[i]).second) {
      add(Violation::Kind::DuplicateAlternative, i, std::nullopt,
          "duplicate alternative '" + labels[i] + "' at row " + std::to_string(i));
    }
  }
  seen.clear();
  for (std::size_t j = 0; j < m; ++j) {
    if (criteria[j].name.empty()) {
      add(Violation::Kind::EmptyLabel, std::nullopt, j,
          "criterion name at col " + std::to_string(j) + " is empty");
    } else if (!seen.insert(criteria[j].name).second) {
      add(Violation::Kind::DuplicateCriterion, std::nullopt, j,
          "duplicate criterion '" + criteria[j].name + "' at col " + std::to_string(j));
    }
  }

  if (values.size() != n) {
    add(Violation::Kind::DimensionMismatch, std::nullopt, std::nullopt,
        "value grid has " + std::to_string(values.size()) + " rows but " + std::to_string(n) +
            " alternatives");
    return verdict;
  }
  bool shape_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].size() != m) {
      shape_ok = false;
      add(Violation::Kind::DimensionMismatch, i, std::nullopt,
          "row " + std::to_string(i) + " has " + std::to_string(values[i].size()) +
              " values but there are " + std::to_string(m) + " criteria");
    }
  }
  if (!shape_ok) return verdict;

  for (std::size_t j = 0; j < m; ++j) {
    const bool benefit = criteria[j].direction == Direction::Benefit;
    double col_max = 0.0;
    bool col_finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = values[i][j];
      if (!std::isfinite(v)) {
        col_finite = false;
        add(Violation::Kind::NonFinite, i, j, "non-finite value at " + coord(i, j));
      } else if (!benefit && v <= 0.0) {
        add(Violation::Kind::NonPositiveCost, i, j,
            "cost criterion '" + criteria[j].name + "' needs a strictly positive value at " +
                coord(i, j));
      } else if (benefit && v < 0.0) {
        add(Violation::Kind::NegativeBenefit, i, j,
            "benefit criterion '" + criteria[j].name + "' has a negative value at " +
                coord(i, j));
      } else {
        col_max = std::max(col_max, v);
      }
    }
    if (benefit && col_finite && n > 0 && col_max <= 0.0) {
      add(Violation::Kind::ZeroBenefitColumn, std::nullopt, j,
          "benefit criterion '" + criteria[j].name + "' (col " + std::to_string(j) +
              ") has no positive value");
    }
  }
  return verdict;
}

void require_valid(const DecisionMatrix& matrix) {
  auto verdict = validate_matrix(matrix);
  if (!verdict.ok()) throw ValidationError("invalid decision matrix:\n" + verdict.summary());
}

Grid normalize(const DecisionMatrix& matrix) {
  require_valid(matrix);
  const std::size_t n = matrix.alternative_count();
  const std::size_t m = matrix.criterion_count();
  Grid out(n, std::vector<double>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const auto col = matrix.column(j);
    if (matrix.criteria()[j].direction == Direction::Benefit) {
      const double hi = *std::max_element(col.begin(), col.end());
      for (std::size_t i = 0; i < n; ++i) out[i][j] = col[i] / hi;
    } else {
      const double lo = *std::min_element(col.begin(), col.end());
      for (std::size_t i = 0; i < n; ++i) out[i][j] = lo / col[i];
    }
  }
  return out;
}

DecisionMatrix drop_alternative(const DecisionMatrix& matrix, std::string_view label) {
  auto idx = matrix.index_of(label);
  if (!idx) throw ValidationError("unknown alternative '" + std::string(label) + "'");
  if (matrix.alternative_count() == 1) {
    throw ValidationError("cannot drop '" + std::string(label) +
                          "': a decision matrix needs at least one alternative");
  }
  auto labels = matrix.alternatives();
  auto values = matrix.values();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(*idx));
  values.erase(values.begin() + static_cast<std::ptrdiff_t>(*idx));
  return DecisionMatrix(std::move(labels), matrix.criteria(), std::move(values));
}

DecisionMatrix duplicate_alternative(const DecisionMatrix& matrix, std::string_view label,
                                     std::optional<std::string> copy_label) {
  auto idx = matrix.index_of(label);
  if (!idx) throw ValidationError("unknown alternative '" + std::string(label) + "'");
  std::string name = copy_label.value_or(std::string(label) + "'");
  if (matrix.index_of(name)) {
    throw ValidationError("copy label '" + name + "' already names an alternative");
  }
  auto labels = matrix.alternatives();
  auto values = matrix.values();
  labels.push_back(std::move(name));
  values.push_back(values.at(*idx));
  return DecisionMatrix(std::move(labels), matrix.criteria(), std::move(values));
}

namespace {

void check_weight_entries(const std::vector<double>& w) {
  if (w.empty()) throw ValidationError("weight vector is empty");
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!std::isfinite(w[j]) || w[j] < 0.0) {
      throw ValidationError("weight " + std::to_string(j) + " must be finite and nonnegative");
    }
  }
}

}  // namespace

WeightVector WeightVector::create(std::vector<double> weights) {
  check_weight_entries(weights);
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << sum << ", expected 1";
    throw ValidationError(os.str());
  }
  return WeightVector(std::move(weights));
}

WeightVector WeightVector::normalized(std::vector<double> weights) {
  check_weight_entries(weights);
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0.0)) throw ValidationError("weights sum to zero");
  for (double& w : weights) w /= sum;
  return WeightVector(std::move(weights));
}

double RankingResult::score_of(std::string_view label) const {
  auto it = std::find(alternatives.begin(), alternatives.end(), label);
  if (it == alternatives.end()) {
    throw ValidationError("unknown alternative '" + std::string(label) + "'");
  }
  return scores[static_cast<std::size_t>(it - alternatives.begin())];
}

RankingResult make_ranking(std::string method, const std::vector<std::string>& alternatives,
                           std::vector<double> scores) {
  std::vector<std::size_t> idx(alternatives.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RankingResult result;
  result.method = std::move(method);
  result.alternatives = alternatives;
  result.scores = std::move(scores);
  for (std::size_t i : idx) result.order.push_back(alternatives[i]);

  // Chains of neighbours within tolerance form one tie group.
  std::vector<std::string> group;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (p > 0 &&
        std::abs(result.scores[idx[p - 1]] - result.scores[idx[p]]) <= kScoreTieTolerance) {
      if (group.empty()) group.push_back(alternatives[idx[p - 1]]);
      group.push_back(alternatives[idx[p]]);
    } else if (!group.empty()) {
      result.ties.push_back(std::move(group));
      group.clear();
    }
  }
  if (!group.empty()) result.ties.push_back(std::move(group));
  return result;
}

}  // namespace netsel
