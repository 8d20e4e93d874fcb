#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "netsel/decision_core.hpp"

namespace netsel {

/// Positive reciprocal comparison matrix: a_ii = 1 and a_ij = 1 / a_ji.
class PairwiseMatrix {
 public:
  static constexpr double kReciprocalTolerance = 1e-9;

  /// Validates squareness, positivity, unit diagonal and reciprocity.
  static PairwiseMatrix create(Grid entries);
  /// Consistent matrix a_ij = w_i / w_j for a positive weight vector.
  static PairwiseMatrix from_weights(std::span<const double> weights);

  std::size_t size() const { return entries_.size(); }
  double at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const Grid& entries() const { return entries_; }

  /// Element-wise reciprocal of the transpose. For a reciprocal matrix this
  /// is the matrix itself up to rounding.
  PairwiseMatrix reciprocal_transpose() const;

 private:
  explicit PairwiseMatrix(Grid e) : entries_(std::move(e)) {}
  Grid entries_;
};

struct WeightDerivation {
  WeightVector weights;
  double principal_eigenvalue;
  double consistency_ratio;
  std::size_t iterations;
};

struct PowerIterationOptions {
  std::size_t max_iter = 1000;
  double tol = 1e-12;
  /// Uniform when empty. Must be positive; only its direction matters.
  std::vector<double> start;
};

/// Dominant eigenpair by power iteration, renormalizing to unit sum each
/// step. Throws NumericError when successive iterates still differ by more
/// than `tol` (max-norm) after `max_iter` steps.
WeightDerivation principal_eigenvector(const PairwiseMatrix& pm,
                                       const PowerIterationOptions& options = {});

/// Saaty random index for matrices of order m. Orders above 10 reuse RI(10).
double random_index(std::size_t m);

/// CR = ((lambda_max - m) / (m - 1)) / RI(m); zero for m <= 2.
double consistency_ratio(double principal_eigenvalue, std::size_t m);
double consistency_ratio(const WeightDerivation& derivation, std::size_t m);

enum class Service { VoIP, Video, BestEffort };

std::string_view to_string(Service s);
std::optional<Service> parse_service(std::string_view text);

/// The published weight row exactly as printed (rows do not sum to one).
std::array<double, 5> printed_weights(Service service);

/// Published weight row rescaled to sum to one. Criterion order:
/// Bandwidth, Delay, PLR, Energy, Cost.
WeightVector preset_weights(Service service);

}  // namespace netsel
