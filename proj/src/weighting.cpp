#include "netsel/weighting.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "netsel/errors.hpp"

namespace netsel {

PairwiseMatrix PairwiseMatrix::create(Grid entries) {
  const std::size_t m = entries.size();
  if (m == 0) throw ValidationError("pairwise matrix is empty");
  for (std::size_t i = 0; i < m; ++i) {
    if (entries[i].size() != m) {
      throw ValidationError("pairwise matrix row " + std::to_string(i) + " has " +
                            std::to_string(entries[i].size()) + " entries, expected " +
                            std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const double a = entries[i][j];
      if (!std::isfinite(a) || a <= 0.0) {
        throw ValidationError("pairwise entry (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") must be finite and positive");
      }
    }
    if (std::abs(entries[i][i] - 1.0) > kReciprocalTolerance) {
      throw ValidationError("pairwise diagonal entry " + std::to_string(i) + " must be 1");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(entries[i][j] * entries[j][i] - 1.0) > kReciprocalTolerance) {
        throw ValidationError("pairwise entries (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") and (" + std::to_string(j) + ", " +
                              std::to_string(i) + ") are not reciprocal");
      }
    }
  }
  return PairwiseMatrix(std::move(entries));
}

PairwiseMatrix PairwiseMatrix::from_weights(std::span<const double> weights) {
  const std::size_t m = weights.size();
  Grid g(m, std::vector<double>(m, 1.0));
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
      throw ValidationError("consistent pairwise matrix needs positive weights");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) g[i][j] = weights[i] / weights[j];
    }
  }
  return create(std::move(g));
}

PairwiseMatrix PairwiseMatrix::reciprocal_transpose() const {
  const std::size_t m = size();
  Grid g(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[i][j] = 1.0 / entries_[j][i];
  return PairwiseMatrix(std::move(g));
}

namespace {

std::vector<double> multiply(const Grid& a, const std::vector<double>& v) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

void scale_to_unit_sum(std::vector<double>& v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& x : v) x /= s;
}

}  // namespace

WeightDerivation principal_eigenvector(const PairwiseMatrix& pm,
                                       const PowerIterationOptions& options) {
  if (options.max_iter < 1) throw ValidationError("max_iter must be at least 1");
  if (!(options.tol > 0.0)) throw ValidationError("tol must be positive");

  const std::size_t m = pm.size();
  std::vector<double> w = options.start;
  if (w.empty()) {
    w.assign(m, 1.0 / static_cast<double>(m));
  } else {
    if (w.size() != m) throw ValidationError("start vector length does not match matrix order");
    for (double x : w) {
      if (!std::isfinite(x) || x <= 0.0) throw ValidationError("start vector must be positive");
    }
    scale_to_unit_sum(w);
  }

  double residual = 0.0;
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    auto next = multiply(pm.entries(), w);
    scale_to_unit_sum(next);
    residual = 0.0;
    for (std::size_t i = 0; i < m; ++i) residual = std::max(residual, std::abs(next[i] - w[i]));
    w = std::move(next);
    if (residual < options.tol) {
      const auto aw = multiply(pm.entries(), w);
      double lambda = 0.0;
      for (std::size_t i = 0; i < m; ++i) lambda += aw[i] / w[i];
      lambda /= static_cast<double>(m);
      return WeightDerivation{WeightVector::normalized(std::move(w)), lambda,
                              consistency_ratio(lambda, m), iter};
    }
  }
  std::ostringstream os;
  os << "power iteration did not converge after " << options.max_iter
     << " iterations (last residual " << residual << ", tol " << options.tol << ")";
  throw NumericError(os.str());
}

double random_index(std::size_t m) {
  static constexpr std::array<double, 11> kRandomIndex = {0.0,  0.0,  0.0,  0.58, 0.90, 1.12,
                                                          1.24, 1.32, 1.41, 1.45, 1.49};
  return kRandomIndex[std::min<std::size_t>(m, 10)];
}

double consistency_ratio(double principal_eigenvalue, std::size_t m) {
  if (m <= 2) return 0.0;
  const double ci = (principal_eigenvalue - static_cast<double>(m)) / static_cast<double>(m - 1);
  return ci / random_index(m);
}

double consistency_ratio(const WeightDerivation& derivation, std::size_t m) {
  return consistency_ratio(derivation.principal_eigenvalue, m);
}

std::string_view to_string(Service s) {
  switch (s) {
    case Service::VoIP: return "voip";
    case Service::Video: return "video";
    case Service::BestEffort: return "besteffort";
  }
  return "?";
}

std::optional<Service> parse_service(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != '-' && c != '_' && c != ' ')
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "voip") return Service::VoIP;
  if (key == "video") return Service::Video;
  if (key == "besteffort" || key == "be") return Service::BestEffort;
  return std::nullopt;
}

std::array<double, 5> printed_weights(Service service) {
  switch (service) {
    case Service::VoIP: return {0.047, 0.486, 0.371, 0.047, 0.047};
    case Service::Video: return {0.458, 0.101, 0.302, 0.074, 0.063};
    case Service::BestEffort: return {0.299, 0.146, 0.146, 0.108, 0.299};
  }
  return {};
}

WeightVector preset_weights(Service service) {
  const auto row = printed_weights(service);
  return WeightVector::normalized(std::vector<double>(row.begin(), row.end()));
}

}  // namespace netsel
