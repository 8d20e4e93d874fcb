#include <doctest.h>

#include <cmath>
#include <numeric>

#include "netsel/errors.hpp"
#include "netsel/random.hpp"
#include "netsel/weighting.hpp"

using namespace netsel;

TEST_CASE("all-ones 2x2 gives equal weights and lambda 2") {
  const auto d = principal_eigenvector(PairwiseMatrix::create({{1, 1}, {1, 1}}));
  CHECK(d.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.weights[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.principal_eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(d.consistency_ratio == 0.0);
}

TEST_CASE("[[1,3],[1/3,1]] gives (0.75, 0.25)") {
  // characteristic polynomial (1 - l)^2 - 1 = 0 -> l = 2; (A - 2I)w = 0 -> w1 = 3 w2
  const auto d = principal_eigenvector(PairwiseMatrix::create({{1, 3}, {1.0 / 3.0, 1}}));
  CHECK(d.weights[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(d.weights[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d.principal_eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("consistent matrices recover their generating weights") {
  const std::vector<double> w = {0.4, 0.3, 0.2, 0.1};
  const auto d = principal_eigenvector(PairwiseMatrix::from_weights(w));
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(d.weights[i] - w[i]) < 1e-11);
  CHECK(std::abs(d.principal_eigenvalue - 4.0) < 1e-6);
  CHECK(std::abs(consistency_ratio(d, 4)) < 1e-6);
}

TEST_CASE("result does not depend on the scale of the start vector") {
  const auto pm = PairwiseMatrix::create(
      {{1, 3, 5}, {1.0 / 3, 1, 2}, {1.0 / 5, 1.0 / 2, 1}});
  PowerIterationOptions a, b;
  a.start = {1, 2, 3};
  b.start = {10, 20, 30};
  const auto da = principal_eigenvector(pm, a);
  const auto db = principal_eigenvector(pm, b);
  for (std::size_t i = 0; i < 3; ++i) CHECK(da.weights[i] == db.weights[i]);
  CHECK(da.principal_eigenvalue == db.principal_eigenvalue);
}

TEST_CASE("a perturbed 5x5 consistent matrix has positive CR") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w(5);
    for (auto& x : w) x = rng.uniform(0.1, 1.0);
    Grid g = PairwiseMatrix::from_weights(w).entries();
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        g[i][j] *= std::exp(rng.uniform(-0.7, 0.7));
        g[j][i] = 1.0 / g[i][j];
      }
    }
    const auto d = principal_eigenvector(PairwiseMatrix::create(g));
    CHECK(d.principal_eigenvalue >= 5.0 - 1e-9);
    CHECK(d.consistency_ratio > 0.0);
    CHECK(d.consistency_ratio == doctest::Approx(consistency_ratio(d.principal_eigenvalue, 5)));
  }
}

TEST_CASE("reciprocal transpose yields the same weights") {
  const auto pm = PairwiseMatrix::create(
      {{1, 2, 7, 4}, {0.5, 1, 3, 2}, {1.0 / 7, 1.0 / 3, 1, 0.5}, {0.25, 0.5, 2, 1}});
  const auto a = principal_eigenvector(pm);
  const auto b = principal_eigenvector(pm.reciprocal_transpose());
  for (std::size_t i = 0; i < 4; ++i) CHECK(a.weights[i] == doctest::Approx(b.weights[i]).epsilon(1e-12));
}

TEST_CASE("consistency ratio uses the standard random index") {
  CHECK(consistency_ratio(2.5, 2) == 0.0);
  CHECK(consistency_ratio(1.0, 1) == 0.0);
  CHECK(consistency_ratio(3.116, 3) == doctest::Approx(0.058 / 0.58));
  CHECK(random_index(5) == 1.12);
  CHECK(random_index(10) == 1.49);
  CHECK(random_index(12) == 1.49);
}

TEST_CASE("non-convergence is reported") {
  // Three cyclic preferences converge slowly from a skewed start; one step is not enough.
  const auto pm = PairwiseMatrix::create({{1, 9, 1.0 / 9}, {1.0 / 9, 1, 9}, {9, 1.0 / 9, 1}});
  PowerIterationOptions opt;
  opt.max_iter = 1;
  opt.start = {0.8, 0.1, 0.1};
  try {
    principal_eigenvector(pm, opt);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("1 iterations") != std::string::npos);
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
}

TEST_CASE("pairwise validation") {
  CHECK_THROWS_AS(PairwiseMatrix::create({{1, 2}, {0.4, 1}}), ValidationError);
  CHECK_THROWS_AS(PairwiseMatrix::create({{2, 2}, {0.5, 2}}), ValidationError);
  CHECK_THROWS_AS(PairwiseMatrix::create({{1, -1}, {-1, 1}}), ValidationError);
  CHECK_THROWS_AS(PairwiseMatrix::create({{1, 2, 3}, {0.5, 1, 1}}), ValidationError);
  PowerIterationOptions bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(principal_eigenvector(PairwiseMatrix::create({{1}}), bad), ValidationError);
}

TEST_CASE("preset weights are the published rows rescaled to sum one") {
  const std::array<std::array<double, 5>, 3> printed = {{
      {0.047, 0.486, 0.371, 0.047, 0.047},
      {0.458, 0.101, 0.302, 0.074, 0.063},
      {0.299, 0.146, 0.146, 0.108, 0.299},
  }};
  const std::array<Service, 3> services = {Service::VoIP, Service::Video, Service::BestEffort};
  for (std::size_t s = 0; s < 3; ++s) {
    const auto w = preset_weights(services[s]);
    CHECK(printed_weights(services[s]) == printed[s]);
    double sum = 0.0;
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(w[j] == doctest::Approx(printed[s][j] / 0.998).epsilon(1e-12));
      sum += w[j];
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
  CHECK(parse_service("best-effort") == Service::BestEffort);
  CHECK(parse_service("VoIP") == Service::VoIP);
  CHECK_FALSE(parse_service("gaming").has_value());
}
