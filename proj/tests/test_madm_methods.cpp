#include <doctest.h>

#include <cmath>

#include "netsel/errors.hpp"
#include "netsel/madm_methods.hpp"
#include "netsel/scenario.hpp"
#include "netsel/weighting.hpp"
#include "oracles.hpp"

using namespace netsel;

namespace {

using Order = std::vector<std::string>;

const Order kTable4Msaw = {"N(3)", "N(2)", "N(4)", "N(5)", "N(0)", "N(1)"};
const Order kTable6Msaw = {"N(3)", "N(2)", "N(5)", "N(0)", "N(1)"};

std::vector<double> printed_voip() {
  const auto row = printed_weights(Service::VoIP);
  return {row.begin(), row.end()};
}

}  // namespace

TEST_CASE("M-SAW reproduces the VoIP ranking under both tie policies") {
  const auto m = table2_matrix();
  const auto w = preset_weights(Service::VoIP);
  for (auto tie : {TiePolicy::StableIndex, TiePolicy::MeanRank}) {
    for (unsigned alpha : {6u, 7u, 100u}) {
      CHECK(rank_msaw(m, w, tie, alpha).ranking.order == kTable4Msaw);
    }
    CHECK(rank_msaw(m, w, tie).breakdown.alpha == 6);
  }
}

TEST_CASE("M-SAW per-criterion ranks on the test matrix") {
  // Hand-sorted columns (bandwidth descending, the rest ascending, ties by row).
  const Grid expected_ranks = {
      {5, 4, 5, 0, 0}, {4, 5, 4, 1, 1}, {2, 1, 0, 3, 4},
      {3, 0, 1, 2, 5}, {0, 2, 3, 5, 2}, {1, 3, 2, 4, 3},
  };
  const auto b = msaw_income(table2_matrix(), preset_weights(Service::VoIP).values(),
                             TiePolicy::StableIndex);
  CHECK(b.ranks == expected_ranks);

  // MeanRank averages the tied cost pairs (0.2, 0.2), (1, 1), (0.4, 0.4)
  const auto mean = msaw_income(table2_matrix(), preset_weights(Service::VoIP).values(),
                                TiePolicy::MeanRank);
  CHECK(mean.ranks[0][4] == 0.5);
  CHECK(mean.ranks[1][4] == 0.5);
  CHECK(mean.ranks[4][4] == 2.5);
  CHECK(mean.ranks[5][4] == 2.5);
  CHECK(mean.ranks[2][4] == 4.5);
  CHECK(mean.ranks[3][4] == 4.5);
}

TEST_CASE("M-SAW totals match the hand-computed income table") {
  // (6 - k_ij) * w_j summed with the printed VoIP row, e.g. N(0):
  // 1*0.047 + 2*0.486 + 1*0.371 + 6*0.047 + 6*0.047 = 1.954
  const std::vector<double> expected = {1.954, 1.792, 5.079, 5.147, 3.574, 3.412};
  const auto b = msaw_income(table2_matrix(), printed_voip(), TiePolicy::StableIndex, 6u);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(b.totals[i] - expected[i]) < 1e-9);

  // The rescaled preset only divides every total by 0.998.
  const auto r = rank_msaw(table2_matrix(), preset_weights(Service::VoIP), TiePolicy::StableIndex, 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(r.ranking.scores[i] * 0.998 - expected[i]) < 1e-9);
  }
  CHECK(r.ranking.order == kTable4Msaw);
}

TEST_CASE("M-SAW after dropping N(4) matches the reduced ranking") {
  const auto reduced = drop_alternative(table2_matrix(), "N(4)");
  for (auto tie : {TiePolicy::StableIndex, TiePolicy::MeanRank}) {
    const auto r = rank_msaw(reduced, preset_weights(Service::VoIP), tie, 5u);
    CHECK(r.ranking.order == kTable6Msaw);
  }
}

TEST_CASE("M-SAW on a single alternative scores alpha") {
  const DecisionMatrix m({"only"}, {{"a", Direction::Benefit, ""}, {"b", Direction::Cost, ""}},
                         {{3.0, 4.0}});
  const auto r = rank_msaw(m, WeightVector::create({0.3, 0.7}));
  CHECK(r.ranking.order == Order{"only"});
  CHECK(r.ranking.scores[0] == doctest::Approx(1.0));
  CHECK(rank_msaw(m, WeightVector::create({0.3, 0.7}), TiePolicy::MeanRank, 4u).ranking.scores[0] ==
        doctest::Approx(4.0));
}

TEST_CASE("M-SAW input errors") {
  const auto m = table2_matrix();
  CHECK_THROWS_AS(rank_msaw(m, WeightVector::create({0.5, 0.5})), ValidationError);
  CHECK_THROWS_AS(rank_msaw(m, preset_weights(Service::VoIP), TiePolicy::MeanRank, 5u),
                  ValidationError);
  const DecisionMatrix bad({"a", "b"}, {{"x", Direction::Cost, ""}}, {{1.0}, {-1.0}});
  CHECK_THROWS_AS(rank_msaw(bad, WeightVector::create({1.0})), ValidationError);
}

TEST_CASE("M-SAW ignores monotone rescaling but SAW does not") {
  // Witness: bandwidth 100 -> 1.2 and 10 -> 1.0 is an increasing map, so every
  // per-criterion position (hence M-SAW) is unchanged, but SAW flips.
  const std::vector<CriterionSpec> crit = {{"bw", Direction::Benefit, ""}, {"delay", Direction::Cost, ""}};
  const DecisionMatrix a({"X", "Y"}, crit, {{100.0, 20.0}, {10.0, 10.0}});
  const DecisionMatrix c({"X", "Y"}, crit, {{1.2, 20.0}, {1.0, 10.0}});
  const auto w = WeightVector::create({0.5, 0.5});
  CHECK(rank_msaw(a, w).ranking.scores == rank_msaw(c, w).ranking.scores);
  // a: X = 0.5*1 + 0.5*0.5 = 0.75, Y = 0.5*0.1 + 0.5*1 = 0.55
  CHECK(rank_saw(a, w).order == Order{"X", "Y"});
  // c: X = 0.75, Y = 0.5/1.2 + 0.5 = 0.9167
  CHECK(rank_saw(c, w).order == Order{"Y", "X"});
}

TEST_CASE("SAW basics") {
  const DecisionMatrix two({"p", "q"}, {{"x", Direction::Benefit, ""}}, {{2.0}, {4.0}});
  const auto r = rank_saw(two, WeightVector::create({1.0}));
  CHECK(r.scores == std::vector<double>{0.5, 1.0});
  CHECK(r.order == Order{"q", "p"});

  // an alternative holding every best value scores exactly 1
  const DecisionMatrix dom({"a", "b", "c"},
                           {{"x", Direction::Benefit, ""}, {"y", Direction::Cost, ""}},
                           {{5.0, 1.0}, {4.0, 2.0}, {1.0, 3.0}});
  const auto d = rank_saw(dom, WeightVector::create({0.4, 0.6}));
  CHECK(d.scores[0] == 1.0);
  CHECK(d.order.front() == "a");
}

TEST_CASE("SAW agrees with the raw-value oracle") {
  const auto m = table2_matrix();
  const auto w = preset_weights(Service::VoIP);
  const auto got = rank_saw(m, w).scores;
  const auto want = oracle::saw_scores(m, {w.values().begin(), w.values().end()});
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-14));
}

TEST_CASE("WPM basics") {
  const DecisionMatrix two({"p", "q"}, {{"x", Direction::Benefit, ""}}, {{2.0}, {4.0}});
  const auto r = rank_wpm(two, WeightVector::create({1.0}));
  CHECK(r.scores == std::vector<double>{0.5, 1.0});

  const DecisionMatrix dom({"a", "b"}, {{"x", Direction::Benefit, ""}, {"y", Direction::Cost, ""}},
                           {{5.0, 1.0}, {4.0, 2.0}});
  CHECK(rank_wpm(dom, WeightVector::create({0.5, 0.5})).scores[0] == 1.0);

  const DecisionMatrix zero({"a", "b"}, {{"x", Direction::Benefit, ""}}, {{0.0}, {2.0}});
  CHECK_THROWS_AS(rank_wpm(zero, WeightVector::create({1.0})), ValidationError);
}

TEST_CASE("TOPSIS ideal, anti-ideal and ties") {
  const std::vector<CriterionSpec> crit = {{"x", Direction::Benefit, ""}, {"y", Direction::Cost, ""}};
  // a holds both best values, c both worst
  const DecisionMatrix m({"a", "b", "c"}, crit, {{9.0, 1.0}, {5.0, 3.0}, {1.0, 8.0}});
  const auto r = rank_topsis(m, WeightVector::create({0.5, 0.5}));
  CHECK(r.scores[0] == 1.0);
  CHECK(r.scores[2] == 0.0);
  CHECK(r.order == Order{"a", "b", "c"});

  const DecisionMatrix twins({"a", "b", "c"}, crit, {{4.0, 2.0}, {4.0, 2.0}, {1.0, 5.0}});
  const auto t = rank_topsis(twins, WeightVector::create({0.5, 0.5}));
  CHECK(t.scores[0] == t.scores[1]);
  REQUIRE(t.ties.size() == 1);
  CHECK(t.ties[0] == Order{"a", "b"});

  const DecisionMatrix zero({"a", "b"}, {{"x", Direction::Benefit, ""}, {"y", Direction::Benefit, ""}},
                            {{1.0, 0.0}, {2.0, 0.0}});
  // the all-zero column fails validation before TOPSIS sees it
  CHECK_THROWS(rank_topsis(zero, WeightVector::create({0.5, 0.5})));
}

TEST_CASE("AHP aggregation") {
  SUBCASE("single criterion sorts by direction") {
    const DecisionMatrix m({"a", "b", "c"}, {{"delay", Direction::Cost, ""}}, {{30.0}, {10.0}, {20.0}});
    CHECK(rank_ahp(m, WeightVector::create({1.0})).order == Order{"b", "c", "a"});
  }
  SUBCASE("proportional columns give one order for every weight vector") {
    const std::vector<CriterionSpec> crit = {{"x", Direction::Benefit, ""}, {"y", Direction::Benefit, ""}};
    const DecisionMatrix m({"a", "b", "c"}, crit, {{1.0, 3.0}, {4.0, 12.0}, {2.0, 6.0}});
    for (double w0 : {0.0, 0.1, 0.5, 0.9, 1.0}) {
      CHECK(rank_ahp(m, WeightVector::create({w0, 1.0 - w0})).order == Order{"b", "c", "a"});
    }
  }
  SUBCASE("local priorities sum to one per criterion") {
    const auto r = rank_ahp(table2_matrix(), preset_weights(Service::VoIP));
    double sum = 0.0;
    for (double s : r.scores) sum += s;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("legacy methods on the VoIP scenario (standard formulations)") {
  // Frozen from an independent numpy computation of the textbook forms.
  // They differ from the published legacy rows, whose formulations are unstated.
  const auto m = table2_matrix();
  const auto w = preset_weights(Service::VoIP);
  CHECK(rank_saw(m, w).order == Order{"N(3)", "N(2)", "N(5)", "N(4)", "N(0)", "N(1)"});
  CHECK(rank_wpm(m, w).order == Order{"N(3)", "N(2)", "N(5)", "N(4)", "N(0)", "N(1)"});
  CHECK(rank_topsis(m, w).order == Order{"N(3)", "N(2)", "N(4)", "N(5)", "N(0)", "N(1)"});
  CHECK(rank_ahp(m, w).order == Order{"N(3)", "N(2)", "N(5)", "N(4)", "N(0)", "N(1)"});
}

TEST_CASE("method identifiers round-trip") {
  for (Method m : kAllMethods) CHECK(parse_method(to_string(m)) == m);
  CHECK_FALSE(parse_method("gra").has_value());
  CHECK(parse_tie_policy("stable") == TiePolicy::StableIndex);
  CHECK(parse_tie_policy("mean") == TiePolicy::MeanRank);
}
