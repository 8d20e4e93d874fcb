#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netsel/analysis.hpp"
#include "netsel/madm_methods.hpp"

namespace netsel {

using OrderedJson = nlohmann::ordered_json;

/// A ranking plus the M-SAW settings that produced it (when relevant).
struct MethodRun {
  RankingResult result;
  std::optional<MsawIncomeBreakdown> breakdown;
  TiePolicy tie = TiePolicy::MeanRank;
};

OrderedJson ranking_to_json(const MethodRun& run);
std::string rankings_text(const std::vector<MethodRun>& runs);
/// Columns: method,position,alternative,score
std::string rankings_csv(const std::vector<MethodRun>& runs);

/// Kendall tau table with method identifiers as row and column headings.
std::string agreement_text(const AgreementReport& report);
OrderedJson agreement_to_json(const AgreementReport& report);

OrderedJson reversal_to_json(const ReversalReport& report);
std::string reversals_text(const std::vector<ReversalReport>& reports);
std::string reversals_csv(const std::vector<ReversalReport>& reports);

OrderedJson montecarlo_to_json(const MonteCarloReport& report);
std::string montecarlo_text(const MonteCarloReport& report);
std::string montecarlo_csv(const MonteCarloReport& report);

std::string join(const std::vector<std::string>& items, const std::string& sep);

}  // namespace netsel
