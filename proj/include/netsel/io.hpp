#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>
#include "netsel/decision_core.hpp"
#include "netsel/scenario.hpp"

namespace netsel {

// Matrix CSV: header `alternative,<crit1>,<crit2>,...`, then one row per
// alternative: label followed by its values. Directions never live in the CSV.

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

/// Parses a decimal number, or a ratio "a/b" when `allow_ratio` is set.
std::optional<double> parse_number(std::string_view text, bool allow_ratio = false);

/// Splits one CSV line; double quotes protect commas, fields are trimmed.
std::vector<std::string> split_csv_line(std::string_view line);

/// "B,C,C" or "benefit,cost,cost".
std::vector<Direction> parse_direction_list(std::string_view text);

/// Sidecar JSON: either an array of direction names in column order or an
/// object keyed by criterion name.
std::vector<Direction> directions_from_json(const nlohmann::json& j,
                                            const std::vector<std::string>& criterion_names);

/// Benefit for Bandwidth and Cost for the rest, when the header is exactly
/// Bandwidth,Delay,PLR,Energy,Cost. Otherwise nullopt.
std::optional<std::vector<Direction>> default_directions(
    const std::vector<std::string>& criterion_names);

struct CsvTable {
  std::vector<std::string> criterion_names;
  std::vector<std::string> labels;
  Grid values;
};

/// Throws ValidationError (with line numbers) on malformed content.
CsvTable parse_matrix_csv(std::istream& in, const std::string& source);

/// Applies `directions` (or the default set) to a parsed table.
DecisionMatrix to_decision_matrix(CsvTable table,
                                  const std::optional<std::vector<Direction>>& directions);

/// Throws IoError when the file cannot be opened.
DecisionMatrix read_matrix_csv(const std::filesystem::path& path,
                               const std::optional<std::vector<Direction>>& directions);

void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix);
std::string matrix_to_csv(const DecisionMatrix& matrix);

/// `.json` files hold an array; anything else is a CSV whose first numeric
/// row is the weight row (a non-numeric header row is skipped).
std::vector<double> read_weights_file(const std::filesystem::path& path);

/// m x m CSV grid; entries may be written as ratios such as 1/3.
Grid read_pairwise_csv(const std::filesystem::path& path);

nlohmann::json scenario_to_json(const ScenarioSpec& spec);
ScenarioSpec scenario_from_json(const nlohmann::json& j);
ScenarioSpec read_scenario_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace netsel
