#include "netsel/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "netsel/errors.hpp"

namespace netsel {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_plain(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

std::optional<double> parse_number(std::string_view text, bool allow_ratio) {
  text = trim(text);
  if (allow_ratio) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_plain(text.substr(0, slash));
      auto den = parse_plain(text.substr(slash + 1));
      if (!num || !den || *den == 0.0) return std::nullopt;
      return *num / *den;
    }
  }
  return parse_plain(text);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.emplace_back(trim(cur));
  return fields;
}

std::vector<Direction> parse_direction_list(std::string_view text) {
  std::vector<Direction> out;
  for (const auto& field : split_csv_line(text)) {
    auto d = parse_direction(field);
    if (!d) throw ValidationError("unknown criterion direction '" + field + "'");
    out.push_back(*d);
  }
  return out;
}

std::vector<Direction> directions_from_json(const json& j,
                                            const std::vector<std::string>& criterion_names) {
  auto parse_one = [](const json& v) {
    if (!v.is_string()) throw ValidationError("direction entries must be strings");
    auto d = parse_direction(v.get<std::string>());
    if (!d) throw ValidationError("unknown criterion direction '" + v.get<std::string>() + "'");
    return *d;
  };
  std::vector<Direction> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(parse_one(v));
  } else if (j.is_object()) {
    for (const auto& name : criterion_names) {
      if (!j.contains(name)) {
        throw ValidationError("direction sidecar has no entry for criterion '" + name + "'");
      }
      out.push_back(parse_one(j.at(name)));
    }
    for (const auto& [key, _] : j.items()) {
      if (std::find(criterion_names.begin(), criterion_names.end(), key) ==
          criterion_names.end()) {
        throw ValidationError("direction sidecar names unknown criterion '" + key + "'");
      }
    }
  } else {
    throw ValidationError("direction sidecar must be a JSON array or object");
  }
  return out;
}

std::optional<std::vector<Direction>> default_directions(
    const std::vector<std::string>& criterion_names) {
  static const std::vector<std::string> kNetworkHeader = {"Bandwidth", "Delay", "PLR", "Energy",
                                                          "Cost"};
  if (criterion_names != kNetworkHeader) return std::nullopt;
  return std::vector<Direction>{Direction::Benefit, Direction::Cost, Direction::Cost,
                                Direction::Cost, Direction::Cost};
}

CsvTable parse_matrix_csv(std::istream& in, const std::string& source) {
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    auto fields = split_csv_line(line);
    const std::string where = source + ":" + std::to_string(lineno);
    if (!have_header) {
      if (fields.size() < 2) {
        throw ValidationError(where + ": header needs a label column and at least one criterion");
      }
      table.criterion_names.assign(fields.begin() + 1, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != table.criterion_names.size() + 1) {
      throw ValidationError(where + ": expected " +
                            std::to_string(table.criterion_names.size() + 1) + " fields, got " +
                            std::to_string(fields.size()));
    }
    std::vector<double> row;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      auto v = parse_number(fields[f]);
      if (!v) {
        throw ValidationError(where + ": column " + std::to_string(f) + " value '" + fields[f] +
                              "' is not a number");
      }
      row.push_back(*v);
    }
    table.labels.push_back(fields[0]);
    table.values.push_back(std::move(row));
  }
  if (!have_header) throw ValidationError(source + ": empty matrix file");
  if (table.labels.empty()) throw ValidationError(source + ": matrix has no rows");
  return table;
}

DecisionMatrix to_decision_matrix(CsvTable table,
                                  const std::optional<std::vector<Direction>>& directions) {
  auto dirs = directions ? directions : default_directions(table.criterion_names);
  if (!dirs) {
    throw ValidationError(
        "criterion directions are required for this header (use --directions or a sidecar)");
  }
  if (dirs->size() != table.criterion_names.size()) {
    throw ValidationError("got " + std::to_string(dirs->size()) + " directions for " +
                          std::to_string(table.criterion_names.size()) + " criteria");
  }
  std::vector<CriterionSpec> criteria;
  for (std::size_t j = 0; j < dirs->size(); ++j) {
    criteria.push_back({table.criterion_names[j], (*dirs)[j], ""});
  }
  DecisionMatrix matrix(std::move(table.labels), std::move(criteria), std::move(table.values));
  require_valid(matrix);
  return matrix;
}

DecisionMatrix read_matrix_csv(const std::filesystem::path& path,
                               const std::optional<std::vector<Direction>>& directions) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path.string() + "'");
  return to_decision_matrix(parse_matrix_csv(in, path.string()), directions);
}

void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    return q + "\"";
  };
  out << "alternative";
  for (const auto& c : matrix.criteria()) out << ',' << field(c.name);
  out << '\n';
  for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
    out << field(matrix.alternatives()[i]);
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
      out << ',' << format_number(matrix.at(i, j));
    }
    out << '\n';
  }
}

std::string matrix_to_csv(const DecisionMatrix& matrix) {
  std::ostringstream os;
  write_matrix_csv(os, matrix);
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

namespace {

json parse_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<double> read_weights_file(const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    const auto j = parse_json_file(path);
    if (!j.is_array()) throw ValidationError(path.string() + ": weights must be a JSON array");
    std::vector<double> w;
    for (const auto& v : j) {
      if (!v.is_number()) throw ValidationError(path.string() + ": weights must be numbers");
      w.push_back(v.get<double>());
    }
    return w;
  }
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank(line)) continue;
    std::vector<double> w;
    bool numeric = true;
    for (const auto& f : split_csv_line(line)) {
      auto v = parse_number(f);
      if (!v) {
        numeric = false;
        break;
      }
      w.push_back(*v);
    }
    if (numeric) return w;
  }
  throw ValidationError(path.string() + ": no numeric weight row found");
}

Grid read_pairwise_csv(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  Grid g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::vector<double> row;
    for (const auto& f : split_csv_line(line)) {
      auto v = parse_number(f, true);
      if (!v) {
        throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": '" + f +
                              "' is not a number or ratio");
      }
      row.push_back(*v);
    }
    g.push_back(std::move(row));
  }
  return g;
}

json scenario_to_json(const ScenarioSpec& spec) {
  json profiles = json::array();
  for (const auto& p : spec.profiles) {
    profiles.push_back({
        {"name", p.name},
        {"bandwidth", {p.bandwidth.lo, p.bandwidth.hi}},
        {"delay", {p.delay.lo, p.delay.hi}},
        {"plr", {p.plr.lo, p.plr.hi}},
        {"cost", p.cost_level},
        {"energy",
         {{"alpha_u", p.energy.alpha_up}, {"alpha_d", p.energy.alpha_down}, {"beta", p.energy.beta}}},
    });
  }
  return {{"seed", spec.seed},
          {"instances_per_profile", spec.instances_per_profile},
          {"uplink_fraction", spec.uplink_fraction},
          {"profiles", profiles}};
}

namespace {

double number_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ValidationError(where + "." + key + " must be a number");
  }
  return obj.at(key).get<double>();
}

Range range_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ValidationError(where + "." + key + " is missing");
  const auto& r = obj.at(key);
  if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
    throw ValidationError(where + "." + key + " must be [lo, hi]");
  }
  return {r[0].get<double>(), r[1].get<double>()};
}

}  // namespace

ScenarioSpec scenario_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("scenario must be a JSON object");
  ScenarioSpec spec;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw ValidationError("seed must be a nonnegative integer");
    }
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("instances_per_profile")) {
    if (!j.at("instances_per_profile").is_number_unsigned()) {
      throw ValidationError("instances_per_profile must be a nonnegative integer");
    }
    spec.instances_per_profile = j.at("instances_per_profile").get<std::size_t>();
  }
  if (j.contains("uplink_fraction")) spec.uplink_fraction = number_at(j, "uplink_fraction", "");
  if (!j.contains("profiles") || !j.at("profiles").is_array()) {
    throw ValidationError("scenario needs a 'profiles' array");
  }
  const auto& profiles = j.at("profiles");
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    const auto& o = profiles[p];
    const std::string at = "profiles[" + std::to_string(p) + "]";
    if (!o.is_object()) throw ValidationError(at + " must be an object");
    RatProfile prof;
    if (!o.contains("name") || !o.at("name").is_string()) {
      throw ValidationError(at + ".name must be a string");
    }
    prof.name = o.at("name").get<std::string>();
    prof.bandwidth = range_at(o, "bandwidth", at);
    prof.delay = range_at(o, "delay", at);
    prof.plr = range_at(o, "plr", at);
    prof.cost_level = number_at(o, "cost", at);
    if (!o.contains("energy") || !o.at("energy").is_object()) {
      throw ValidationError(at + ".energy must be an object with alpha_u, alpha_d, beta");
    }
    const auto& e = o.at("energy");
    prof.energy = {number_at(e, "alpha_u", at + ".energy"), number_at(e, "alpha_d", at + ".energy"),
                   number_at(e, "beta", at + ".energy")};
    spec.profiles.push_back(std::move(prof));
  }
  validate_spec(spec);
  return spec;
}

ScenarioSpec read_scenario_file(const std::filesystem::path& path) {
  return scenario_from_json(parse_json_file(path));
}

}  // namespace netsel
