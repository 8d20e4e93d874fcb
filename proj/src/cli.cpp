#include "netsel/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "netsel/analysis.hpp"
#include "netsel/errors.hpp"
#include "netsel/io.hpp"
#include "netsel/report.hpp"
#include "netsel/scenario.hpp"
#include "netsel/weighting.hpp"

namespace netsel::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kFooter = R"(Exit codes:
  0  success
  2  usage error (bad flag, unknown method/preset/format)
  3  I/O error (file missing or unwritable)
  4  validation error (malformed or invalid matrix, weights, scenario, label)
  5  numeric failure (eigenvector non-convergence, degenerate TOPSIS column)

Weights: preset:voip | preset:video | preset:besteffort | pairwise:<csv> | <file.csv|file.json>
  File weights are rescaled to sum to one.
Directions: comma list such as B,C,C,C,C, or a JSON sidecar path. Matrices
  whose header is Bandwidth,Delay,PLR,Energy,Cost default to B,C,C,C,C.
Scenario: 'table1' (built-in margins, illustrative energy coefficients) or a JSON file.)";

std::vector<Method> parse_methods(const std::string& text) {
  if (text == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<Method> out;
  for (const auto& field : split_csv_line(text)) {
    if (field == "all") {
      out.insert(out.end(), kAllMethods.begin(), kAllMethods.end());
      continue;
    }
    auto m = parse_method(field);
    if (!m) throw UsageError("unknown method '" + field + "' (expected msaw, saw, wpm, topsis, ahp or all)");
    out.push_back(*m);
  }
  if (out.empty()) throw UsageError("at least one method is required");
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw UsageError("unknown format '" + text + "' (expected text, json or csv)");
}

std::optional<std::vector<Direction>> resolve_directions(
    const std::string& text, const std::vector<std::string>& criterion_names) {
  if (text.empty()) return std::nullopt;
  std::vector<Direction> dirs;
  if (text.ends_with(".json") || std::filesystem::exists(text)) {
    dirs = directions_from_json(OrderedJson::parse(read_text_file(text)), criterion_names);
  } else {
    dirs = parse_direction_list(text);
  }
  if (dirs.size() != criterion_names.size()) {
    throw ValidationError("got " + std::to_string(dirs.size()) + " directions for " +
                          std::to_string(criterion_names.size()) + " criteria");
  }
  return dirs;
}

DecisionMatrix load_matrix(const RunConfig& cfg) {
  if (cfg.matrix == "table2") {
    auto base = table2_matrix();
    std::vector<std::string> names;
    for (const auto& c : base.criteria()) names.push_back(c.name);
    auto dirs = resolve_directions(cfg.directions, names);
    if (!dirs) return base;
    auto criteria = base.criteria();
    for (std::size_t j = 0; j < criteria.size(); ++j) criteria[j].direction = (*dirs)[j];
    return DecisionMatrix(base.alternatives(), std::move(criteria), base.values());
  }
  std::ifstream in(cfg.matrix);
  if (!in) throw IoError("cannot open matrix file '" + cfg.matrix + "'");
  auto table = parse_matrix_csv(in, cfg.matrix);
  auto dirs = resolve_directions(cfg.directions, table.criterion_names);
  return to_decision_matrix(std::move(table), dirs);
}

struct LoadedWeights {
  WeightVector weights;
  std::string description;
};

LoadedWeights load_weights(const RunConfig& cfg, std::size_t criteria) {
  const std::string& src = cfg.weights;
  std::optional<LoadedWeights> loaded;
  if (src.starts_with("preset:")) {
    auto service = parse_service(src.substr(7));
    if (!service) throw UsageError("unknown weight preset '" + src.substr(7) + "'");
    loaded = LoadedWeights{preset_weights(*service), src};
  } else if (src.starts_with("pairwise:")) {
    const auto path = src.substr(9);
    if (!std::filesystem::exists(path)) throw IoError("cannot open pairwise file '" + path + "'");
    const auto pm = PairwiseMatrix::create(read_pairwise_csv(path));
    auto d = principal_eigenvector(pm);
    std::ostringstream os;
    os << src << " (lambda_max " << d.principal_eigenvalue << ", CR " << d.consistency_ratio
       << ")";
    loaded = LoadedWeights{std::move(d.weights), os.str()};
  } else {
    loaded = LoadedWeights{WeightVector::normalized(read_weights_file(src)), src};
  }
  if (loaded->weights.size() != criteria) {
    throw ValidationError("weights '" + src + "' have " +
                          std::to_string(loaded->weights.size()) +
                          " entries but the matrix has " + std::to_string(criteria) +
                          " criteria");
  }
  return std::move(*loaded);
}

OrderedJson weights_json(const WeightVector& w) {
  return OrderedJson(std::vector<double>(w.values().begin(), w.values().end()));
}

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const auto matrix = load_matrix(cfg);
  const auto w = load_weights(cfg, matrix.criterion_count());
  const MethodOptions options{cfg.tie, cfg.alpha};

  std::vector<MethodRun> runs;
  for (Method m : cfg.methods) {
    if (m == Method::Msaw) {
      auto r = rank_msaw(matrix, w.weights, cfg.tie, cfg.alpha);
      runs.push_back({std::move(r.ranking), std::move(r.breakdown), cfg.tie});
    } else {
      runs.push_back({rank(m, matrix, w.weights, options), std::nullopt, cfg.tie});
    }
  }
  const auto agreement = agreement_report(matrix, w.weights.values(), cfg.methods, options);

  switch (cfg.format) {
    case Format::Text:
      out << "matrix: " << cfg.matrix << "  weights: " << w.description << '\n' << '\n';
      out << rankings_text(runs);
      if (cfg.methods.size() > 1) out << '\n' << agreement_text(agreement);
      break;
    case Format::Json: {
      OrderedJson results = OrderedJson::array();
      for (const auto& r : runs) results.push_back(ranking_to_json(r));
      OrderedJson doc;
      doc["matrix"] = cfg.matrix;
      doc["alternatives"] = matrix.alternatives();
      doc["weights"] = weights_json(w.weights);
      doc["results"] = results;
      doc["agreement"] = agreement_to_json(agreement);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << rankings_csv(runs);
      break;
  }
  return kOk;
}

struct ReversalArgs {
  std::string drop;
  std::string duplicate;
  std::size_t montecarlo = 0;
  std::string spec = "table1";
  std::size_t instances = 0;
  unsigned threads = 1;
  bool seed_given = false;
};

ScenarioSpec load_scenario(const std::string& source) {
  if (source == "table1") return table1_scenario();
  if (!std::filesystem::exists(source)) throw IoError("cannot open scenario file '" + source + "'");
  return read_scenario_file(source);
}

int cmd_reversal(const RunConfig& cfg, const ReversalArgs& args, std::ostream& out) {
  const int modes = (!args.drop.empty()) + (!args.duplicate.empty()) + (args.montecarlo > 0);
  if (modes != 1) throw UsageError("give exactly one of --drop, --duplicate, --montecarlo");
  const MethodOptions options{cfg.tie, cfg.alpha};

  if (args.montecarlo > 0) {
    MonteCarloSpec mc;
    mc.scenario = load_scenario(args.spec);
    if (args.instances > 0) mc.scenario.instances_per_profile = args.instances;
    const auto w = load_weights(cfg, network_criteria().size());
    mc.weights.assign(w.weights.values().begin(), w.weights.values().end());
    mc.methods = cfg.methods;
    mc.options = options;
    mc.trials = args.montecarlo;
    mc.seed = args.seed_given ? cfg.seed : mc.scenario.seed;
    mc.threads = args.threads;
    const auto report = montecarlo_reversal(mc);
    switch (cfg.format) {
      case Format::Text: out << montecarlo_text(report); break;
      case Format::Json: out << montecarlo_to_json(report).dump(2) << '\n'; break;
      case Format::Csv: out << montecarlo_csv(report); break;
    }
    return kOk;
  }

  const auto matrix = load_matrix(cfg);
  const auto w = load_weights(cfg, matrix.criterion_count());
  const std::string& target = args.drop.empty() ? args.duplicate : args.drop;
  if (!matrix.index_of(target)) throw ValidationError("unknown alternative '" + target + "'");

  std::vector<ReversalReport> reports;
  for (Method m : cfg.methods) {
    reports.push_back(args.drop.empty()
                          ? duplication_experiment(matrix, w.weights.values(), m, target, options)
                          : reversal_experiment(matrix, w.weights.values(), m, target, options));
  }
  switch (cfg.format) {
    case Format::Text:
      out << "matrix: " << cfg.matrix << "  weights: " << w.description << '\n';
      out << reversals_text(reports);
      break;
    case Format::Json: {
      OrderedJson arr = OrderedJson::array();
      for (const auto& r : reports) arr.push_back(reversal_to_json(r));
      OrderedJson doc;
      doc["matrix"] = cfg.matrix;
      doc["weights"] = weights_json(w.weights);
      doc["reports"] = arr;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: out << reversals_csv(reports); break;
  }
  return kOk;
}

struct GenArgs {
  std::string spec = "table1";
  std::string out;
  std::size_t instances = 0;
  bool seed_given = false;
};

int cmd_gen(const RunConfig& cfg, const GenArgs& args, std::ostream& out) {
  auto spec = load_scenario(args.spec);
  if (args.seed_given) spec.seed = cfg.seed;
  if (args.instances > 0) spec.instances_per_profile = args.instances;
  const auto csv = matrix_to_csv(generate_matrix(spec));
  if (args.out.empty()) {
    out << csv;
  } else {
    write_text_file(args.out, csv);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank candidate networks with M-SAW and legacy MADM methods.", "netsel"};
  app.require_subcommand(1);
  app.footer(kFooter);

  RunConfig cfg;
  std::string methods_text, tie_text = "mean", format_text = "text";
  unsigned alpha_value = 0;
  ReversalArgs rev;
  GenArgs gen;

  auto add_ranking_options = [&](CLI::App* sub, const char* default_methods) {
    sub->add_option("--matrix", cfg.matrix, "'table2' or a CSV file")->capture_default_str();
    sub->add_option("--directions", cfg.directions, "B,C,... list or JSON sidecar path");
    sub->add_option("--weights", cfg.weights, "weight source")->capture_default_str();
    sub->add_option("--method", methods_text,
                    std::string("comma list of msaw,saw,wpm,topsis,ahp or 'all' (default ") +
                        default_methods + ")");
    sub->add_option("--tie", tie_text, "M-SAW tie policy: mean | stable")->capture_default_str();
    sub->add_option("--alpha", alpha_value, "M-SAW alpha (>= number of alternatives)");
    sub->add_option("--format", format_text, "text | json | csv")->capture_default_str();
  };

  auto* rank_cmd = app.add_subcommand("rank", "Rank the alternatives of a matrix");
  add_ranking_options(rank_cmd, "msaw");
  auto* compare_cmd = app.add_subcommand("compare", "Rank with every method side by side");
  add_ranking_options(compare_cmd, "all");
  auto* reversal_cmd =
      app.add_subcommand("reversal", "Rank-reversal experiment (drop, duplicate or Monte-Carlo)");
  add_ranking_options(reversal_cmd, "all");
  reversal_cmd->add_option("--drop", rev.drop, "alternative to remove");
  reversal_cmd->add_option("--duplicate", rev.duplicate, "alternative to copy");
  reversal_cmd->add_option("--montecarlo", rev.montecarlo, "number of random drop-one trials");
  reversal_cmd->add_option("--spec", rev.spec, "scenario for --montecarlo")->capture_default_str();
  reversal_cmd->add_option("--instances", rev.instances, "override instances per profile");
  reversal_cmd->add_option("--threads", rev.threads, "worker threads for --montecarlo");
  auto* rev_seed = reversal_cmd->add_option("--seed", cfg.seed, "Monte-Carlo base seed");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random matrix from RAT margins");
  gen_cmd->add_option("--spec", gen.spec, "'table1' or a scenario JSON file")
      ->capture_default_str();
  auto* gen_seed = gen_cmd->add_option("--seed", cfg.seed, "seed (overrides the file)");
  gen_cmd->add_option("--out", gen.out, "output CSV path (stdout when omitted)");
  gen_cmd->add_option("--instances", gen.instances, "override instances per profile");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const bool is_rank = rank_cmd->parsed();
    const bool is_gen = gen_cmd->parsed();
    if (!is_gen) {
      cfg.methods = parse_methods(methods_text.empty() ? (is_rank ? "msaw" : "all")
                                                       : methods_text);
      auto tie = parse_tie_policy(tie_text);
      if (!tie) throw UsageError("unknown tie policy '" + tie_text + "' (expected mean or stable)");
      cfg.tie = *tie;
      cfg.format = parse_format(format_text);
      auto* sub = is_rank ? rank_cmd : compare_cmd->parsed() ? compare_cmd : reversal_cmd;
      if (sub->count("--alpha")) cfg.alpha = alpha_value;
    }
    if (is_rank || compare_cmd->parsed()) return cmd_rank(cfg, out);
    if (reversal_cmd->parsed()) {
      rev.seed_given = rev_seed->count() > 0;
      return cmd_reversal(cfg, rev, out);
    }
    gen.seed_given = gen_seed->count() > 0;
    return cmd_gen(cfg, gen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace netsel::cli
