#include "netsel/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "netsel/io.hpp"

namespace netsel {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::size_t widest(const std::vector<std::string>& labels, std::size_t floor) {
  std::size_t w = floor;
  for (const auto& l : labels) w = std::max(w, l.size());
  return w;
}

}  // namespace

OrderedJson ranking_to_json(const MethodRun& run) {
  const auto& r = run.result;
  OrderedJson j;
  j["method"] = r.method;
  if (run.breakdown) {
    j["tie"] = std::string(to_string(run.tie));
    j["alpha"] = run.breakdown->alpha;
  }
  OrderedJson scores = OrderedJson::array();
  for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
    scores.push_back({{"alternative", r.alternatives[i]}, {"score", r.scores[i]}});
  }
  j["scores"] = scores;
  j["order"] = r.order;
  j["ties"] = r.ties;
  if (run.breakdown) {
    OrderedJson income = OrderedJson::array();
    for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
      income.push_back({{"alternative", r.alternatives[i]},
                        {"ranks", run.breakdown->ranks[i]},
                        {"income", run.breakdown->income[i]}});
    }
    j["income"] = income;
  }
  return j;
}

std::string rankings_text(const std::vector<MethodRun>& runs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& r = runs[k].result;
    if (k) os << '\n';
    os << r.method;
    if (runs[k].breakdown) {
      os << " (tie=" << to_string(runs[k].tie) << ", alpha=" << runs[k].breakdown->alpha << ")";
    }
    os << '\n';
    const std::size_t w = widest(r.alternatives, 11);
    os << "  " << pad_left("pos", 3) << "  " << pad_right("alternative", w) << "  "
       << pad_left("score", 12) << '\n';
    for (std::size_t p = 0; p < r.order.size(); ++p) {
      os << "  " << pad_left(std::to_string(p + 1), 3) << "  " << pad_right(r.order[p], w) << "  "
         << pad_left(fixed(r.score_of(r.order[p])), 12) << '\n';
    }
    for (const auto& group : r.ties) os << "  tie: " << join(group, ", ") << '\n';
  }
  return os.str();
}

std::string rankings_csv(const std::vector<MethodRun>& runs) {
  std::ostringstream os;
  os << "method,position,alternative,score\n";
  for (const auto& run : runs) {
    const auto& r = run.result;
    for (std::size_t p = 0; p < r.order.size(); ++p) {
      os << r.method << ',' << (p + 1) << ',' << r.order[p] << ','
         << format_number(r.score_of(r.order[p])) << '\n';
    }
  }
  return os.str();
}

std::string agreement_text(const AgreementReport& report) {
  std::ostringstream os;
  os << "kendall tau\n";
  os << pad_right("", 8);
  for (Method m : report.methods) os << pad_left(std::string(to_string(m)), 9);
  os << '\n';
  for (std::size_t a = 0; a < report.methods.size(); ++a) {
    os << pad_right(std::string(to_string(report.methods[a])), 8);
    for (std::size_t b = 0; b < report.methods.size(); ++b) {
      os << pad_left(fixed(report.tau[a][b], 3), 9);
    }
    os << '\n';
  }
  return os.str();
}

OrderedJson agreement_to_json(const AgreementReport& report) {
  OrderedJson methods = OrderedJson::array();
  for (Method m : report.methods) methods.push_back(std::string(to_string(m)));
  return {{"methods", methods}, {"kendall_tau", report.tau}};
}

OrderedJson reversal_to_json(const ReversalReport& report) {
  OrderedJson flips = OrderedJson::array();
  for (const auto& [a, b] : report.flips) flips.push_back({a, b});
  return {{"method", std::string(to_string(report.method))},
          {"perturbation", std::string(to_string(report.perturbation))},
          {"target", report.target},
          {"baseline_order", report.baseline_order},
          {"reduced_order", report.reduced_order},
          {"expected_order", report.expected_order},
          {"reversed", report.reversed},
          {"flips", flips}};
}

std::string reversals_text(const std::vector<ReversalReport>& reports) {
  std::ostringstream os;
  if (reports.empty()) return "";
  os << to_string(reports.front().perturbation) << ' ' << reports.front().target << '\n';
  os << pad_right("method", 8) << pad_right("reversed", 10) << "order after -> flips\n";
  for (const auto& r : reports) {
    std::vector<std::string> flips;
    for (const auto& [a, b] : r.flips) flips.push_back(a + "/" + b);
    os << pad_right(std::string(to_string(r.method)), 8) << pad_right(r.reversed ? "yes" : "no", 10)
       << join(r.reduced_order, " ") << " -> " << (flips.empty() ? "-" : join(flips, " "))
       << '\n';
    os << pad_right("", 18) << "(before: " << join(r.baseline_order, " ") << ")\n";
  }
  return os.str();
}

std::string reversals_csv(const std::vector<ReversalReport>& reports) {
  std::ostringstream os;
  os << "method,perturbation,target,reversed,baseline_order,reduced_order,flips\n";
  for (const auto& r : reports) {
    std::vector<std::string> flips;
    for (const auto& [a, b] : r.flips) flips.push_back(a + "/" + b);
    os << to_string(r.method) << ',' << to_string(r.perturbation) << ',' << r.target << ','
       << (r.reversed ? "true" : "false") << ',' << join(r.baseline_order, " ") << ','
       << join(r.reduced_order, " ") << ',' << join(flips, " ") << '\n';
  }
  return os.str();
}

OrderedJson montecarlo_to_json(const MonteCarloReport& report) {
  OrderedJson methods = OrderedJson::array();
  for (const auto& s : report.per_method) {
    methods.push_back({{"method", std::string(to_string(s.method))},
                       {"trials", s.trials},
                       {"reversals", s.reversals},
                       {"frequency", s.frequency()},
                       {"total_flips", s.total_flips}});
  }
  return {{"trials", report.trials}, {"seed", report.seed}, {"methods", methods}};
}

std::string montecarlo_text(const MonteCarloReport& report) {
  std::ostringstream os;
  os << "monte-carlo drop-one reversal: " << report.trials << " trials, seed " << report.seed
     << '\n';
  os << pad_right("method", 8) << pad_left("reversals", 10) << pad_left("frequency", 11)
     << pad_left("flips", 8) << '\n';
  for (const auto& s : report.per_method) {
    os << pad_right(std::string(to_string(s.method)), 8)
       << pad_left(std::to_string(s.reversals), 10) << pad_left(fixed(s.frequency(), 4), 11)
       << pad_left(std::to_string(s.total_flips), 8) << '\n';
  }
  return os.str();
}

std::string montecarlo_csv(const MonteCarloReport& report) {
  std::ostringstream os;
  os << "method,trials,reversals,frequency,total_flips\n";
  for (const auto& s : report.per_method) {
    os << to_string(s.method) << ',' << s.trials << ',' << s.reversals << ','
       << format_number(s.frequency()) << ',' << s.total_flips << '\n';
  }
  return os.str();
}

}  // namespace netsel
