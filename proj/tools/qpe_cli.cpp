// Command-line front end: failure probabilities, guard-qubit planning,
// bound comparisons, statevector simulation and worst-offset search, with
// human, csv and json renderings. All data goes to stdout, diagnostics to
// stderr. Exit codes: 0 success, 2 argument/domain error, 3 evaluation
// budget exceeded.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpe/bounds.hpp"
#include "qpe/errors.hpp"
#include "qpe/planner.hpp"
#include "qpe/register.hpp"
#include "qpe/search.hpp"
#include "qpe/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Floats are rendered in scientific notation with 12 significant digits in
// every machine-readable format; the strings re-parse to the same doubles.
std::string fmt_sci(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.11e", value);
  return buffer;
}

enum class Format { Human, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "human") return Format::Human;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::domain_error("unknown format '" + name + "' (human, csv, json)");
}

qpe::WindowConvention parse_convention(const std::string& name) {
  if (name == "symmetric") return qpe::WindowConvention::Symmetric;
  if (name == "asymmetric") return qpe::WindowConvention::Asymmetric;
  throw std::domain_error("unknown convention '" + name + "' (symmetric, asymmetric)");
}

const char* convention_name(qpe::WindowConvention convention) {
  return convention == qpe::WindowConvention::Symmetric ? "symmetric" : "asymmetric";
}

qpe::BoundMethod parse_method(const std::string& name) {
  if (name == "exact") return qpe::BoundMethod::Exact;
  if (name == "trigamma") return qpe::BoundMethod::Trigamma;
  throw std::domain_error("unknown method '" + name + "' (exact, trigamma)");
}

std::vector<double> parse_epsilon_list(const std::string& list) {
  std::vector<double> values;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw std::domain_error("empty entry in epsilon list");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &consumed);
    } catch (const std::exception&) {
      throw std::domain_error("bad epsilon '" + item + "'");
    }
    if (consumed != item.size()) throw std::domain_error("bad epsilon '" + item + "'");
    values.push_back(value);
  }
  if (values.empty()) throw std::domain_error("epsilon list is empty");
  return values;
}

// --- subcommand bodies -----------------------------------------------------

void run_eps(int s, int p, const std::string& a_text, const std::string& convention_text,
             Format format) {
  const qpe::WindowConvention convention = parse_convention(convention_text);
  std::size_t consumed = 0;
  double a = 0.0;
  try {
    a = std::stod(a_text, &consumed);
  } catch (const std::exception&) {
    throw std::domain_error("bad offset '" + a_text + "'");
  }
  if (consumed != a_text.size()) throw std::domain_error("bad offset '" + a_text + "'");

  const qpe::FailureReport report = qpe::failure_probability({s, p}, a, convention);
  switch (format) {
    case Format::Human:
      std::cout << fmt_sci(report.epsilon) << "\n";
      break;
    case Format::Csv:
      std::cout << "epsilon,s,p,t,a,convention\n"
                << fmt_sci(report.epsilon) << ',' << report.spec.s << ',' << report.spec.p
                << ',' << report.spec.t() << ',' << fmt_sci(report.a) << ','
                << convention_name(report.convention) << "\n";
      break;
    case Format::Json:
      std::cout << "{\"epsilon\": " << fmt_sci(report.epsilon)
                << ", \"s\": " << report.spec.s << ", \"p\": " << report.spec.p
                << ", \"t\": " << report.spec.t() << ", \"a\": " << fmt_sci(report.a)
                << ", \"convention\": \"" << convention_name(report.convention)
                << "\"}\n";
      break;
  }
}

void run_plan(int s, double epsilon, const std::string& method_text, Format format) {
  const qpe::BoundMethod method = parse_method(method_text);
  const qpe::GuardPlan plan = qpe::plan_guard_qubits(s, epsilon, method);
  if (plan.trigamma_fallback) {
    std::cerr << "note: exact-sum budget exceeded; result comes from the "
                 "conservative trigamma bound\n";
  }
  switch (format) {
    case Format::Human:
      std::cout << plan.p << "\n";
      break;
    case Format::Csv:
      std::cout << "s,epsilon,method,p,trigamma_fallback\n"
                << s << ',' << fmt_sci(epsilon) << ',' << method_text << ',' << plan.p
                << ',' << (plan.trigamma_fallback ? 1 : 0) << "\n";
      break;
    case Format::Json:
      std::cout << "{\"s\": " << s << ", \"epsilon\": " << fmt_sci(epsilon)
                << ", \"method\": \"" << method_text << "\", \"p\": " << plan.p
                << ", \"trigamma_fallback\": "
                << (plan.trigamma_fallback ? "true" : "false") << "}\n";
      break;
  }
}

void print_comparison_csv_row(const qpe::BoundComparison& row) {
  std::cout << fmt_sci(row.epsilon_target) << ',' << row.s << ',' << row.p_exact << ','
            << row.p_trigamma << ',' << row.p_cleve << ',' << row.p_ib << ','
            << row.p_inf_printed << ',' << row.p_inf_exact_inverse << "\n";
}

void run_compare(int s, const std::string& epsilon_list, Format format) {
  const std::vector<double> targets = parse_epsilon_list(epsilon_list);
  std::vector<qpe::BoundComparison> rows;
  rows.reserve(targets.size());
  for (double eps : targets) rows.push_back(qpe::compare_bounds(s, eps));

  switch (format) {
    case Format::Human:
      std::cout << "epsilon        s   p_exact p_trigamma p_cleve p_ib "
                   "p_inf_printed p_inf_exact_inverse\n";
      for (const auto& row : rows) {
        std::printf("%-14s %-3d %-7d %-10d %-7d %-4d %-13d %d\n",
                    fmt_sci(row.epsilon_target).c_str(), row.s, row.p_exact,
                    row.p_trigamma, row.p_cleve, row.p_ib, row.p_inf_printed,
                    row.p_inf_exact_inverse);
      }
      break;
    case Format::Csv:
      std::cout << "epsilon,s,p_exact,p_trigamma,p_cleve,p_ib,p_inf_printed,"
                   "p_inf_exact_inverse\n";
      for (const auto& row : rows) print_comparison_csv_row(row);
      break;
    case Format::Json: {
      std::cout << "[";
      bool first = true;
      for (const auto& row : rows) {
        std::cout << (first ? "" : ", ") << "{\"epsilon\": " << fmt_sci(row.epsilon_target)
                  << ", \"s\": " << row.s << ", \"p_exact\": " << row.p_exact
                  << ", \"p_trigamma\": " << row.p_trigamma
                  << ", \"p_cleve\": " << row.p_cleve << ", \"p_ib\": " << row.p_ib
                  << ", \"p_inf_printed\": " << row.p_inf_printed
                  << ", \"p_inf_exact_inverse\": " << row.p_inf_exact_inverse << "}";
        first = false;
      }
      std::cout << "]\n";
      break;
    }
  }
}

void run_table(int s, int p_max, Format format) {
  const std::vector<qpe::TableRow> rows = qpe::emit_table(s, p_max);
  switch (format) {
    case Format::Human:
      std::cout << "p   epsilon_exact      epsilon_trigamma   epsilon_p_infinity\n";
      for (const auto& row : rows) {
        std::printf("%-3d %-18s %-18s %s\n", row.p, fmt_sci(row.epsilon_exact).c_str(),
                    fmt_sci(row.epsilon_trigamma).c_str(),
                    fmt_sci(row.epsilon_p_infinity).c_str());
      }
      break;
    case Format::Csv:
      std::cout << "p,epsilon_exact,epsilon_trigamma,epsilon_p_infinity\n";
      for (const auto& row : rows) {
        std::cout << row.p << ',' << fmt_sci(row.epsilon_exact) << ','
                  << fmt_sci(row.epsilon_trigamma) << ','
                  << fmt_sci(row.epsilon_p_infinity) << "\n";
      }
      break;
    case Format::Json: {
      std::cout << "[";
      bool first = true;
      for (const auto& row : rows) {
        std::cout << (first ? "" : ", ") << "{\"p\": " << row.p
                  << ", \"epsilon_exact\": " << fmt_sci(row.epsilon_exact)
                  << ", \"epsilon_trigamma\": " << fmt_sci(row.epsilon_trigamma)
                  << ", \"epsilon_p_infinity\": " << fmt_sci(row.epsilon_p_infinity)
                  << "}";
        first = false;
      }
      std::cout << "]\n";
      break;
    }
  }
}

void run_simulate(int t, const std::string& phi_text, const std::string& demo,
                  Format format) {
  const double phi = qpe::parse_phase(phi_text);
  qpe::MeasurementDistribution dist;
  if (demo.empty()) {
    dist = qpe::distribution(t, phi);
  } else if (demo == "rotation") {
    if (t < 2) throw std::domain_error("rotation demo needs t >= 2 (s >= 1, p >= 1)");
    dist = qpe::rotation_demo({t - 1, 1}, phi);
  } else {
    throw std::domain_error("unknown demo '" + demo + "' (rotation)");
  }

  if (format == Format::Json) {
    std::cout << "{\"t\": " << t << ", \"phi\": " << fmt_sci(phi)
              << ", \"probabilities\": [";
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
      std::cout << (k == 0 ? "" : ", ") << fmt_sci(dist.probs[k]);
    }
    std::cout << "]}\n";
    return;
  }
  // human and csv share the index,probability row layout
  std::cout << "index,probability\n";
  for (std::size_t k = 0; k < dist.probs.size(); ++k) {
    std::cout << k << ',' << fmt_sci(dist.probs[k]) << "\n";
  }
}

void run_search(int s, int p, int grid, double tol, Format format) {
  const qpe::SearchResult result = qpe::maximize_failure({s, p}, grid, tol);
  switch (format) {
    case Format::Human:
      std::cout << "a_star = " << fmt_sci(result.a_star) << "\n"
                << "epsilon_star = " << fmt_sci(result.epsilon_star) << "\n"
                << "derivative_at_half = " << fmt_sci(result.derivative_at_half) << "\n"
                << "evaluations = " << result.evaluations << "\n";
      break;
    case Format::Csv:
      std::cout << "a_star,epsilon_star,derivative_at_half,evaluations\n"
                << fmt_sci(result.a_star) << ',' << fmt_sci(result.epsilon_star) << ','
                << fmt_sci(result.derivative_at_half) << ',' << result.evaluations
                << "\n";
      break;
    case Format::Json:
      std::cout << "{\"a_star\": " << fmt_sci(result.a_star)
                << ", \"epsilon_star\": " << fmt_sci(result.epsilon_star)
                << ", \"derivative_at_half\": " << fmt_sci(result.derivative_at_half)
                << ", \"evaluations\": " << result.evaluations << "}\n";
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Failure probabilities and guard-qubit planning for quantum phase estimation"};
  app.require_subcommand(1);

  int s = 1, p = 1, t = 1, p_max = 1, grid = 1024;
  double epsilon = 0.1, tol = 1e-9;
  std::string a_text = "0.5";
  std::string convention_text = "symmetric";
  std::string method_text = "exact";
  std::string format_text = "human";
  std::string phi_text;
  std::string epsilon_list;
  std::string demo;

  auto* cmd_eps = app.add_subcommand("eps", "Failure probability for a register spec");
  cmd_eps->add_option("--s", s, "Accuracy bits")->required();
  cmd_eps->add_option("--p", p, "Guard qubits")->required();
  cmd_eps->add_option("--a", a_text, "Scaled offset in [0,1), default 0.5");
  cmd_eps->add_option("--convention", convention_text, "symmetric or asymmetric");
  cmd_eps->add_option("--format", format_text, "human, csv or json");

  auto* cmd_plan = app.add_subcommand("plan", "Minimal guard qubits for a target epsilon");
  cmd_plan->add_option("--s", s, "Accuracy bits")->required();
  cmd_plan->add_option("--epsilon", epsilon, "Failure-probability target in (0,1)")->required();
  cmd_plan->add_option("--method", method_text, "exact or trigamma");
  cmd_plan->add_option("--format", format_text, "human, csv or json");

  auto* cmd_compare = app.add_subcommand("compare", "Planner results across all bound formulas");
  cmd_compare->add_option("--s", s, "Accuracy bits")->required();
  cmd_compare->add_option("--epsilon-list", epsilon_list, "Comma-separated targets")->required();
  cmd_compare->add_option("--format", format_text, "human, csv or json");

  auto* cmd_table = app.add_subcommand("table", "Failure probabilities for p = 1..p_max");
  cmd_table->add_option("--s", s, "Accuracy bits")->required();
  cmd_table->add_option("--p-max", p_max, "Largest guard-qubit count")->required();
  cmd_table->add_option("--format", format_text, "human, csv or json");

  auto* cmd_simulate = app.add_subcommand("simulate", "Measurement distribution for a phase");
  cmd_simulate->add_option("--t", t, "Register qubits")->required();
  cmd_simulate->add_option("--phi", phi_text, "Phase as decimal or num/den")->required();
  cmd_simulate->add_option("--demo", demo, "'rotation' runs the 2-d rotation-matrix path");
  cmd_simulate->add_option("--format", format_text, "human, csv or json");

  auto* cmd_search = app.add_subcommand("search", "Maximize failure probability over the offset");
  cmd_search->add_option("--s", s, "Accuracy bits")->required();
  cmd_search->add_option("--p", p, "Guard qubits")->required();
  cmd_search->add_option("--grid", grid, "Grid points, default 1024");
  cmd_search->add_option("--tol", tol, "Refinement tolerance, default 1e-9");
  cmd_search->add_option("--format", format_text, "human, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_text);
    if (cmd_eps->parsed()) run_eps(s, p, a_text, convention_text, format);
    if (cmd_plan->parsed()) run_plan(s, epsilon, method_text, format);
    if (cmd_compare->parsed()) run_compare(s, epsilon_list, format);
    if (cmd_table->parsed()) run_table(s, p_max, format);
    if (cmd_simulate->parsed()) run_simulate(t, phi_text, demo, format);
    if (cmd_search->parsed()) run_search(s, p, grid, tol, format);
  } catch (const qpe::budget_error& error) {
    std::cerr << "budget error: " << error.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
