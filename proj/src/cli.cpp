// Copyright 2026 The rule4 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rule4/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rule4/coefficients.hpp"
#include "rule4/estimator.hpp"
#include "rule4/lemma.hpp"
#include "rule4/optimizer.hpp"
#include "rule4/simulation.hpp"

namespace rule4::cli {

using nlohmann::json;

namespace {

// A command failed in a way that maps to a specific exit code.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what)
      : std::runtime_error(what), code(code) {}
  int code;
};

std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << x;
  return os.str();
}

std::string exact_text(const json& r) {
  return r["exact"].get<std::string>() + " (" +
         fixed(r["value"].get<double>()) + ")";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

CoefficientTable table_for(int n, const std::string& path) {
  if (path.empty()) return exponential_table(std::max(n, 2));
  std::ifstream in(path);
  if (!in) throw CommandError(kInput, "cannot open table file '" + path + "'");
  CoefficientTable table = [&] {
    try {
      return load_table(in, path);
    } catch (const TableFormatError& e) {
      throw CommandError(kInput, path + ": " + e.what());
    }
  }();
  if (!table.covers(n)) {
    throw CommandError(kInput, "table '" + path + "' covers parts up to " +
                                   std::to_string(table.max_part()) +
                                   ", need " + std::to_string(n));
  }
  return table;
}

json plan_json(const EstimatorPlan& plan) {
  json weights = json::array();
  for (const auto& block : plan.blocks) {
    weights.push_back({{"part", block.part}, {"weight", to_json(block.weight)}});
  }
  return {{"weights", weights},
          {"variance_factor", to_json(plan.variance_factor)},
          {"bias_sum", to_json(bias_sum(plan))}};
}

json result_json(const SolveResult& r) {
  return {{"method", method_label(r.method)},
          {"partition", to_json(r.partition)},
          {"objective", to_json(r.objective)},
          {"relaxation_fell_back", r.relaxation_fell_back}};
}

// ---------------------------------------------------------------- optimal

struct OptimalArgs {
  int n = 0;
  std::string method = "gr";
  std::string table;
};

Envelope cmd_optimal(const OptimalArgs& args, Format format) {
  if (args.n < 2) throw CommandError(kUsage, "n must be >= 2");
  const CoefficientTable table = table_for(args.n, args.table);

  std::vector<SolveResult> results;
  if (args.method == "dp") {
    results.push_back(solve_dp(args.n, table));
  } else if (args.method == "closed") {
    results.push_back(solve_closed_form(args.n, table));
  } else if (args.method == "all") {
    results.push_back(solve_dp(args.n, table));
    results.push_back(solve_group_relaxation(args.n, table));
    results.push_back(solve_closed_form(args.n, table));
  } else {
    results.push_back(solve_group_relaxation(args.n, table));
    results.push_back(solve_dp(args.n, table));
  }
  const bool agree =
      std::all_of(results.begin(), results.end(), [&](const SolveResult& r) {
        return r.objective == results.front().objective;
      });
  const SolveResult& chosen = results.front();
  const auto maximizers = count_maximizers(args.n, table);

  json rows = json::array();
  for (const auto& r : results) rows.push_back(result_json(r));
  Envelope env{"optimal", format, {}};
  env.payload = {
      {"n", args.n},
      {"table", table.label()},
      {"method", args.method},
      {"partition", to_json(chosen.partition)},
      {"objective", to_json(chosen.objective)},
      {"optimal_partition_count",
       maximizers[static_cast<std::size_t>(args.n)].get_str()},
      {"results", rows},
      {"plan", plan_json(make_plan(chosen.partition, table))},
      {"agreement", {{"checked", results.size() > 1}, {"agree", agree}}},
  };
  return env;
}

std::string optimal_text(const json& p) {
  std::ostringstream os;
  os << "n = " << p["n"] << "  (table: " << p["table"].get<std::string>()
     << ")\n";
  os << "optimal partition: "
     << p["partition"]["notation"].get<std::string>() << " = ("
     << join(p["partition"]["parts"].get<std::vector<int>>()) << ")\n";
  os << "objective sum C: " << exact_text(p["objective"]) << "\n";
  os << "optimal partitions: " << p["optimal_partition_count"].get<std::string>()
     << "\n\n";
  os << std::left << std::setw(18) << "method" << std::setw(24) << "partition"
     << "objective\n";
  for (const auto& r : p["results"]) {
    std::string method = r["method"].get<std::string>();
    if (r["relaxation_fell_back"].get<bool>()) method += "*";
    os << std::setw(18) << method << std::setw(24)
       << join(r["partition"]["parts"].get<std::vector<int>>())
       << exact_text(r["objective"]) << "\n";
  }
  os << "\nweights (blocks left to right):\n";
  for (const auto& w : p["plan"]["weights"]) {
    os << "  size " << std::setw(4) << w["part"].get<int>() << " "
       << exact_text(w["weight"]) << "\n";
  }
  os << "variance factor: " << exact_text(p["plan"]["variance_factor"])
     << "\n";
  os << "sum a_i d_i: " << p["plan"]["bias_sum"]["exact"].get<std::string>()
     << "\n";
  if (p["agreement"]["checked"].get<bool>()) {
    os << "agreement: "
       << (p["agreement"]["agree"].get<bool>() ? "all methods agree"
                                               : "METHODS DISAGREE")
       << "\n";
  }
  return os.str();
}

std::string optimal_csv(const json& p) {
  std::ostringstream os;
  os << "method,partition,objective,objective_value,relaxation_fell_back\n";
  for (const auto& r : p["results"]) {
    os << r["method"].get<std::string>() << ','
       << csv_quote(join(r["partition"]["parts"].get<std::vector<int>>()))
       << ',' << r["objective"]["exact"].get<std::string>() << ','
       << std::setprecision(17) << r["objective"]["value"].get<double>()
       << ',' << (r["relaxation_fell_back"].get<bool>() ? "true" : "false")
       << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------------ table

struct TableArgs {
  int from = 0;
  int to = 0;
  std::string table;
};

Envelope cmd_table(const TableArgs& args, Format format) {
  if (args.from < 2 || args.to < args.from) {
    throw CommandError(kUsage, "need 2 <= n_from <= n_to");
  }
  const CoefficientTable table = table_for(args.to, args.table);
  const auto exact = solve_dp_range(args.to, table);
  json rows = json::array();
  bool agree = true;
  for (int n = args.from; n <= args.to; ++n) {
    const SolveResult r = solve_group_relaxation(n, table);
    if (r.objective != exact[static_cast<std::size_t>(n - 2)].objective) {
      agree = false;
    }
    rows.push_back({{"n", n},
                    {"partition", to_json(r.partition)},
                    {"objective", to_json(r.objective)},
                    {"variance_factor", to_json(reciprocal(r.objective))},
                    {"relaxation_fell_back", r.relaxation_fell_back}});
  }
  Envelope env{"table", format, {}};
  env.payload = {{"table", table.label()},
                 {"n_from", args.from},
                 {"n_to", args.to},
                 {"rows", rows},
                 {"agreement", {{"checked", true}, {"agree", agree}}}};
  return env;
}

std::string table_text(const json& p) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << std::setw(28) << "partition"
     << std::setw(20) << "notation" << "variance factor\n";
  for (const auto& row : p["rows"]) {
    os << std::setw(6) << row["n"].get<int>() << std::setw(28)
       << join(row["partition"]["parts"].get<std::vector<int>>())
       << std::setw(20) << row["partition"]["notation"].get<std::string>()
       << exact_text(row["variance_factor"]) << "\n";
  }
  return os.str();
}

std::string table_csv(const json& p) {
  std::ostringstream os;
  os << "n,partition,notation,objective,objective_value,variance_factor,"
        "variance_factor_value\n";
  os << std::setprecision(17);
  for (const auto& row : p["rows"]) {
    os << row["n"].get<int>() << ','
       << csv_quote(join(row["partition"]["parts"].get<std::vector<int>>()))
       << ',' << row["partition"]["notation"].get<std::string>() << ','
       << row["objective"]["exact"].get<std::string>() << ','
       << row["objective"]["value"].get<double>() << ','
       << row["variance_factor"]["exact"].get<std::string>() << ','
       << row["variance_factor"]["value"].get<double>() << '\n';
  }
  return os.str();
}

// --------------------------------------------------------------- simulate

struct SimulateArgs {
  int n = 0;
  double theta = 1.0;
  std::int64_t reps = 100000;
  std::uint64_t seed = 1;
  std::string partition;
  unsigned threads = 0;
};

Envelope cmd_simulate(const SimulateArgs& args, Format format) {
  if (args.n < 2) throw CommandError(kUsage, "n must be >= 2");
  if (!(args.theta > 0.0) || !std::isfinite(args.theta)) {
    throw CommandError(kUsage, "--theta must be positive");
  }
  if (args.reps < 1) throw CommandError(kUsage, "--reps must be >= 1");

  const CoefficientTable table = exponential_table(args.n);
  std::optional<Partition> partition;
  if (args.partition.empty()) {
    partition = solve_group_relaxation(args.n, table).partition;
  } else {
    try {
      partition = Partition::parse(args.partition);
    } catch (const std::invalid_argument& e) {
      throw CommandError(kUsage, std::string("--partition: ") + e.what());
    }
    if (partition->n() != args.n) {
      throw CommandError(kUsage, "--partition sums to " +
                                     std::to_string(partition->n()) +
                                     ", expected " + std::to_string(args.n));
    }
  }
  const EstimatorPlan plan = make_plan(*partition, table);
  const SimulationReport report =
      monte_carlo(plan, args.theta, args.reps, args.seed, args.threads);

  Envelope env{"simulate", format, {}};
  env.payload = {
      {"n", report.n},
      {"theta", report.theta},
      {"replicates", report.replicates},
      {"seed", report.seed},
      {"partition", to_json(report.plan_partition)},
      {"variance_factor", to_json(plan.variance_factor)},
      {"mean_estimate", report.mean_estimate},
      {"variance_estimate", report.variance_estimate},
      {"mean_std_error", report.mean_std_error},
      {"theoretical_variance", report.theoretical_variance},
      {"bias_z", report.mean_std_error > 0.0
                     ? (report.mean_estimate - report.theta) /
                           report.mean_std_error
                     : 0.0},
      {"variance_ratio",
       report.variance_estimate / report.theoretical_variance},
  };
  return env;
}

const std::vector<std::string>& simulate_fields() {
  static const std::vector<std::string> fields = {
      "n",           "theta",          "replicates",
      "seed",        "mean_estimate",  "variance_estimate",
      "mean_std_error", "theoretical_variance", "bias_z",
      "variance_ratio"};
  return fields;
}

std::string scalar_text(const json& v) {
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(10) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

std::string simulate_text(const json& p) {
  std::ostringstream os;
  os << "partition: " << p["partition"]["notation"].get<std::string>() << " = ("
     << join(p["partition"]["parts"].get<std::vector<int>>()) << ")\n";
  os << "variance factor: " << exact_text(p["variance_factor"]) << "\n";
  for (const auto& key : simulate_fields()) {
    os << std::left << std::setw(22) << key << scalar_text(p[key]) << "\n";
  }
  return os.str();
}

std::string simulate_csv(const json& p) {
  std::ostringstream os;
  os << "field,value\n";
  os << "partition," << csv_quote(join(p["partition"]["parts"].get<std::vector<int>>()))
     << "\n";
  os << std::setprecision(17);
  for (const auto& key : simulate_fields()) {
    os << key << ',' << scalar_text(p[key]) << "\n";
  }
  return os.str();
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  int lemma_max = 1000;
  int agree_max = 400;
};

Envelope cmd_verify(const VerifyArgs& args, Format format) {
  if (args.lemma_max < kTailBoundThreshold) {
    throw CommandError(kUsage, "--lemma-max must be >= " +
                                   std::to_string(kTailBoundThreshold));
  }
  if (args.agree_max < 2) throw CommandError(kUsage, "--agree-max must be >= 2");

  const CoefficientTable table =
      exponential_table(std::max(args.lemma_max, args.agree_max));
  const LemmaReport lemma = verify_lemma(args.lemma_max, table);
  const AgreementSweep sweep = sweep_agreement(args.agree_max, table);
  const bool passed = lemma.ok() && sweep.ok();

  Envelope env{"verify", format, {}};
  env.payload = {
      {"passed", passed},
      {"lemma",
       {{"ok", lemma.ok()},
        {"checked_upper", lemma.checked_upper},
        {"max_ratio_at", lemma.max_ratio_at},
        {"max_ratio", to_json(lemma.max_ratio)},
        {"tail_bound_start", lemma.tail_bound_start},
        {"h_at_tail_bound_start",
         lemma.tail_bound_start > 1 ? envelope_h(lemma.tail_bound_start) : 0.0},
        {"finite_check_ok", lemma.finite_check_ok},
        {"envelope_ok", lemma.envelope_ok},
        {"failures", lemma.failures}}},
      {"agreement",
       {{"ok", sweep.ok()},
        {"agree_max", sweep.n_max},
        {"objective_mismatches", sweep.objective_mismatches},
        {"partition_mismatches", sweep.partition_mismatches},
        {"ties", sweep.ties},
        {"relaxation_fallbacks", sweep.relaxation_fallbacks}}},
  };
  return env;
}

std::string verify_text(const json& p) {
  const auto& l = p["lemma"];
  const auto& a = p["agreement"];
  std::ostringstream os;
  os << "lemma (C_n/n peaks at n=4), checked n <= " << l["checked_upper"]
     << ": " << (l["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
  os << "  max at n=" << l["max_ratio_at"] << ", ratio "
     << exact_text(l["max_ratio"]) << "\n";
  os << "  envelope h(n) below the peak from n=" << l["tail_bound_start"]
     << " (h=" << fixed(l["h_at_tail_bound_start"].get<double>()) << ")\n";
  os << "  finite check " << (l["finite_check_ok"].get<bool>() ? "ok" : "FAILED")
     << ", envelope " << (l["envelope_ok"].get<bool>() ? "ok" : "FAILED")
     << "\n";
  os << "solver agreement (dp, group relaxation, closed form), n <= "
     << a["agree_max"] << ": " << (a["ok"].get<bool>() ? "PASS" : "FAIL")
     << "\n";
  os << "  objective mismatches: ["
     << join(a["objective_mismatches"].get<std::vector<int>>()) << "]\n";
  os << "  partition mismatches: ["
     << join(a["partition_mismatches"].get<std::vector<int>>()) << "]\n";
  os << "  n with tied optima: [" << join(a["ties"].get<std::vector<int>>())
     << "]\n";
  os << "  relaxation fallbacks: ["
     << join(a["relaxation_fallbacks"].get<std::vector<int>>()) << "]\n";
  os << (p["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string verify_csv(const json& p) {
  const auto& l = p["lemma"];
  const auto& a = p["agreement"];
  std::ostringstream os;
  os << "check,value\n";
  os << "passed," << p["passed"].dump() << "\n";
  os << "lemma_checked_upper," << l["checked_upper"] << "\n";
  os << "lemma_max_ratio_at," << l["max_ratio_at"] << "\n";
  os << "lemma_max_ratio," << l["max_ratio"]["exact"].get<std::string>()
     << "\n";
  os << "lemma_tail_bound_start," << l["tail_bound_start"] << "\n";
  os << "lemma_finite_check_ok," << l["finite_check_ok"].dump() << "\n";
  os << "lemma_envelope_ok," << l["envelope_ok"].dump() << "\n";
  os << "agree_max," << a["agree_max"] << "\n";
  os << "agreement_ok," << a["ok"].dump() << "\n";
  os << "ties," << csv_quote(join(a["ties"].get<std::vector<int>>())) << "\n";
  os << "relaxation_fallbacks,"
     << csv_quote(join(a["relaxation_fallbacks"].get<std::vector<int>>()))
     << "\n";
  return os.str();
}

// ------------------------------------------------------------------ count

struct CountArgs {
  int n = 0;
  bool asymptotic = false;
};

Envelope cmd_count(const CountArgs& args, Format format) {
  if (args.n < 0) throw CommandError(kUsage, "n must be >= 0");
  if (args.asymptotic && args.n < 1) {
    throw CommandError(kUsage, "--asymptotic needs n >= 1");
  }
  const BigInt admissible = count_admissible(args.n);
  const BigInt unrestricted = count_unrestricted(args.n);
  Envelope env{"count", format, {}};
  env.payload = {{"n", args.n},
                 {"admissible", admissible.get_str()},
                 {"unrestricted", unrestricted.get_str()}};
  if (args.asymptotic) {
    const double pa = asymptotic_admissible(args.n);
    const double pu = asymptotic_unrestricted(args.n);
    env.payload["asymptotic"] = {
        {"admissible", pa},
        {"unrestricted", pu},
        {"admissible_ratio", admissible.get_d() / pa},
        {"unrestricted_ratio", unrestricted.get_d() / pu}};
  }
  return env;
}

std::string count_text(const json& p) {
  std::ostringstream os;
  os << "n = " << p["n"] << "\n";
  os << "admissible partitions P(n): " << p["admissible"].get<std::string>()
     << "\n";
  os << "all partitions p(n):        " << p["unrestricted"].get<std::string>()
     << "\n";
  if (p.contains("asymptotic")) {
    const auto& a = p["asymptotic"];
    os << std::setprecision(10);
    os << "asymptotic P(n): " << a["admissible"].get<double>()
       << "  ratio " << a["admissible_ratio"].get<double>() << "\n";
    os << "asymptotic p(n): " << a["unrestricted"].get<double>()
       << "  ratio " << a["unrestricted_ratio"].get<double>() << "\n";
  }
  return os.str();
}

std::string count_csv(const json& p) {
  std::ostringstream os;
  os << "n,admissible,unrestricted";
  if (p.contains("asymptotic")) {
    os << ",asymptotic_admissible,admissible_ratio,asymptotic_unrestricted,"
          "unrestricted_ratio";
  }
  os << "\n" << p["n"] << ',' << p["admissible"].get<std::string>() << ','
     << p["unrestricted"].get<std::string>();
  if (p.contains("asymptotic")) {
    const auto& a = p["asymptotic"];
    os << std::setprecision(17) << ',' << a["admissible"].get<double>() << ','
       << a["admissible_ratio"].get<double>() << ','
       << a["unrestricted"].get<double>() << ','
       << a["unrestricted_ratio"].get<double>();
  }
  os << "\n";
  return os.str();
}

int exit_code_for(const Envelope& env) {
  if (env.command == "verify") {
    return env.payload["passed"].get<bool>() ? kOk : kVerification;
  }
  if (env.payload.contains("agreement") &&
      !env.payload["agreement"]["agree"].get<bool>()) {
    return kVerification;
  }
  return kOk;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  return std::nullopt;
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::kText:
      return "text";
    case Format::kJson:
      return "json";
    case Format::kCsv:
      return "csv";
  }
  return "text";
}

json to_json(const Rational& x) {
  return {{"exact", x.str()}, {"value", x.to_double()}};
}

json to_json(const Partition& p) {
  json frequencies = json::object();
  for (const auto& [part, f] : p.frequencies()) {
    frequencies[std::to_string(part)] = f;
  }
  return {{"parts", p.parts()},
          {"frequencies", frequencies},
          {"notation", p.frequency_str()}};
}

std::string render(const Envelope& env) {
  if (env.format == Format::kJson) {
    const json doc = {{"command", env.command},
                      {"format", format_name(env.format)},
                      {"payload", env.payload}};
    return doc.dump(2) + "\n";
  }
  const bool csv = env.format == Format::kCsv;
  const auto& p = env.payload;
  if (env.command == "optimal") return csv ? optimal_csv(p) : optimal_text(p);
  if (env.command == "table") return csv ? table_csv(p) : table_text(p);
  if (env.command == "simulate") return csv ? simulate_csv(p) : simulate_text(p);
  if (env.command == "verify") return csv ? verify_csv(p) : verify_text(p);
  if (env.command == "count") return csv ? count_csv(p) : count_text(p);
  throw std::logic_error("no renderer for command " + env.command);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Optimal weighted-range estimators of sigma for exponential samples"};
  app.require_subcommand(1);

  std::string format_text = "text";
  if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env) {
    format_text = env;
  }
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  OptimalArgs optimal;
  auto* optimal_cmd =
      app.add_subcommand("optimal", "Optimal partition, weights and variance");
  optimal_cmd->add_option("n", optimal.n, "Sample size")->required();
  optimal_cmd->add_option("--method", optimal.method, "Solver")
      ->check(CLI::IsMember({"dp", "gr", "closed", "all"}));
  optimal_cmd->add_option("--table", optimal.table, "Coefficient CSV file");
  add_format(optimal_cmd);

  TableArgs table;
  auto* table_cmd =
      app.add_subcommand("table", "Optimal partitions over a range of n");
  table_cmd->add_option("n_from", table.from, "First n")->required();
  table_cmd->add_option("n_to", table.to, "Last n")->required();
  table_cmd->add_option("--table", table.table, "Coefficient CSV file");
  add_format(table_cmd);

  SimulateArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte-Carlo check of an estimator plan");
  simulate_cmd->add_option("n", simulate.n, "Sample size")->required();
  simulate_cmd->add_option("--theta", simulate.theta, "Exponential scale")
      ->capture_default_str();
  simulate_cmd->add_option("--reps", simulate.reps, "Replicates")
      ->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "64-bit seed")
      ->capture_default_str();
  simulate_cmd->add_option("--partition", simulate.partition,
                           "Parts such as 5,5,4,4,4 (default: optimal)");
  simulate_cmd->add_option("--threads", simulate.threads,
                           "Worker threads (0 = all cores)")
      ->capture_default_str();
  add_format(simulate_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check that C_n/n peaks at n = 4 and that the solvers agree");
  verify_cmd->add_option("--lemma-max", verify.lemma_max, "Lemma range")
      ->capture_default_str();
  verify_cmd->add_option("--agree-max", verify.agree_max, "Agreement range")
      ->capture_default_str();
  add_format(verify_cmd);

  CountArgs count;
  auto* count_cmd =
      app.add_subcommand("count", "Count admissible partitions of n");
  count_cmd->add_option("n", count.n, "Integer to partition")->required();
  count_cmd->add_flag("--asymptotic", count.asymptotic,
                      "Include asymptotic estimates");
  add_format(count_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto format = parse_format(format_text);
  if (!format) {
    err << "unknown format '" << format_text << "' (from " << kFormatEnv
        << ")\n";
    return kUsage;
  }

  try {
    Envelope env;
    if (optimal_cmd->parsed()) {
      env = cmd_optimal(optimal, *format);
    } else if (table_cmd->parsed()) {
      env = cmd_table(table, *format);
    } else if (simulate_cmd->parsed()) {
      env = cmd_simulate(simulate, *format);
    } else if (verify_cmd->parsed()) {
      env = cmd_verify(verify, *format);
    } else {
      env = cmd_count(count, *format);
    }
    out << render(env);
    const int code = exit_code_for(env);
    if (code == kVerification) err << "verification failed\n";
    return code;
  } catch (const CommandError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  }
}

}  // namespace rule4::cli
