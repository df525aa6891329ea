#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dodeca/circuits.hpp"
#include "dodeca/engine.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

dodeca::RuleTable load_rules(const std::string& path) {
  return dodeca::RuleTable::parse(read_file(path));
}

// A scenario argument is a catalog name or a path to a scenario file.
dodeca::Scenario resolve_scenario(const std::string& arg) {
  try {
    return dodeca::make_scenario(arg);
  } catch (const dodeca::UnknownScenario&) {
    if (!std::filesystem::exists(arg)) throw;
  }
  dodeca::Scenario s = dodeca::parse_scenario(read_file(arg));
  s.name = std::filesystem::path(arg).stem().string();
  return s;
}

dodeca::TraceFormat parse_format(const std::string& fmt) {
  if (fmt == "paper") return dodeca::TraceFormat::paper;
  if (fmt == "csv") return dodeca::TraceFormat::csv;
  throw std::runtime_error("unknown format '" + fmt + "' (expected paper or csv)");
}

int cmd_check_rules(const std::string& rules_path) {
  dodeca::RuleTable table = [&] {
    try {
      return load_rules(rules_path);
    } catch (const dodeca::MalformedRow& e) {
      std::cerr << "parse error in " << rules_path << ": " << e.what() << "\n";
      std::exit(kExitUsage);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      std::exit(kExitUsage);
    }
  }();

  std::cout << "rules: " << table.rules().size() << "\n";
  auto conflicts = table.check_determinism();
  int determinism = 0, contradictions = 0;
  for (const auto& c : conflicts)
    (c.line_b == dodeca::Conflict::kFallback ? contradictions : determinism)++;
  std::cout << "determinism conflicts: " << determinism << "\n";
  std::cout << "fallback contradictions: " << contradictions << "\n";
  for (const auto& c : conflicts) std::cout << "  conflict: " << c.describe() << "\n";

  auto overrides = table.fallback_overrides();
  std::cout << "fallback overrides (motion rules with at most three black neighbours): "
            << overrides.size() << "\n";
  for (const auto& r : overrides)
    std::cout << "  line " << r.source_line << " " << r.label << " "
              << dodeca::to_string(r.observation) << " -> " << dodeca::to_char(r.new_state)
              << "\n";

  auto report = table.redundancy_report();
  std::cout << "redundancy pairs (rotation duplicates with equal outcome): " << report.pairs.size()
            << "\n";
  for (const auto& [a, b] : report.pairs) std::cout << "  lines " << a << " ~ " << b << "\n";
  std::cout << "parikh vectors (black neighbours per rule):\n";
  for (const auto& [line, count] : report.parikh)
    std::cout << "  line " << line << ": " << count << "\n";

  return conflicts.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_list_scenarios() {
  for (const auto& e : dodeca::scenario_catalog())
    std::cout << e.name << "  --  " << e.description << "\n";
  return kExitOk;
}

int cmd_run(const std::string& scenario_arg, int steps, const std::string& fmt,
            const std::string& rules_path, bool steps_given) {
  try {
    dodeca::Scenario s = resolve_scenario(scenario_arg);
    dodeca::RuleTable table = load_rules(rules_path);
    int n = steps_given ? steps : s.recommended_steps;
    dodeca::Trace tr = dodeca::run(s.graph, table, s.initial, n, s.probes);
    std::cout << dodeca::format_trace(tr, parse_format(fmt));
    return kExitOk;
  } catch (const dodeca::MissingRule& e) {
    std::cerr << "missing rule: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const std::string& scenario_arg, int steps, const std::string& golden_path,
               const std::string& rules_path, bool steps_given) {
  std::string golden;
  dodeca::Trace tr;
  try {
    golden = read_file(golden_path);
    dodeca::Scenario s = resolve_scenario(scenario_arg);
    dodeca::RuleTable table = load_rules(rules_path);
    int n = steps_given ? steps : s.recommended_steps;
    tr = dodeca::run(s.graph, table, s.initial, n, s.probes);
  } catch (const dodeca::MissingRule& e) {
    std::cerr << "missing rule: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  dodeca::Verdict v = dodeca::compare_trace(tr, golden);
  if (v.match) {
    std::cout << "verified: " << scenario_arg << " matches " << golden_path << "\n";
    return kExitOk;
  }
  std::cout << "verification failed: " << v.message << "\n";
  return kExitVerificationFailed;
}

int cmd_export(const std::string& name, const std::string& out_path) {
  try {
    dodeca::Scenario s = dodeca::make_scenario(name);
    std::string text = dodeca::serialize_scenario(s);
    if (out_path.empty() || out_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write file: " + out_path);
      out << text;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_import_run(const std::string& path, int steps, const std::string& fmt,
                   const std::string& rules_path) {
  try {
    dodeca::Scenario s = dodeca::parse_scenario(read_file(path));
    s.name = std::filesystem::path(path).stem().string();
    auto defects = s.graph.validate();
    if (!defects.empty())
      throw std::runtime_error("scenario graph defect: " + defects.front().description);
    dodeca::RuleTable table = load_rules(rules_path);
    dodeca::Trace tr = dodeca::run(s.graph, table, s.initial, steps, s.probes);
    std::cout << dodeca::format_trace(tr, parse_format(fmt));
    return kExitOk;
  } catch (const dodeca::MissingRule& e) {
    std::cerr << "missing rule: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-state railway-circuit cellular automaton on the dodecagrid"};
  app.require_subcommand(1);

  std::string rules_path = "rules/full.txt";
  std::string scenario;
  std::string fmt = "paper";
  std::string golden_path;
  std::string out_path;
  int steps = 0;

  auto* check = app.add_subcommand("check-rules", "parse a rule file and report coherence");
  check->add_option("rules", rules_path, "rule file")->capture_default_str();

  app.add_subcommand("list-scenarios", "list the scenario catalog");

  auto* run_cmd = app.add_subcommand("run", "run a scenario and print its trace");
  run_cmd->add_option("name", scenario, "catalog name or scenario file");
  run_cmd->add_option("--scenario", scenario, "catalog name or scenario file");
  auto* run_steps = run_cmd->add_option("--steps", steps, "number of steps (default: recommended)");
  run_cmd->add_option("--format", fmt, "paper|csv")->capture_default_str();
  run_cmd->add_option("--rules", rules_path, "rule file")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a scenario and compare against a golden trace");
  verify->add_option("name", scenario, "catalog name or scenario file");
  verify->add_option("--scenario", scenario, "catalog name or scenario file");
  auto* verify_steps = verify->add_option("--steps", steps, "number of steps (default: recommended)");
  verify->add_option("--golden", golden_path, "golden trace file")->required();
  verify->add_option("--rules", rules_path, "rule file")->capture_default_str();

  auto* exp = app.add_subcommand("export", "write a catalog scenario as a scenario file");
  exp->add_option("--scenario", scenario, "catalog name")->required();
  exp->add_option("output", out_path, "output path (default: stdout)");

  auto* imp = app.add_subcommand("import-run", "run a scenario file and print its trace");
  imp->add_option("file", out_path, "scenario file")->required();
  imp->add_option("--steps", steps, "number of steps")->capture_default_str();
  imp->add_option("--format", fmt, "paper|csv")->capture_default_str();
  imp->add_option("--rules", rules_path, "rule file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) return cmd_check_rules(rules_path);
  if (app.get_subcommand("list-scenarios")->parsed()) return cmd_list_scenarios();
  if (run_cmd->parsed()) {
    if (scenario.empty()) {
      std::cerr << "run: a scenario name or path is required\n";
      return kExitUsage;
    }
    return cmd_run(scenario, steps, fmt, rules_path, run_steps->count() > 0);
  }
  if (verify->parsed()) {
    if (scenario.empty()) {
      std::cerr << "verify: a scenario name or path is required\n";
      return kExitUsage;
    }
    return cmd_verify(scenario, steps, golden_path, rules_path, verify_steps->count() > 0);
  }
  if (exp->parsed()) return cmd_export(scenario, out_path);
  if (imp->parsed()) return cmd_import_run(out_path, steps, fmt, rules_path);
  return kExitUsage;
}
