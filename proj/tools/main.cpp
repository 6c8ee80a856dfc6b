// Command-line surface: removability checks, solving, counting, the
// two-player game, grids, DFA export and the cross-validation runner.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinrm/dfa.hpp"
#include "coinrm/grid.hpp"
#include "coinrm/parity.hpp"
#include "coinrm/solver.hpp"
#include "verify.hpp"

namespace {

constexpr int kSchemaVersion = 1;

using nlohmann::ordered_json;
using namespace coinrm;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json new_record(const std::string& command) {
  ordered_json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  return record;
}

void print_human(const ordered_json& record) {
  for (const auto& [key, value] : record.items()) {
    if (key == "schema_version" || key == "command") continue;
    if (key == "trace" && value.is_array()) {
      std::cout << "trace:\n";
      int step = 1;
      for (const auto& entry : value) {
        const std::string after = entry["after"].get<std::string>();
        std::cout << "  " << step++ << ". remove " << entry["position"].get<int>() << " -> "
                  << (after.empty() ? "(empty)" : after) << "\n";
      }
    } else if (key == "path" && value.is_array()) {
      std::cout << "path:";
      for (const auto& state : value) std::cout << ' ' << state.get<int>();
      std::cout << "\n";
    } else if (key == "dot") {
      std::cout << value.get<std::string>();
    } else if (value.is_string()) {
      std::cout << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(bool json, const ordered_json& record) {
  if (json) std::cout << record.dump(2) << "\n";
  else print_human(record);
}

ordered_json trace_to_json(const MoveTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const TraceStep& step : trace.steps)
    steps.push_back({{"position", step.position}, {"after", step.after}});
  return steps;
}

int cmd_check(bool json, const std::string& variant_flag, const std::string& sequence) {
  Stopwatch watch;
  const Variant variant = variant_from_name(variant_flag);
  ordered_json record = new_record("check");
  record["input"] = sequence;
  record["variant"] = variant_flag;
  switch (variant) {
    case Variant::line_no_gaps: {
      LinearConfig cfg = parse_linear(sequence);
      record["removable"] = is_removable_linear_no_gaps(cfg);
      if (heads_count(cfg) > 0) {
        ParitySumResult s = parity_sum(cfg);
        record["parity_sum"] = s.value;
        record["residue"] = s.residue;
      }
      break;
    }
    case Variant::line_gaps:
      record["removable"] = is_removable_linear_with_gaps(parse_gapped_linear(sequence));
      break;
    case Variant::circle_no_gaps:
      record["removable"] = is_removable_circular_no_gaps(parse_circular(sequence));
      break;
    case Variant::circle_gaps:
      record["removable"] = is_removable_circular_with_gaps(parse_gapped_circular(sequence));
      break;
    case Variant::grid:
      throw Error("use the grid command for grids");
  }
  record["elapsed_ms"] = watch.elapsed_ms();
  emit(json, record);
  return 0;
}

int cmd_solve(bool json, const std::string& variant_flag, std::string method,
              const std::string& sequence) {
  Stopwatch watch;
  const Variant variant = variant_from_name(variant_flag);
  if (method.empty()) method = variant == Variant::line_no_gaps ? "greedy" : "search";
  if (method == "greedy" && variant != Variant::line_no_gaps)
    throw Error("the greedy method applies to line-nogaps only");

  ordered_json record = new_record("solve");
  record["input"] = sequence;
  record["variant"] = variant_flag;
  record["method"] = method;

  std::optional<MoveTrace> trace;
  if (method == "greedy") {
    trace = greedy_solve(parse_linear(sequence));
  } else if (method == "search") {
    SearchResult result;
    switch (variant) {
      case Variant::line_no_gaps: result = brute_force_removable(parse_linear(sequence)); break;
      case Variant::line_gaps:
        result = brute_force_removable(parse_gapped_linear(sequence));
        break;
      case Variant::circle_no_gaps:
        result = brute_force_removable(parse_circular(sequence));
        break;
      case Variant::circle_gaps:
        result = brute_force_removable(parse_gapped_circular(sequence));
        break;
      case Variant::grid: throw Error("use the grid command for grids");
    }
    record["states_explored"] = result.states_explored;
    trace = std::move(result.trace);
  } else {
    throw Error("unknown method \"" + method + "\" (expected greedy or search)");
  }

  record["removable"] = trace.has_value();
  if (trace) record["trace"] = trace_to_json(*trace);
  record["elapsed_ms"] = watch.elapsed_ms();
  emit(json, record);
  return 0;
}

int cmd_count(bool json, unsigned long n, const std::string& method_flag) {
  Stopwatch watch;
  CountMethod method;
  if (method_flag == "matrix") method = CountMethod::matrix;
  else if (method_flag == "recurrence") method = CountMethod::recurrence;
  else if (method_flag == "enumerate") method = CountMethod::enumerate;
  else throw Error("unknown method \"" + method_flag + "\"");

  ordered_json record = new_record("count");
  record["n"] = n;
  record["method"] = method_flag;
  record["count"] = count_removable(n, method).str();
  record["elapsed_ms"] = watch.elapsed_ms();
  emit(json, record);
  return 0;
}

int cmd_game(bool json, const std::string& sequence) {
  Stopwatch watch;
  ordered_json record = new_record("game");
  record["input"] = sequence;
  const GameOutcome outcome = game_winner(parse_gapped_linear(sequence));
  record["winner"] = outcome == GameOutcome::first_wins ? "first" : "second";
  record["elapsed_ms"] = watch.elapsed_ms();
  emit(json, record);
  return 0;
}

int cmd_grid(bool json, const std::string& text, const std::string& method) {
  Stopwatch watch;
  Grid grid = parse_grid(text);
  ordered_json record = new_record("grid");
  record["input"] = text;
  record["rows"] = grid.rows;
  record["cols"] = grid.cols;
  record["method"] = method;
  if (method == "siler") {
    record["removable"] = siler_predicate(grid);
  } else if (method == "brute") {
    SearchResult result = grid_removable_bruteforce(grid);
    record["removable"] = result.removable;
    record["states_explored"] = result.states_explored;
  } else {
    throw Error("unknown method \"" + method + "\" (expected siler or brute)");
  }
  record["elapsed_ms"] = watch.elapsed_ms();
  emit(json, record);
  return 0;
}

int cmd_dfa_export(bool json, bool minimized) {
  Dfa dfa = build_recognizer();
  if (minimized) dfa = minimize(dfa);
  if (!json) {
    std::cout << export_dot(dfa);
    return 0;
  }
  ordered_json record = new_record("dfa-export");
  record["minimized"] = minimized;
  record["states"] = dfa.state_count();
  record["dot"] = export_dot(dfa);
  emit(true, record);
  return 0;
}

int cmd_dfa_run(bool json, bool minimized, const std::string& word) {
  Stopwatch watch;
  Dfa dfa = build_recognizer();
  if (minimized) dfa = minimize(dfa);
  RunResult result = run(dfa, word);
  ordered_json record = new_record("dfa-run");
  record["input"] = word;
  record["minimized"] = minimized;
  record["accepted"] = result.accepted;
  record["path"] = result.path;
  record["elapsed_ms"] = watch.elapsed_ms();
  emit(json, record);
  return 0;
}

int cmd_verify(bool json, int max_len, std::uint64_t seed) {
  Stopwatch watch;
  std::vector<coinrm::tools::SuiteResult> results =
      coinrm::tools::run_verification(max_len, seed, json ? nullptr : &std::cout);
  int failures = 0;
  for (const auto& suite : results)
    if (!suite.passed) ++failures;
  if (json) {
    ordered_json record = new_record("verify");
    record["max_len"] = max_len;
    record["seed"] = seed;
    ordered_json suites = ordered_json::array();
    for (const auto& suite : results) {
      ordered_json entry;
      entry["name"] = suite.name;
      entry["passed"] = suite.passed;
      if (!suite.detail.empty()) entry["detail"] = suite.detail;
      suites.push_back(entry);
    }
    record["suites"] = suites;
    record["failures"] = failures;
    record["elapsed_ms"] = watch.elapsed_ms();
    emit(true, record);
  } else {
    std::cout << (failures == 0 ? "all suites passed" : std::to_string(failures) + " suite(s) failed")
              << " (max_len=" << max_len << ", seed=" << seed << ")\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coin-removal puzzle toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a structured record instead of text");

  std::function<int()> action;

  // check
  std::string check_variant = "line-nogaps";
  std::string check_sequence;
  CLI::App* check = app.add_subcommand("check", "decide removability of a sequence");
  check->add_option("--variant", check_variant,
                    "line-nogaps, line-gaps, circle-nogaps or circle-gaps");
  check->add_option("sequence", check_sequence, "coin sequence, e.g. 11101")->required();
  check->callback([&] { action = [&] { return cmd_check(json, check_variant, check_sequence); }; });

  // solve
  std::string solve_variant = "line-nogaps";
  std::string solve_method;
  std::string solve_sequence;
  CLI::App* solve = app.add_subcommand("solve", "produce a removal trace");
  solve->add_option("--variant", solve_variant,
                    "line-nogaps, line-gaps, circle-nogaps or circle-gaps");
  solve->add_option("--method", solve_method, "greedy (line-nogaps) or search");
  solve->add_option("sequence", solve_sequence)->required();
  solve->callback(
      [&] { action = [&] { return cmd_solve(json, solve_variant, solve_method, solve_sequence); }; });

  // count
  unsigned long count_n = 0;
  std::string count_method = "matrix";
  CLI::App* count = app.add_subcommand("count", "count removable no-gaps sequences of length n");
  count->add_option("n", count_n)->required();
  count->add_option("--method", count_method, "matrix, recurrence or enumerate");
  count->callback([&] { action = [&] { return cmd_count(json, count_n, count_method); }; });

  // game
  std::string game_sequence;
  CLI::App* game = app.add_subcommand("game", "two-player game winner (with-gaps rules)");
  game->add_option("sequence", game_sequence)->required();
  game->callback([&] { action = [&] { return cmd_game(json, game_sequence); }; });

  // grid
  std::string grid_text;
  std::string grid_method = "siler";
  CLI::App* grid = app.add_subcommand("grid", "grid removability, rows joined by /");
  grid->add_option("grid", grid_text, "e.g. 1010/0101")->required();
  grid->add_option("--method", grid_method, "siler or brute");
  grid->callback([&] { action = [&] { return cmd_grid(json, grid_text, grid_method); }; });

  // dfa
  CLI::App* dfa = app.add_subcommand("dfa", "recognizer for removable no-gaps sequences");
  dfa->require_subcommand(1);
  bool dfa_minimized = false;
  CLI::App* dfa_export = dfa->add_subcommand("export", "write the automaton as DOT");
  dfa_export->add_flag("--minimized", dfa_minimized, "export the 5-state minimized automaton");
  dfa_export->callback([&] { action = [&] { return cmd_dfa_export(json, dfa_minimized); }; });
  bool dfa_run_minimized = false;
  std::string dfa_word;
  CLI::App* dfa_run = dfa->add_subcommand("run", "run a word through the recognizer");
  dfa_run->add_flag("--minimized", dfa_run_minimized, "use the minimized automaton");
  dfa_run->add_option("word", dfa_word)->required();
  dfa_run->callback([&] { action = [&] { return cmd_dfa_run(json, dfa_run_minimized, dfa_word); }; });

  // verify
  int verify_max_len = 10;
  std::uint64_t verify_seed = 12345;
  CLI::App* verify = app.add_subcommand("verify", "run every cross-validation suite");
  verify->add_option("--max-len", verify_max_len, "sequence length bound (<= 14)")
      ->check(CLI::Range(1, 14));
  verify->add_option("--seed", verify_seed, "seed for the randomized suites");
  verify->callback([&] { action = [&] { return cmd_verify(json, verify_max_len, verify_seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const coinrm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
