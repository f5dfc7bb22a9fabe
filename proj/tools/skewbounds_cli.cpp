/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "skewbounds/scenario.hpp"
#include "skewbounds/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace skewbounds;

// exit codes: 0 ok, 1 validation/parse, 2 verification failure, 3 io
constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_verify_failed = 2;
constexpr int exit_io = 3;

std::string perm_string(const PermutationAssignment &a) {
  std::string out;
  for (const auto &p : a.perms) {
    out += '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(p[i]);
    }
    out += ']';
  }
  return out;
}

void print_report(const Scenario &sc, const EvalPoint &point,
                  const BoundReport &r) {
  std::printf("scenario: %s\n", sc.id.c_str());
  if (point.theta)
    std::printf("theta:    %s\n", format_number(*point.theta).c_str());
  if (const auto q = effective_q(sc, point))
    std::printf("q:        %s\n", format_number(*q).c_str());
  std::printf("channels: %zu\n", sc.channels.size());
  std::printf("%-10s %16s\n", "sum", format_number(r.sum).c_str());
  const auto line = [&](const char *name, const std::optional<double> &v) {
    if (!v) {
      std::printf("%-10s %16s\n", name, "n/a");
      return;
    }
    std::printf("%-10s %16s", name, format_number(*v).c_str());
    const auto it = r.argmax_perms.find(name);
    if (it != r.argmax_perms.end())
      std::printf("   perms %s", perm_string(it->second).c_str());
    if (std::string(name) == "lb3" && r.sign_choice_lb3)
      std::printf("   sign %s", to_string(*r.sign_choice_lb3));
    std::printf("\n");
  };
  line("lbbar1", r.lbbar1);
  line("lbbar2", r.lbbar2);
  line("lb1", r.lb1);
  line("lb2", r.lb2);
  line("lb3", r.lb3);
  if (r.fu2)
    std::printf("%-10s %16s\n", "fu2", format_number(*r.fu2).c_str());
  if (r.thm2_lhs)
    std::printf("%-10s lhs %12s   rhs %12s\n", "sqrt-bound",
                format_number(*r.thm2_lhs).c_str(),
                format_number(*r.thm2_rhs).c_str());
  std::printf("dominance: %s\n", dominance_ok(r) ? "ok" : "VIOLATED");
}

fs::path find_scenario(const std::string &name, const std::string &dir_flag) {
  std::vector<fs::path> candidates;
  if (!dir_flag.empty())
    candidates.push_back(fs::path(dir_flag) / (name + ".json"));
  candidates.push_back(fs::path("scenarios") / (name + ".json"));
#ifdef SKEWBOUNDS_SCENARIO_DIR
  candidates.push_back(fs::path(SKEWBOUNDS_SCENARIO_DIR) / (name + ".json"));
#endif
  for (const auto &c : candidates)
    if (fs::exists(c))
      return c;
  throw IoError("cannot find " + name + ".json (tried --scenario-dir, "
                "./scenarios and the build-time default)");
}

int run_bounds(const std::string &file, std::optional<double> theta,
               std::optional<double> q) {
  const Scenario sc = load_scenario(file);
  EvalPoint point{theta, q};
  const BoundReport r = report_at(sc, point);
  print_report(sc, point, r);
  return exit_ok;
}

int run_sweep_cmd(const std::string &file, const std::string &out) {
  const Scenario sc = load_scenario(file);
  const auto rows = run_sweep(sc);
  emit_csv(rows, out);
  std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
  return exit_ok;
}

int run_table1(const std::string &dir_flag) {
  const Scenario sc = load_scenario(find_scenario("table1", dir_flag));
  struct Row {
    const char *label;
    double theta;
  };
  const Row rows[] = {{"pi/6", 0.5235987755982988},
                      {"pi/4", 0.7853981633974483},
                      {"pi/2", 1.5707963267948966}};
  std::printf("%-10s %10s %10s %10s %10s %10s %10s\n", "theta", "lbbar1",
              "lbbar2", "lb1", "lb2", "lb3", "sum");
  for (const auto &row : rows) {
    const BoundReport r = report_at(sc, EvalPoint{row.theta, std::nullopt});
    std::printf("%-10s %10.6f %10.6f %10.6f %10.6f %10.6f %10.6f\n", row.label,
                *r.lbbar1, *r.lbbar2, *r.lb1, *r.lb2, *r.lb3, r.sum);
  }
  return exit_ok;
}

int run_verify(std::uint64_t seed, std::size_t trials, bool corrupt) {
  VerifyHooks hooks;
  hooks.corrupt_cptp = corrupt;
  const VerificationSummary summary = run_verification(seed, trials, hooks);
  std::fputs(summary.to_string().c_str(), stdout);
  return summary.all_passed() ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Skew-information uncertainty bounds for quantum channels"};
  app.require_subcommand(1);

  std::string scenario_file, out_file, scenario_dir;
  double theta = 0.0, q = 0.0;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  bool corrupt = false;

  auto *bounds_cmd =
      app.add_subcommand("bounds", "evaluate one scenario point");
  bounds_cmd->add_option("scenario", scenario_file, "scenario JSON file")
      ->required();
  auto *theta_opt = bounds_cmd->add_option("--theta", theta, "theta in radians");
  auto *q_opt = bounds_cmd->add_option("--q", q, "preset q override");

  auto *sweep_cmd = app.add_subcommand("sweep", "run the scenario sweep, "
                                                "write a CSV");
  sweep_cmd->add_option("scenario", scenario_file, "scenario JSON file")
      ->required();
  sweep_cmd->add_option("--out", out_file, "output CSV path")->required();

  auto *table_cmd = app.add_subcommand(
      "table1", "comparison table for the built-in table1 scenario");
  table_cmd->add_option("--scenario-dir", scenario_dir,
                        "directory holding the built-in scenario files");

  auto *verify_cmd =
      app.add_subcommand("verify", "run the randomized property suite");
  verify_cmd->add_option("--seed", seed, "RNG seed")->required();
  verify_cmd->add_option("--trials", trials, "trials per property")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--corrupt-cptp", corrupt)->group(""); // test hook

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds_cmd->parsed())
      return run_bounds(scenario_file,
                        theta_opt->count() ? std::optional<double>(theta)
                                           : std::nullopt,
                        q_opt->count() ? std::optional<double>(q)
                                       : std::nullopt);
    if (sweep_cmd->parsed())
      return run_sweep_cmd(scenario_file, out_file);
    if (table_cmd->parsed())
      return run_table1(scenario_dir);
    if (verify_cmd->parsed())
      return run_verify(seed, trials, corrupt);
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_ok;
}
