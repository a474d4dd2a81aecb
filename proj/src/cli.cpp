// Copyright 2026 The cumlift Authors
//
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

#include "cumlift/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "cumlift/errors.hpp"
#include "cumlift/instance.hpp"
#include "cumlift/report.hpp"

namespace cumlift {

namespace {

constexpr const char* kExampleSm = R"(************************************************************************
file with basedata            : example1.bas
initial value random generator: 0
************************************************************************
projects                      :  1
jobs (incl. supersource/sink ):  6
horizon                       :  5
RESOURCES
  - renewable                 :  1   R
  - nonrenewable              :  0   N
  - doubly constrained        :  0   D
************************************************************************
PROJECT INFORMATION:
pronr.  #jobs rel.date duedate tardcost  MPM-Time
    1      4      0        5        0        5
************************************************************************
PRECEDENCE RELATIONS:
jobnr.    #modes  #successors   successors
   1        1          4           2   3   4   5
   2        1          1           6
   3        1          1           6
   4        1          1           6
   5        1          1           6
   6        1          0
************************************************************************
REQUESTS/DURATIONS:
jobnr. mode duration  R 1
------------------------------------------------------------------------
  1      1     0       0
  2      1     1       5
  3      1     1       3
  4      1     1       2
  5      1     2       4
  6      1     0       0
************************************************************************
RESOURCEAVAILABILITIES:
  R 1
    7
************************************************************************
)";

constexpr const char* kExampleRcp = R"(6 1
7
0 0 4 2 3 4 5
1 5 1 6
1 3 1 6
1 2 1 6
2 4 1 6
0 0 0
)";

constexpr const char* kArcSch = R"(2	1	0	0
0	1	1	1	[-2]
1	1	0
2	1	0
3	1	0
0	1	0	0
1	1	3	2
2	1	2	1
3	1	0	0
2
)";

struct Options {
  std::string instance_path;
  std::string format;
  std::string report_format = "json";
  std::string out_path;
  std::string report_path;
  int n_cover = 100;
  int n_out = 5;
  int max_cover_card = 0;
  bool no_verify = false;
  int bruteforce_limit = kDefaultBruteForceLimit;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SchedulingInstance LoadInstance(const Options& options, std::ostream& err) {
  InstanceFormat format;
  if (!options.format.empty()) {
    format = InstanceFormatFromString(options.format);
  } else if (auto guessed = InstanceFormatFromPath(options.instance_path)) {
    format = *guessed;
  } else {
    throw std::invalid_argument("cannot infer the format of '" + options.instance_path + "'; pass --format");
  }
  std::vector<std::string> warnings;
  SchedulingInstance instance = ParseInstance(ReadFile(options.instance_path), format, &warnings);
  for (const auto& w : warnings) err << "warning: " << options.instance_path << ": " << w << "\n";
  if (instance.name.empty()) instance.name = std::filesystem::path(options.instance_path).stem().string();
  return instance;
}

LiftingConfig ConfigFrom(const Options& options) {
  LiftingConfig config;
  config.n_cover = options.n_cover;
  config.n_out = options.n_out;
  if (options.max_cover_card > 0) config.max_cover_cardinality = options.max_cover_card;
  config.bruteforce_verify = !options.no_verify;
  config.bruteforce_limit = options.bruteforce_limit;
  return config;
}

InferenceReport Infer(const SchedulingInstance& instance, const Options& options, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  InferenceReport report = RunPipeline(instance, ConfigFrom(options));
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << "cumlift: " << report.instance << ": " << report.constraints.size() << " constraints, "
      << report.stats.subproblem_calls << " subproblem calls, " << elapsed << " ms\n";
  return report;
}

void Write(const Options& options, const std::string& text, std::ostream& out) {
  if (options.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + options.out_path + "'");
  file << text;
}

int Check(const SchedulingInstance& instance, const Options& options, std::ostream& out) {
  const DemandSystem system = ToDemandSystem(instance);
  const InferenceReport report = ParseReport(ReadFile(options.report_path));
  const auto inequalities = ToInequalities(report, system);
  std::ostringstream text;
  bool ok = true;
  for (std::size_t k = 0; k < inequalities.size(); ++k) {
    const ValidityResult validity = CheckValidityBruteForce(inequalities[k], system, options.bruteforce_limit);
    const bool lb_ok = inequalities[k].rhs > 0 &&
                       CapacityLowerBound(inequalities[k], system.durations()) == report.constraints[k].capacity_lb;
    text << "constraint " << k << ": " << (validity.valid ? "valid" : "INVALID");
    if (validity.counterexample) {
      text << " (feasible point violating it:";
      for (Column c = 0; c < system.cols(); ++c) {
        if ((*validity.counterexample)[c]) text << " " << system.task_map()[c];
      }
      text << ")";
    }
    text << ", capacity_lb " << (lb_ok ? "reproduced" : "MISMATCH") << "\n";
    ok = ok && validity.valid && lb_ok;
  }
  const SearchlessBound bound = ComputeSearchlessLowerBound(system, inequalities);
  const bool bound_ok = bound.bound == report.searchless_lb;
  text << "searchless_lb " << report.searchless_lb << ": " << (bound_ok ? "reproduced" : "MISMATCH") << "\n";
  ok = ok && bound_ok;
  Write(options, text.str(), out);
  return ok ? kExitOk : kExitVerificationFailed;
}

int SeedFixtures(const std::string& dir, std::ostream& err) {
  std::filesystem::create_directories(dir);
  SchedulingInstance example = ParseInstance(kExampleSm, InstanceFormat::kPsplibSm);
  example.name = "example1";
  const std::pair<const char*, std::string> files[] = {
      {"example1.sm", kExampleSm},
      {"example1.rcp", kExampleRcp},
      {"arc.sch", kArcSch},
      {"example1.json", EncodeCanonical(example) + "\n"},
  };
  for (const auto& [name, text] : files) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + path.string() + "'");
    file << text;
    err << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int CliMain(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cumlift: infer cumulative constraints by lifting cover inequalities", "cumlift"};
  app.require_subcommand(0, 1);
  Options options;
  std::string seed_dir;
  app.add_option("--seed-fixtures", seed_dir, "Write the bundled example instances into DIR and exit");

  auto common = [&](CLI::App* sub) {
    sub->add_option("instance", options.instance_path, "Instance file")->required();
    sub->add_option("--format", options.format, "Instance format: psplib-sm, sch, rcp, json (default: by extension)");
    sub->add_option("--out", options.out_path, "Write primary output to this file instead of stdout");
  };
  auto lifting = [&](CLI::App* sub) {
    sub->add_option("--n-cover", options.n_cover, "Short covers kept for lifting")->capture_default_str();
    sub->add_option("--n-out", options.n_out, "Inferred constraints kept")->capture_default_str();
    sub->add_option("--max-cover-card", options.max_cover_card, "Largest seed cover (2 = disjunctive only)");
    sub->add_flag("--no-verify", options.no_verify, "Skip the brute-force check of small instances");
  };

  CLI::App* infer = app.add_subcommand("infer", "Run the pipeline and write an inference report");
  common(infer);
  lifting(infer);
  infer->add_option("--report-format", options.report_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  CLI::App* bound = app.add_subcommand("bound", "Print the search-less and precedence lower bounds");
  common(bound);
  lifting(bound);
  CLI::App* check = app.add_subcommand("check", "Brute-force verify the constraints of a report");
  common(check);
  check->add_option("report", options.report_path, "Report JSON produced by 'infer'")->required();
  check->add_option("--limit", options.bruteforce_limit, "Largest column count to enumerate")->capture_default_str();
  CLI::App* emit = app.add_subcommand("emit", "Write the inferred constraints as MiniZinc cumulative constraints");
  common(emit);
  lifting(emit);
  CLI::App* graph = app.add_subcommand("graph", "Write the task parallelism graph in DOT format");
  common(graph);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!seed_dir.empty()) return SeedFixtures(seed_dir, err);
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kExitUsage;
    }
    const SchedulingInstance instance = LoadInstance(options, err);
    if (infer->parsed()) {
      const InferenceReport report = Infer(instance, options, err);
      Write(options, EmitReport(report, options.report_format == "text" ? ReportFormat::kText : ReportFormat::kJson),
            out);
    } else if (bound->parsed()) {
      const InferenceReport report = Infer(instance, options, err);
      std::ostringstream text;
      text << "searchless_lb " << report.searchless_lb;
      if (report.certificate.kind == Certificate::Kind::kInferred) {
        text << " (inferred constraint " << report.certificate.index << ", capacity "
             << report.constraints[report.certificate.index].capacity << ")";
      } else if (report.certificate.kind == Certificate::Kind::kResource) {
        text << " (resource " << report.certificate.index << ")";
      }
      text << "\nprecedence_lb " << report.precedence_lb << "\n";
      Write(options, text.str(), out);
    } else if (check->parsed()) {
      return Check(instance, options, out);
    } else if (emit->parsed()) {
      const InferenceReport report = Infer(instance, options, err);
      const DemandSystem system = ToDemandSystem(instance);
      Write(options, EmitModelFragment(instance, system, ToInequalities(report, system)), out);
    } else if (graph->parsed()) {
      Write(options, ExportParallelismGraph(ToDemandSystem(instance)), out);
    }
    return kExitOk;
  } catch (const MalformedInput& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const InfeasibleTask& e) {
    err << "error: infeasible instance: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const PositiveCycle& e) {
    err << "error: infeasible instance: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const VerificationFailed& e) {
    err << "error: verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << " (raise --limit)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cumlift
