// Copyright 2026 The Authors.
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

#include "adasub/cli.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adasub/analysis.h"
#include "adasub/errors.h"
#include "adasub/instance_io.h"
#include "adasub/policy.h"
#include "adasub/verify.h"

namespace adasub {
namespace {

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

double ToDouble(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used == value.size()) return x;
  } catch (const std::exception&) {
  }
  throw InvalidInputError(key + ": expected a number, got '" + value + "'");
}

int ToInt(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(value, &used);
    if (used == value.size()) return x;
  } catch (const std::exception&) {
  }
  throw InvalidInputError(key + ": expected an integer, got '" + value + "'");
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& values)
      : values_(values) {}

  double Real(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : ToDouble(key, it->second);
  }
  int Integer(const std::string& key, int fallback) {
    used_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : ToInt(key, it->second);
  }
  std::optional<std::string> Text(const std::string& key) {
    used_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  void RejectUnused() const {
    for (const auto& [key, value] : values_) {
      if (!used_.count(key)) {
        throw InvalidInputError("unknown generator parameter '" + key + "'");
      }
    }
  }

 private:
  const std::map<std::string, std::string>& values_;
  std::set<std::string> used_;
};

// "0-1:1.5;1-2" -> edges; the weight defaults to 1.
std::vector<WeightedEdge> ParseEdges(const std::string& text) {
  std::vector<WeightedEdge> edges;
  for (const std::string& part : Split(text, ';')) {
    if (part.empty()) continue;
    const auto colon = Split(part, ':');
    const auto ends = Split(colon[0], '-');
    if (ends.size() != 2 || colon.size() > 2) {
      throw InvalidInputError("edges: malformed edge '" + part +
                              "', expected u-v or u-v:w");
    }
    WeightedEdge edge;
    edge.u = ToInt("edges", ends[0]);
    edge.v = ToInt("edges", ends[1]);
    edge.weight = colon.size() == 2 ? ToDouble("edges", colon[1]) : 1.0;
    edges.push_back(edge);
  }
  return edges;
}

// blocks "0+1;2+3", limits "1;1".
PartitionMatroid ParseMatroid(const std::string& blocks,
                              const std::string& limits) {
  PartitionMatroid matroid;
  for (const std::string& block : Split(blocks, ';')) {
    std::vector<ItemId> items;
    for (const std::string& item : Split(block, '+')) {
      if (!item.empty()) items.push_back(ToInt("blocks", item));
    }
    matroid.blocks.push_back(std::move(items));
  }
  for (const std::string& limit : Split(limits, ';')) {
    matroid.limits.push_back(ToInt("limits", limit));
  }
  if (matroid.blocks.size() != matroid.limits.size()) {
    throw InvalidInputError("limits: " + std::to_string(matroid.limits.size()) +
                            " limits for " +
                            std::to_string(matroid.blocks.size()) + " blocks");
  }
  return matroid;
}

std::string Fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

bool NeedsEpsilon(const std::string& policy) {
  return policy == "lt" || policy == "asg" || policy == "gasg";
}
bool NeedsMatroid(const std::string& policy) {
  return policy == "local" || policy == "gasg";
}

Policy BuildPolicy(const std::string& policy, const Instance& instance, int k,
                   double epsilon) {
  const int n = instance.n();
  if (policy == "greedy") return AdaptiveGreedy(n, k);
  if (policy == "arg") return AdaptiveRandomGreedy(n, k);
  if (policy == "lt") return LinearTimePolicy(n, k, epsilon);
  if (policy == "asg") return AdaptiveStochasticGreedy(n, k, epsilon);
  if (policy == "local") return LocallyGreedy(n, *instance.matroid);
  return GeneralizedStochasticGreedy(n, *instance.matroid, epsilon);
}

struct RunArgs {
  std::string instance;
  std::vector<std::string> policies;
  std::vector<int> ks;
  std::vector<double> epsilons;
  std::uint64_t seed = 0;
  std::int64_t trials = 1000;
  std::string mode = "exact";
  int jobs = 1;
  std::string out;
};

int CmdRun(const RunArgs& args, std::ostream& out, std::ostream& err) {
  const Instance instance = ResolveInstance(args.instance, args.seed);
  const int n = instance.n();
  for (const std::string& policy : args.policies) {
    if (NeedsEpsilon(policy) && args.epsilons.empty()) {
      throw InvalidInputError("--epsilon is required for policy " + policy);
    }
    if (NeedsMatroid(policy) && !instance.matroid) {
      throw InvalidInputError("--instance: policy " + policy +
                              " needs a matroid in the instance");
    }
    if (!NeedsMatroid(policy) && args.ks.empty()) {
      throw InvalidInputError("--k is required for policy " + policy);
    }
  }
  for (int k : args.ks) {
    if (k < 1 || k > n) {
      throw InvalidInputError("--k: " + std::to_string(k) + " is outside [1, " +
                              std::to_string(n) + "]");
    }
  }
  for (double eps : args.epsilons) {
    if (!(eps > 0.0 && eps < 1.0)) {
      throw InvalidInputError("--epsilon: " + Fmt(eps) + " is outside (0, 1)");
    }
  }
  if (args.trials < 1) throw InvalidInputError("--trials must be >= 1");
  if (args.jobs < 1) throw InvalidInputError("--jobs must be >= 1");

  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw InvalidInputError("--out: cannot open '" + args.out + "'");
    sink = &file;
  }
  *sink << kCsvHeader << "\n";

  const bool exact = args.mode == "exact";
  for (const std::string& policy : args.policies) {
    const std::vector<int> ks =
        NeedsMatroid(policy) ? std::vector<int>{-1} : args.ks;
    const std::vector<double> epsilons =
        NeedsEpsilon(policy) ? args.epsilons : std::vector<double>{-1.0};
    for (int k : ks) {
      for (double eps : epsilons) {
        if (policy == "lt" && eps >= 0.5) {
          throw InvalidInputError("--epsilon: policy lt needs epsilon < 0.5");
        }
        const Policy pi = BuildPolicy(policy, instance, k, eps);
        const auto start = std::chrono::steady_clock::now();
        EvalReport report;
        if (exact) {
          report = ExactFavg(pi, instance);
        } else {
          McOptions options;
          options.trials = args.trials;
          options.seed = args.seed;
          options.jobs = args.jobs;
          report = McFavg(pi, instance, options);
        }
        const double wall_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        *sink << CsvField(instance.name) << "," << policy << ","
              << (k < 0 ? std::to_string(instance.matroid->total_limit())
                        : std::to_string(k))
              << "," << (eps < 0 ? "" : Fmt(eps)) << "," << args.seed << ","
              << report.trials << "," << (exact ? "exact" : "mc") << ","
              << Fmt(report.favg) << "," << Fmt(report.std_error) << ","
              << Fmt(report.mean_queries) << "," << Fmt(wall_ms) << "\n";
      }
    }
  }
  sink->flush();
  (void)err;
  return kExitOk;
}

int CmdVerify(const std::string& suite, const VerifyOptions& options,
              bool verbose, std::ostream& out) {
  const std::vector<CriterionResult> results = RunSuite(suite, options);
  int passed = 0;
  for (const CriterionResult& result : results) {
    PrintResult(result, verbose, out);
    passed += result.passed ? 1 : 0;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? kExitOk
                                                    : kExitVerifyFailed;
}

}  // namespace

Instance GenerateFromSpec(std::string_view kind,
                          const std::map<std::string, std::string>& values,
                          std::uint64_t seed) {
  Params params(values);
  Instance instance;
  if (kind == "coverage") {
    instance = GenerateCoverage(params.Integer("n", 3), params.Integer("m", 4),
                                params.Real("density", 0.5),
                                params.Real("p", 0.5), seed);
  } else if (kind == "cut") {
    const int n = params.Integer("n", 3);
    const double p = params.Real("p", 0.5);
    if (const auto edges = params.Text("edges")) {
      instance = MakeCut(n, ParseEdges(*edges), p);
    } else {
      instance = GenerateCut(n, params.Real("edge_prob", 0.5),
                             params.Real("max_weight", 1.0), p, seed);
    }
  } else if (kind == "mixed") {
    instance = GenerateMixed(params.Integer("n", 3), params.Integer("m", 4),
                             params.Real("density", 0.5), params.Real("p", 0.5),
                             params.Real("edge_prob", 0.5),
                             params.Real("max_weight", 1.0), seed);
  } else {
    throw InvalidInputError("unknown generator kind '" + std::string(kind) +
                            "' (expected coverage, cut or mixed)");
  }
  const auto blocks = params.Text("blocks");
  const auto limits = params.Text("limits");
  if (blocks.has_value() != limits.has_value()) {
    throw InvalidInputError(blocks ? "limits: required with blocks"
                                   : "blocks: required with limits");
  }
  if (blocks) {
    PartitionMatroid matroid = ParseMatroid(*blocks, *limits);
    matroid.Validate(instance.n());
    instance.matroid = std::move(matroid);
  }
  if (const auto name = params.Text("name")) instance.name = *name;
  params.RejectUnused();
  instance.Validate();
  return instance;
}

Instance ResolveInstance(const std::string& source, std::uint64_t seed) {
  if (source.rfind("fixture:", 0) == 0) {
    try {
      return ShippedFixture(source.substr(8));
    } catch (const InvalidInputError& e) {
      throw InvalidInputError(std::string("--instance: ") + e.what());
    }
  }
  if (source.rfind("gen:", 0) == 0) {
    const std::vector<std::string> parts = Split(source.substr(4), ',');
    std::map<std::string, std::string> params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string::npos) {
        throw InvalidInputError("--instance: expected key=value, got '" +
                                parts[i] + "'");
      }
      params[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
    }
    try {
      return GenerateFromSpec(parts[0], params, seed);
    } catch (const InvalidInputError& e) {
      throw InvalidInputError(std::string("--instance: ") + e.what());
    }
  }
  return LoadInstance(source);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Adaptive submodular maximization toolkit", "adasub"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Evaluate policies on an instance");
  run->add_option("--instance", run_args.instance,
                  "Instance file, fixture:<name> or gen:<kind>,key=value...")
      ->required();
  run->add_option("--policy", run_args.policies,
                  "greedy, arg, lt, asg, local, gasg (comma separated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"greedy", "arg", "lt", "asg", "local", "gasg"}));
  run->add_option("--k", run_args.ks, "Cardinality limit(s)")->delimiter(',');
  run->add_option("--epsilon", run_args.epsilons, "Epsilon value(s)")
      ->delimiter(',');
  run->add_option("--seed", run_args.seed, "Global seed");
  run->add_option("--trials", run_args.trials, "Monte-Carlo trials");
  run->add_option("--mode", run_args.mode, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  run->add_option("--jobs", run_args.jobs, "Worker threads for mc");
  run->add_option("--out", run_args.out, "CSV output path (default stdout)");

  std::string suite = "all";
  VerifyOptions verify_options;
  bool verbose = false;
  CLI::App* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("suite", suite, "ratios, properties, queries, sampling, "
                                     "reductions, crossval or all")
      ->check(CLI::IsMember(SuiteNames()));
  verify->add_option("--seed", verify_options.seed, "Global seed");
  verify->add_option("--jobs", verify_options.jobs, "Worker threads");
  verify->add_flag("--verbose", verbose, "Print every individual check");

  std::string kind;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  std::map<std::string, std::string> gen_params;
  CLI::App* generate = app.add_subcommand("generate", "Write an instance file");
  generate->add_option("kind", kind, "coverage, cut or mixed")
      ->required()
      ->check(CLI::IsMember({"coverage", "cut", "mixed"}));
  generate->add_option("--seed", gen_seed, "Global seed");
  generate->add_option("--out", gen_out, "Output path (default stdout)");
  const std::vector<std::pair<std::string, std::string>> gen_flags = {
      {"n", "Number of items"},
      {"m", "Number of coverage targets"},
      {"density", "Coverage density in (0, 1]"},
      {"p", "Probability of state 1"},
      {"edge-prob", "Random cut edge probability"},
      {"max-weight", "Random cut maximum edge weight"},
      {"edges", "Explicit cut edges, e.g. 0-1:1.5;1-2"},
      {"blocks", "Matroid blocks, e.g. 0+1;2+3"},
      {"limits", "Matroid limits, e.g. 1;1"},
      {"name", "Instance name"}};
  std::map<std::string, std::string> gen_raw;
  for (const auto& [flag, help] : gen_flags) {
    generate->add_option("--" + flag, gen_raw[flag], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  try {
    if (run->parsed()) return CmdRun(run_args, out, err);
    if (verify->parsed()) {
      return CmdVerify(suite, verify_options, verbose, out);
    }
    for (const auto& [flag, help] : gen_flags) {
      if (generate->count("--" + flag) > 0) {
        std::string key = flag;
        for (char& c : key) c = c == '-' ? '_' : c;
        gen_params[key] = gen_raw[flag];
      }
    }
    Instance instance;
    try {
      instance = GenerateFromSpec(kind, gen_params, gen_seed);
    } catch (const InvalidInputError& e) {
      // Report the flag spelling rather than the internal key.
      std::string message = e.what();
      for (const auto& [flag, help] : gen_flags) {
        std::string key = flag;
        for (char& c : key) c = c == '-' ? '_' : c;
        if (message.rfind(key + ":", 0) == 0) {
          message = "--" + flag + message.substr(key.size());
          break;
        }
      }
      throw InvalidInputError(message);
    }
    if (gen_out.empty()) {
      out << SerializeInstance(instance) << "\n";
    } else {
      try {
        SaveInstance(instance, gen_out);
      } catch (const Error& e) {
        throw InvalidInputError(std::string("--out: ") + e.what());
      }
    }
    return kExitOk;
  } catch (const EnumerationCapError& e) {
    err << "error: " << e.what()
        << "\nhint: use --mode mc, or raise ADASUB_ENUM_CAP\n";
    return kExitEnumerationCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
}

}  // namespace adasub
