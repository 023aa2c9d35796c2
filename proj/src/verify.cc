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

#include "adasub/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "adasub/analysis.h"
#include "adasub/errors.h"
#include "adasub/policy.h"
#include "adasub/policy_tree.h"
#include "adasub/rng.h"

namespace adasub {
namespace {

constexpr double kRatioSlack = 1e-9;
constexpr double kDistributionTolerance = 1e-9;
const double kInvE = std::exp(-1.0);

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string Num(std::int64_t x) { return std::to_string(x); }

// Accumulates pass/fail lines; keeps failures ahead of passes.
class Collector {
 public:
  Collector(int id, std::string name) {
    result_.id = id;
    result_.name = std::move(name);
  }

  void Check(bool ok, const std::string& line) {
    ++checks_;
    if (ok) {
      passes_.push_back("ok   " + line);
    } else {
      ++failures_;
      result_.details.push_back("FAIL " + line);
    }
  }

  int checks() const { return checks_; }
  int failures() const { return failures_; }

  CriterionResult Finish(std::string measured, std::string required) {
    result_.passed = failures_ == 0 && checks_ > 0;
    result_.measured = std::move(measured);
    result_.required = std::move(required);
    result_.details.insert(result_.details.end(), passes_.begin(), passes_.end());
    return std::move(result_);
  }

 private:
  CriterionResult result_;
  std::vector<std::string> passes_;
  int checks_ = 0;
  int failures_ = 0;
};

// Tracks the worst f_avg / OPT over a sweep.
class RatioTracker {
 public:
  explicit RatioTracker(Collector& collector) : collector_(collector) {}

  void Check(const std::string& label, double value, double opt,
             double factor) {
    const bool ok = value >= factor * opt - kRatioSlack;
    if (opt > 0.0) worst_ = std::min(worst_, value / opt);
    collector_.Check(ok, label + ": f_avg=" + Num(value) + " OPT=" + Num(opt) +
                             " bound=" + Num(factor * opt));
  }

  std::string Measured() const {
    return "min f_avg/OPT = " +
           (worst_ == std::numeric_limits<double>::infinity() ? "n/a"
                                                              : Num(worst_)) +
           " over " + Num(static_cast<std::int64_t>(collector_.checks())) +
           " checks";
  }

 private:
  Collector& collector_;
  double worst_ = std::numeric_limits<double>::infinity();
};

struct SweepCase {
  Instance instance;
  int k = 0;
};

std::vector<SweepCase> NonMonotoneSweep(std::uint64_t seed) {
  std::vector<SweepCase> cases;
  for (int i = 0; i < 24; ++i) {
    const int n = 4 + i % 3;
    const int k = 2 + (i / 3) % 2;
    const std::uint64_t s = DeriveSeed(seed, "verify/non-monotone", i);
    Instance instance = (i / 6) % 2 == 0
                            ? GenerateCut(n, 0.6, 1.0, 0.5, s)
                            : GenerateMixed(n, 4, 0.4, 0.7, 0.6, 1.0, s);
    instance.name += "#" + std::to_string(i);
    cases.push_back({std::move(instance), k});
  }
  return cases;
}

std::vector<SweepCase> CoverageSweep(std::uint64_t seed) {
  std::vector<SweepCase> cases;
  for (int i = 0; i < 24; ++i) {
    const int n = 4 + i % 3;
    const int k = 2 + (i / 3) % 2;
    Instance instance = GenerateCoverage(
        n, 5, 0.45, 0.7, DeriveSeed(seed, "verify/coverage", i));
    instance.name += "#" + std::to_string(i);
    cases.push_back({std::move(instance), k});
  }
  return cases;
}

// Contiguous blocks with the given limits, each clipped to its block size.
PartitionMatroid ContiguousBlocks(int n, std::vector<int> limits) {
  PartitionMatroid matroid;
  const int b = static_cast<int>(limits.size());
  ItemId next = 0;
  for (int i = 0; i < b; ++i) {
    const int size = n / b + (i < n % b ? 1 : 0);
    std::vector<ItemId> block;
    for (int j = 0; j < size; ++j) block.push_back(next++);
    limits[i] = std::min(limits[i], size);
    matroid.blocks.push_back(std::move(block));
  }
  matroid.limits = std::move(limits);
  return matroid;
}

double ExactValue(const Policy& pi, const Instance& instance) {
  return ExactFavg(pi, instance).favg;
}

// Closed forms, written out independently of the policy implementations.
std::int64_t GreedyQueries(int n, int k) {
  std::int64_t total = 0;
  for (int r = 0; r < k; ++r) total += n - r;
  return total;
}

std::int64_t SampleSize(int universe, int rounds, double epsilon) {
  const double size =
      std::ceil(static_cast<double>(universe) / rounds * std::log(1.0 / epsilon));
  return static_cast<std::int64_t>(std::min<double>(universe, size));
}

std::int64_t LinearTimeQueries(int n, int k, double epsilon) {
  const double q =
      8.0 / (k * epsilon * epsilon) * std::log(1.0 / (2.0 * epsilon));
  const double m = std::min<double>(std::ceil(q * n), n);
  return static_cast<std::int64_t>(k * m);
}

// arg queries every unselected real item each round.
std::int64_t RandomGreedyQueries(int n, const Trace& trace) {
  std::int64_t total = 0;
  std::vector<bool> chosen(n, false);
  int count = 0;
  for (const Decision& d : trace.steps) {
    total += n - count;
    if (d.kind == Decision::Kind::kSelect && !chosen[d.item]) {
      chosen[d.item] = true;
      ++count;
    }
  }
  return total;
}

bool SameTrace(const Trace& a, const Trace& b) {
  return a.steps == b.steps && a.selected == b.selected &&
         a.final_value == b.final_value;
}

bool SameDistribution(const std::vector<WeightedDecision>& a,
                      const std::vector<WeightedDecision>& b, double& gap) {
  gap = 0.0;
  if (a.size() != b.size()) {
    gap = 1.0;
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].decision == b[i].decision)) {
      gap = 1.0;
      return false;
    }
    gap = std::max(gap, std::abs(a[i].probability - b[i].probability));
  }
  return gap <= kDistributionTolerance;
}

Instance MakeCoverage(std::string name, int n_targets,
                      std::vector<std::vector<std::vector<int>>> covers,
                      Prior prior) {
  Instance instance;
  instance.name = std::move(name);
  instance.ground = GroundSet::Uniform(static_cast<int>(covers.size()), 2);
  instance.prior = std::move(prior);
  instance.objective =
      std::make_shared<CoverageObjective>(n_targets, std::move(covers));
  for (int e = 0; e < instance.n(); ++e) {
    instance.state_labels.push_back({"failure", "normal"});
  }
  return instance;
}

}  // namespace

std::vector<Fixture> ShippedFixtures() {
  std::vector<Fixture> fixtures;
  fixtures.push_back({"one-sensor", OneSensorToy(0.5)});

  fixtures.push_back(
      {"coverage-3",
       MakeCoverage("coverage-3", 4,
                    {{{}, {0, 1}}, {{1}, {1, 2}}, {{}, {2, 3}}},
                    Prior::Independent({{0.3, 0.7}, {0.4, 0.6}, {0.2, 0.8}}))});

  Instance matroid_instance = MakeCoverage(
      "coverage-4-matroid", 5,
      {{{}, {0, 1}}, {{}, {1, 2, 3}}, {{0}, {3, 4}}, {{}, {0, 4}}},
      Prior::Independent({{0.5, 0.5}, {0.4, 0.6}, {0.3, 0.7}, {0.25, 0.75}}));
  matroid_instance.matroid = PartitionMatroid{{{0, 1}, {2, 3}}, {1, 1}};
  fixtures.push_back({"coverage-4-matroid", std::move(matroid_instance)});

  fixtures.push_back(
      {"coverage-joint",
       MakeCoverage("coverage-joint", 4, {{{}, {0, 1}}, {{}, {1, 2}}, {{}, {2, 3}}},
                    Prior::Joint({2, 2, 2}, {{Realization{1, 1, 1}, 0.5},
                                             {Realization{0, 0, 1}, 0.2},
                                             {Realization{1, 0, 0}, 0.2},
                                             {Realization{0, 0, 0}, 0.1}}))});

  fixtures.push_back({"triangle-cut", TriangleCut(0.5)});

  Instance mixed = GenerateMixed(5, 4, 0.5, 0.7, 0.6, 1.0, 20261016);
  mixed.name = "mixed-5";
  fixtures.push_back({"mixed-5", std::move(mixed)});

  Instance squared = SquaredCardinality(3, 0.5);
  squared.name = "squared-3";
  fixtures.push_back({"squared-3", std::move(squared)});
  return fixtures;
}

Instance ShippedFixture(std::string_view name) {
  for (auto& fixture : ShippedFixtures()) {
    if (fixture.name == name) return std::move(fixture.instance);
  }
  throw InvalidInputError("unknown fixture '" + std::string(name) + "'");
}

CriterionResult VerifyNonMonotoneRatio(const VerifyOptions& options) {
  Collector collector(1, "non-monotone ratio (arg >= OPT/e)");
  RatioTracker tracker(collector);
  for (const SweepCase& c : NonMonotoneSweep(options.seed)) {
    const double opt = OptimalPolicyValue(c.instance, c.k);
    const double value = ExactValue(AdaptiveRandomGreedy(c.instance.n(), c.k),
                                    c.instance);
    tracker.Check(c.instance.name + " k=" + std::to_string(c.k), value, opt,
                  kInvE);
  }
  return collector.Finish(tracker.Measured(), ">= " + Num(kInvE));
}

CriterionResult VerifyLinearTimeRatio(const VerifyOptions& options) {
  Collector collector(2, "linear-time ratio (lt, eps=0.1, >= (1/e-0.1) OPT)");
  RatioTracker tracker(collector);
  const double factor = kInvE - 0.1;
  for (const SweepCase& c : NonMonotoneSweep(options.seed)) {
    const double opt = OptimalPolicyValue(c.instance, c.k);
    const double value =
        ExactValue(LinearTimePolicy(c.instance.n(), c.k, 0.1), c.instance);
    tracker.Check(c.instance.name + " k=" + std::to_string(c.k), value, opt,
                  factor);
  }
  return collector.Finish(tracker.Measured(), ">= " + Num(factor));
}

CriterionResult VerifyMonotoneRatios(const VerifyOptions& options) {
  Collector collector(3, "monotone ratios (greedy, arg, lt, asg)");
  RatioTracker tracker(collector);
  const double tight = 1.0 - kInvE;
  const double loose = 1.0 - kInvE - 0.1;
  for (const SweepCase& c : CoverageSweep(options.seed)) {
    const int n = c.instance.n();
    const double opt = OptimalPolicyValue(c.instance, c.k);
    const std::string label = c.instance.name + " k=" + std::to_string(c.k);
    tracker.Check(label + " greedy",
                  ExactValue(AdaptiveGreedy(n, c.k), c.instance), opt, tight);
    tracker.Check(label + " arg",
                  ExactValue(AdaptiveRandomGreedy(n, c.k), c.instance), opt,
                  tight);
    tracker.Check(label + " lt",
                  ExactValue(LinearTimePolicy(n, c.k, 0.1), c.instance), opt,
                  loose);
    tracker.Check(label + " asg",
                  ExactValue(AdaptiveStochasticGreedy(n, c.k, 0.1), c.instance),
                  opt, loose);
  }
  return collector.Finish(tracker.Measured(),
                          "greedy/arg >= " + Num(tight) + ", lt/asg >= " +
                              Num(loose));
}

CriterionResult VerifyMatroidRatios(const VerifyOptions& options) {
  Collector collector(4, "matroid ratios (local >= OPT/2, gasg eps=0.1)");
  RatioTracker tracker(collector);
  const double gasg_factor =
      (1.0 - kInvE - 0.1) / (4.0 - 2.0 * kInvE - 0.2);
  const std::vector<std::vector<int>> limit_patterns = {
      {2, 2}, {1, 1, 2}, {1, 2}, {1, 1, 1}};
  for (int i = 0; i < 12; ++i) {
    const int n = 4 + i % 3;
    Instance instance = GenerateCoverage(
        n, 5, 0.45, 0.7, DeriveSeed(options.seed, "verify/matroid", i));
    instance.name += "#" + std::to_string(i);
    const PartitionMatroid matroid =
        ContiguousBlocks(n, limit_patterns[i % limit_patterns.size()]);
    const double opt = OptimalPolicyValueMatroid(instance, matroid);
    tracker.Check(instance.name + " local",
                  ExactValue(LocallyGreedy(n, matroid), instance), opt, 0.5);
    tracker.Check(
        instance.name + " gasg",
        ExactValue(GeneralizedStochasticGreedy(n, matroid, 0.1), instance), opt,
        gasg_factor);
  }
  return collector.Finish(tracker.Measured(),
                          "local >= 0.5, gasg >= " + Num(gasg_factor));
}

CriterionResult VerifyQueryAccounting(const VerifyOptions& options) {
  Collector collector(5, "query accounting (ledger == closed form)");
  int config = 0;
  for (int n : {10, 100}) {
    for (int k : {1, 2, 5}) {
      for (double epsilon : {0.05, 0.1, 0.45}) {
        const Instance instance = GenerateCoverage(
            n, 30, 0.2, 0.8, DeriveSeed(options.seed, "verify/queries", config));
        Rng rng = MakeRng(options.seed, "verify/queries-phi", config);
        const Realization phi = instance.prior.Sample(rng);
        const std::uint64_t run_seed =
            DeriveSeed(options.seed, "verify/queries-run", config);
        ++config;
        const PartitionMatroid matroid = ContiguousBlocks(n, {k, k});

        auto check = [&](const std::string& name, const Policy& pi,
                         const std::function<std::int64_t(const Trace&)>& expected) {
          ValueOracle oracle(instance);
          const Trace trace = RunPolicy(pi, phi, oracle, run_seed);
          const std::int64_t want = expected(trace);
          collector.Check(trace.queries == want &&
                              oracle.ledger().item_queries() == want,
                          name + " n=" + std::to_string(n) +
                              " k=" + std::to_string(k) + " eps=" +
                              Num(epsilon) + ": ledger=" +
                              Num(oracle.ledger().item_queries()) +
                              " expected=" + Num(want));
        };

        check("greedy", AdaptiveGreedy(n, k),
              [&](const Trace&) { return GreedyQueries(n, k); });
        check("arg", AdaptiveRandomGreedy(n, k),
              [&](const Trace& t) { return RandomGreedyQueries(n, t); });
        check("lt", LinearTimePolicy(n, k, epsilon),
              [&](const Trace&) { return LinearTimeQueries(n, k, epsilon); });
        check("asg", AdaptiveStochasticGreedy(n, k, epsilon),
              [&](const Trace&) { return k * SampleSize(n, k, epsilon); });
        check("local", LocallyGreedy(n, matroid), [&](const Trace&) {
          std::int64_t total = 0;
          for (int i = 0; i < matroid.num_blocks(); ++i) {
            total += GreedyQueries(matroid.blocks[i].size(), matroid.limits[i]);
          }
          return total;
        });
        check("gasg", GeneralizedStochasticGreedy(n, matroid, epsilon),
              [&](const Trace&) {
                std::int64_t total = 0;
                for (int i = 0; i < matroid.num_blocks(); ++i) {
                  const int d = matroid.limits[i];
                  if (d == 0) continue;
                  total += d * SampleSize(matroid.blocks[i].size(), d, epsilon);
                }
                return total;
              });
      }
    }
  }
  return collector.Finish(
      Num(static_cast<std::int64_t>(collector.checks() - collector.failures())) +
          "/" + Num(static_cast<std::int64_t>(collector.checks())) +
          " exact matches",
      "all exact");
}

CriterionResult VerifySamplingLemma(const VerifyOptions& options) {
  Collector collector(6, "sampling lemma (n=100, k=10, eps=0.1)");
  constexpr std::int64_t kTrials = 100000;
  const SamplingLemmaResult r =
      CheckSamplingLemma(100, 10, 0.1, kTrials, options.seed);
  const double sigma = std::sqrt(r.hit_rate * (1.0 - r.hit_rate) / kTrials);
  const double threshold = r.bound - 4.0 * sigma;
  collector.Check(r.sample_size == 24,
                  "|R| = " + Num(static_cast<std::int64_t>(r.sample_size)));
  collector.Check(r.hit_rate >= threshold,
                  "hit rate " + Num(r.hit_rate) + " vs " + Num(threshold));
  return collector.Finish("rate = " + Num(r.hit_rate) + ", |R| = " +
                              Num(static_cast<std::int64_t>(r.sample_size)),
                          ">= " + Num(threshold) + " (0.9 - 4 sigma)");
}

CriterionResult VerifyPropertyCheckers(const VerifyOptions&) {
  Collector collector(7, "property checkers");
  auto expect = [&](const std::string& label,
                    const std::vector<ViolationReport>& violations,
                    bool want_violation) {
    const bool violated = !violations.empty();
    std::string line = label + (violated ? ": violated" : ": holds");
    if (violated) line += " (" + violations.front().Describe() + ")";
    collector.Check(violated == want_violation, line);
  };
  for (const char* name : {"coverage-3", "coverage-4-matroid"}) {
    const Instance instance = ShippedFixture(name);
    expect(std::string(name) + " adaptive submodularity",
           CheckAdaptiveSubmodularity(instance), false);
    expect(std::string(name) + " adaptive monotonicity",
           CheckAdaptiveMonotonicity(instance), false);
    expect(std::string(name) + " pointwise submodularity",
           CheckPointwiseSubmodularity(instance), false);
    expect(std::string(name) + " fully adaptive submodularity (a<=2)",
           CheckFullyAdaptiveSubmodularity(instance, 2), false);
  }
  const Instance cut = ShippedFixture("triangle-cut");
  expect("triangle-cut adaptive submodularity", CheckAdaptiveSubmodularity(cut),
         false);
  expect("triangle-cut pointwise submodularity",
         CheckPointwiseSubmodularity(cut), false);
  expect("triangle-cut adaptive monotonicity", CheckAdaptiveMonotonicity(cut),
         true);
  const Instance squared = ShippedFixture("squared-3");
  expect("squared-3 adaptive submodularity", CheckAdaptiveSubmodularity(squared),
         true);
  expect("squared-3 pointwise submodularity",
         CheckPointwiseSubmodularity(squared), true);
  expect("squared-3 fully adaptive submodularity (a<=2)",
         CheckFullyAdaptiveSubmodularity(squared, 2), true);
  return collector.Finish(
      Num(static_cast<std::int64_t>(collector.checks() - collector.failures())) +
          "/" + Num(static_cast<std::int64_t>(collector.checks())) +
          " verdicts as expected",
      "all as expected");
}

CriterionResult VerifyReductions(const VerifyOptions& options) {
  Collector collector(8, "reduction equivalences");
  const EnumerationLimits limits = EnumerationLimits::FromEnvironment();

  // lt vs arg: exact per-round distributions at every reachable history.
  {
    const Instance instance = ShippedFixture("mixed-5");
    const int n = instance.n();
    const int k = 2;
    const double epsilon = 0.1;
    const LtParams params = LtParams::Compute(n, k, epsilon);
    collector.Check(params.sample_size >= n,
                    "lt sample covers E: m=" +
                        Num(static_cast<std::int64_t>(params.sample_size)));
    const Policy lt = LinearTimePolicy(n, k, epsilon);
    const Policy arg = AdaptiveRandomGreedy(n, k);
    ValueOracle oracle(instance, OracleMode::Exact(), limits);
    double worst = 0.0;
    int compared = 0;
    bool all_same = true;
    for (const PartialRealization& psi :
         EnumeratePartialRealizations(instance, limits)) {
      if (psi.size() >= k) continue;
      for (int dummies = 0; dummies <= psi.size(); ++dummies) {
        const StageView view{psi, psi.size() + dummies, dummies};
        if (view.round >= k) continue;
        double gap = 0.0;
        const bool same = SameDistribution(
            NormalizeDistribution(lt.stages()[0]->DecisionDistribution(view, oracle)),
            NormalizeDistribution(arg.stages()[0]->DecisionDistribution(view, oracle)),
            gap);
        all_same = all_same && same;
        worst = std::max(worst, gap);
        ++compared;
      }
    }
    collector.Check(all_same && compared > 0,
                    "lt vs arg on mixed-5, k=2, eps=0.1: " +
                        Num(static_cast<std::int64_t>(compared)) +
                        " histories, max gap " + Num(worst));
  }

  // asg with a full sample vs greedy, and gasg vs local.
  auto compare_traces = [&](const std::string& label, const Instance& instance,
                            const Policy& a, const Policy& b) {
    int runs = 0;
    int mismatches = 0;
    for (const auto& [phi, p] :
         ConditionalRealizations(instance.prior, {}).Enumerate(limits)) {
      if (p <= 0.0) continue;
      for (int rep = 0; rep < 3; ++rep) {
        const std::uint64_t seed =
            DeriveSeed(options.seed, "verify/reduction", runs);
        ValueOracle oa(instance);
        ValueOracle ob(instance);
        if (!SameTrace(RunPolicy(a, phi, oa, seed), RunPolicy(b, phi, ob, seed))) {
          ++mismatches;
        }
        ++runs;
      }
    }
    collector.Check(mismatches == 0 && runs > 0,
                    label + ": " + Num(static_cast<std::int64_t>(mismatches)) +
                        " mismatches over " +
                        Num(static_cast<std::int64_t>(runs)) + " runs");
  };
  const Instance coverage = GenerateCoverage(
      5, 5, 0.5, 0.7, DeriveSeed(options.seed, "verify/reduction-instance", 0));
  collector.Check(SampleSize(5, 2, 0.01) >= 5, "asg sample covers E");
  compare_traces("asg(eps=0.01) vs greedy, n=5, k=2", coverage,
                 AdaptiveStochasticGreedy(5, 2, 0.01), AdaptiveGreedy(5, 2));
  const PartitionMatroid matroid{{{0, 1, 2}, {3, 4}}, {2, 1}};
  compare_traces("gasg(eps=0.01) vs local, blocks {0,1,2}|{3,4}", coverage,
                 GeneralizedStochasticGreedy(5, matroid, 0.01),
                 LocallyGreedy(5, matroid));
  return collector.Finish(
      Num(static_cast<std::int64_t>(collector.checks() - collector.failures())) +
          "/" + Num(static_cast<std::int64_t>(collector.checks())) +
          " equivalences hold",
      "distributions within 1e-9, traces identical");
}

CriterionResult VerifyCrossValidation(const VerifyOptions& options) {
  Collector collector(9, "evaluator cross-validation (mc vs exact)");
  constexpr std::int64_t kTrials = 10000;
  double worst_z = 0.0;
  int index = 0;
  for (const Fixture& fixture : ShippedFixtures()) {
    const Instance& instance = fixture.instance;
    const int n = instance.n();
    const int k = std::min(2, n);
    std::vector<Policy> policies = {
        AdaptiveGreedy(n, k), AdaptiveRandomGreedy(n, k),
        LinearTimePolicy(n, k, 0.1), AdaptiveStochasticGreedy(n, k, 0.1)};
    if (instance.matroid) {
      policies.push_back(LocallyGreedy(n, *instance.matroid));
      policies.push_back(GeneralizedStochasticGreedy(n, *instance.matroid, 0.1));
    }
    for (const Policy& pi : policies) {
      const EvalReport exact = ExactFavg(pi, instance);
      McOptions mc;
      mc.trials = kTrials;
      mc.seed = DeriveSeed(options.seed, "verify/crossval", index++);
      mc.jobs = options.jobs;
      const EvalReport sampled = McFavg(pi, instance, mc);
      const double diff = std::abs(sampled.favg - exact.favg);
      bool ok;
      if (sampled.std_error == 0.0) {
        ok = diff <= 1e-9;
      } else {
        ok = diff <= 4.0 * sampled.std_error;
        worst_z = std::max(worst_z, diff / sampled.std_error);
      }
      collector.Check(ok, fixture.name + " " + pi.name() + ": exact=" +
                              Num(exact.favg) + " mc=" + Num(sampled.favg) +
                              " se=" + Num(sampled.std_error));
    }
  }
  return collector.Finish("max |mc - exact| / se = " + Num(worst_z),
                          "<= 4 (or |diff| <= 1e-9 when se = 0)");
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "ratios", "properties", "queries", "sampling",
      "reductions", "crossval", "all"};
  return names;
}

std::vector<CriterionResult> RunSuite(std::string_view suite,
                                      const VerifyOptions& options) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  std::vector<Fn> fns;
  if (suite == "ratios") {
    fns = {VerifyNonMonotoneRatio, VerifyLinearTimeRatio, VerifyMonotoneRatios,
           VerifyMatroidRatios};
  } else if (suite == "properties") {
    fns = {VerifyPropertyCheckers};
  } else if (suite == "queries") {
    fns = {VerifyQueryAccounting};
  } else if (suite == "sampling") {
    fns = {VerifySamplingLemma};
  } else if (suite == "reductions") {
    fns = {VerifyReductions};
  } else if (suite == "crossval") {
    fns = {VerifyCrossValidation};
  } else if (suite == "all") {
    fns = {VerifyNonMonotoneRatio, VerifyLinearTimeRatio,
           VerifyMonotoneRatios,   VerifyMatroidRatios,
           VerifyQueryAccounting,  VerifySamplingLemma,
           VerifyPropertyCheckers, VerifyReductions,
           VerifyCrossValidation};
  } else {
    throw InvalidInputError("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CriterionResult> results;
  for (Fn fn : fns) results.push_back(fn(options));
  return results;
}

std::string FormatResult(const CriterionResult& result) {
  return std::string(result.passed ? "PASS" : "FAIL") + " [" +
         std::to_string(result.id) + "] " + result.name + ": measured " +
         result.measured + "; required " + result.required;
}

void PrintResult(const CriterionResult& result, bool verbose,
                 std::ostream& out) {
  out << FormatResult(result) << "\n";
  for (const std::string& line : result.details) {
    if (verbose || line.rfind("FAIL", 0) == 0) out << "    " << line << "\n";
  }
}

}  // namespace adasub
