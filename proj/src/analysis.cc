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

#include "adasub/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "adasub/errors.h"
#include "adasub/policy_tree.h"
#include "adasub/rng.h"

namespace adasub {
namespace {

// V(psi, budgets) = max(stop, max over admissible e of
//   sum_o Pr[Phi_e = o | psi] V(psi + (e, o), budgets - 1 at e's budget)),
// with stop = E[f(dom(psi), Phi) | psi]. Memoized on the canonical psi.
class PolicyDp {
 public:
  // item_budget[e] is the budget e draws from, or -1 if e is not selectable.
  PolicyDp(const Instance& instance, std::vector<int> item_budget,
           const EnumerationLimits& limits)
      : instance_(instance),
        item_budget_(std::move(item_budget)),
        limits_(limits),
        oracle_(instance, OracleMode::Exact(), limits) {
    instance.prior.RequireEnumerable(limits);
  }

  double Value(const PartialRealization& psi, std::vector<int> budgets) {
    std::vector<int> key = budgets;
    for (const auto& [e, s] : psi.Canonical()) {
      key.push_back(e);
      key.push_back(s);
    }
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > limits_.max_branches) {
      throw EnumerationCapError("optimal-policy DP exceeds the branch cap of " +
                                std::to_string(limits_.max_branches));
    }
    double best = oracle_.ConditionalValue(psi.Domain(), psi);
    for (ItemId e = 0; e < instance_.n(); ++e) {
      const int b = item_budget_[e];
      if (b < 0 || budgets[b] == 0 || psi.Contains(e)) continue;
      const std::vector<double> states =
          instance_.prior.ConditionalStateDistribution(e, psi);
      budgets[b] -= 1;
      double value = 0.0;
      for (StateValue o = 0; o < static_cast<StateValue>(states.size()); ++o) {
        if (states[o] > 0.0) value += states[o] * Value(psi.With(e, o), budgets);
      }
      budgets[b] += 1;
      best = std::max(best, value);
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  const Instance& instance_;
  std::vector<int> item_budget_;
  EnumerationLimits limits_;
  ValueOracle oracle_;
  std::map<std::vector<int>, double> memo_;
  std::int64_t nodes_ = 0;
};

}  // namespace

EvalReport ExactFavg(const Policy& pi, const Instance& instance,
                     const EnumerationLimits& limits) {
  const TreeExpansion tree = ExpandPolicyTree(pi, instance, {}, limits);
  EvalReport report;
  report.favg = tree.expected_value;
  report.mean_queries = tree.expected_queries;
  report.mode = EvalMode::kExact;
  return report;
}

EvalReport McFavg(const Policy& pi, const Instance& instance,
                  const McOptions& options) {
  if (options.trials < 1) throw InvalidInputError("trials must be >= 1");
  const EnumerationLimits limits = EnumerationLimits::FromEnvironment();
  const std::int64_t trials = options.trials;
  std::vector<double> values(trials);
  std::vector<std::int64_t> queries(trials);

  auto run_trial = [&](std::int64_t t) {
    Rng realization_rng = MakeRng(options.seed, "evaluator/realization", t);
    const Realization phi = instance.prior.Sample(realization_rng);
    OracleMode oracle_mode = options.oracle_mode;
    oracle_mode.seed = DeriveSeed(options.seed ^ oracle_mode.seed, "oracle", t);
    ValueOracle oracle(instance, oracle_mode, limits);
    const Trace trace =
        RunPolicy(pi, phi, oracle, DeriveSeed(options.seed, "policy", t));
    values[t] = trace.final_value;
    queries[t] = trace.queries;
  };

  const int jobs = static_cast<int>(
      std::clamp<std::int64_t>(options.jobs, 1, trials));
  if (jobs == 1) {
    for (std::int64_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::int64_t t = w; t < trials; t += jobs) run_trial(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  // Merge in trial order so the result does not depend on `jobs`.
  double sum = 0.0;
  double query_sum = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    sum += values[t];
    query_sum += static_cast<double>(queries[t]);
  }
  EvalReport report;
  report.mode = EvalMode::kMonteCarlo;
  report.trials = trials;
  report.favg = sum / trials;
  report.mean_queries = query_sum / trials;
  const bool constant = std::all_of(values.begin(), values.end(),
                                    [&](double v) { return v == values[0]; });
  if (constant) {
    report.favg = values[0];
  } else {
    double squares = 0.0;
    for (double v : values) squares += (v - report.favg) * (v - report.favg);
    report.std_error = std::sqrt(squares / (trials - 1) / trials);
  }
  return report;
}

double OptimalPolicyValue(const Instance& instance, int k,
                          const EnumerationLimits& limits) {
  if (k < 0) throw InvalidInputError("k must be non-negative");
  PolicyDp dp(instance, std::vector<int>(instance.n(), 0), limits);
  return dp.Value({}, {std::min(k, instance.n())});
}

double OptimalPolicyValueMatroid(const Instance& instance,
                                 const PartitionMatroid& matroid,
                                 const EnumerationLimits& limits) {
  matroid.Validate(instance.n());
  std::vector<int> item_budget(instance.n(), -1);
  for (int i = 0; i < matroid.num_blocks(); ++i) {
    for (ItemId e : matroid.blocks[i]) item_budget[e] = i;
  }
  PolicyDp dp(instance, std::move(item_budget), limits);
  return dp.Value({}, matroid.limits);
}

double RestrictedPolicyValue(const Instance& instance,
                             std::span<const ItemId> allowed, int budget,
                             const PartialRealization& psi,
                             const EnumerationLimits& limits) {
  if (budget < 0) throw InvalidInputError("budget must be non-negative");
  std::vector<int> item_budget(instance.n(), -1);
  for (ItemId e : allowed) {
    if (!instance.ground.IsReal(e)) {
      throw InvalidInputError("unknown item " + std::to_string(e));
    }
    item_budget[e] = 0;
  }
  PolicyDp dp(instance, std::move(item_budget), limits);
  return dp.Value(psi, {budget});
}

SamplingLemmaResult CheckSamplingLemma(int n, int k, double epsilon,
                                       std::int64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw InvalidInputError("trials must be >= 1");
  SamplingLemmaResult result;
  result.sample_size = StochasticSampleSize(n, k, epsilon);
  result.bound = 1.0 - epsilon;
  result.trials = trials;
  // A* = {0, ..., k-1}; the sampler is exchangeable so the choice is free.
  std::vector<ItemId> universe(n);
  for (int e = 0; e < n; ++e) universe[e] = e;
  Rng rng = MakeRng(seed, "sampling-lemma");
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto sample = SampleWithoutReplacement(universe, result.sample_size, rng);
    if (std::any_of(sample.begin(), sample.end(),
                    [k](ItemId e) { return e < k; })) {
      ++hits;
    }
  }
  result.hit_rate = static_cast<double>(hits) / static_cast<double>(trials);
  return result;
}

}  // namespace adasub
