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

// Adaptive policies and the runner that executes them against a
// realization.
//
// A Policy is a sequence of stages. A plain policy has one stage; Concat
// appends stages, and every stage starts from an empty observation history.
// Each stage exposes two routes to the same decision rule: Decide samples a
// decision and spends oracle queries as the algorithm would, and
// DecisionDistribution returns the exact distribution of that decision,
// which the exact evaluator expands into a policy tree.

#ifndef ADASUB_POLICY_H_
#define ADASUB_POLICY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adasub/core.h"
#include "adasub/oracle.h"
#include "adasub/rng.h"

namespace adasub {

struct Decision {
  enum class Kind { kSelect, kDummy, kNothing };
  Kind kind = Kind::kNothing;
  ItemId item = -1;

  static Decision Select(ItemId e) { return {Kind::kSelect, e}; }
  static Decision Dummy(ItemId d) { return {Kind::kDummy, d}; }
  static Decision Nothing() { return {}; }

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct WeightedDecision {
  Decision decision;
  double probability = 0.0;
};

// Merges duplicate decisions and folds dummy picks into the null action.
// Sorted: selections by item, then the null action.
std::vector<WeightedDecision> NormalizeDistribution(
    std::span<const WeightedDecision> distribution);

// What a stage sees when deciding: its own observations and round counter.
struct StageView {
  const PartialRealization& observed;
  int round = 0;
  int dummies_used = 0;
};

// Feasibility declared by a stage.
struct Constraint {
  // Maximum number of items, or -1 when governed by `matroid`.
  int cardinality = -1;
  std::optional<PartitionMatroid> matroid;
};

class Stage {
 public:
  virtual ~Stage() = default;

  virtual std::string name() const = 0;
  virtual int rounds() const = 0;
  virtual Constraint constraint() const = 0;
  // Number of dummy items the stage adds to the ground set.
  virtual int dummies() const { return 0; }

  // Item queries Decide spends at this view.
  virtual std::int64_t QueryCount(const StageView& view) const = 0;
  virtual Decision Decide(const StageView& view, ValueOracle& oracle,
                          Rng& rng) const = 0;
  virtual std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const = 0;
};

class Policy {
 public:
  // The empty policy: selects nothing.
  Policy() = default;
  explicit Policy(std::shared_ptr<const Stage> stage);

  std::span<const std::shared_ptr<const Stage>> stages() const {
    return stages_;
  }
  bool empty() const { return stages_.empty(); }
  int total_rounds() const;
  std::string name() const;

  // Runs `first` to completion, then `second` from a fresh history.
  friend Policy Concat(const Policy& first, const Policy& second);

 private:
  std::vector<std::shared_ptr<const Stage>> stages_;
};

Policy Concat(const Policy& first, const Policy& second);

// Parameters of the linear-time policy.
struct LtParams {
  double epsilon = 0.0;
  double q = 0.0;
  double s = 0.0;
  int sample_size = 0;

  // q = 8 / (k eps^2) * ln(1 / (2 eps)), sample_size = min(ceil(q n), n),
  // s = k * sample_size / n. Requires eps in (0, 1/2).
  static LtParams Compute(int n, int k, double epsilon);
};

// min(n, ceil((n / k) ln(1 / eps))). Requires eps in (0, 1).
int StochasticSampleSize(int n, int k, double epsilon);

// Greedy on Delta over unselected items, ties to the smaller id. Selects
// nothing when the best marginal is negative.
Policy AdaptiveGreedy(int n, int k);
// Uniform pick among the k best of E plus 2k-1 dummy items.
Policy AdaptiveRandomGreedy(int n, int k);
// Ranked pick from a random sample, rank drawn from (0, s].
Policy LinearTimePolicy(int n, int k, double epsilon);
// Argmax over a random sample of StochasticSampleSize items.
Policy AdaptiveStochasticGreedy(int n, int k, double epsilon);
// Greedy block by block, d_i rounds inside block B_i.
Policy LocallyGreedy(int n, const PartitionMatroid& matroid);
// Stochastic greedy block by block.
Policy GeneralizedStochasticGreedy(int n, const PartitionMatroid& matroid,
                                   double epsilon);

struct Trace {
  // One entry per round across all stages.
  std::vector<Decision> steps;
  // E(pi, phi): distinct real items in the order first selected.
  std::vector<ItemId> selected;
  // States revealed for `selected`.
  PartialRealization observed;
  double final_value = 0.0;
  std::int64_t queries = 0;
};

// Executes pi on phi. Deterministic in (pi, phi, seed). Throws
// ContractViolation when a stage makes an infeasible decision.
Trace RunPolicy(const Policy& pi, const Realization& phi, ValueOracle& oracle,
                std::uint64_t seed);

}  // namespace adasub

#endif  // ADASUB_POLICY_H_
