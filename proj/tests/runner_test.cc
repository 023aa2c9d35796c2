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

#include <gtest/gtest.h>

#include <memory>
#include <vector>

#include "adasub/analysis.h"
#include "adasub/errors.h"
#include "adasub/objectives.h"
#include "adasub/oracle.h"
#include "adasub/policy.h"
#include "adasub/verify.h"

namespace adasub {
namespace {

// Emits a fixed script of decisions, one per round.
class ScriptedStage : public Stage {
 public:
  ScriptedStage(std::vector<Decision> script, Constraint constraint,
                int dummies = 0)
      : script_(std::move(script)),
        constraint_(std::move(constraint)),
        dummies_(dummies) {}

  std::string name() const override { return "scripted"; }
  int rounds() const override { return static_cast<int>(script_.size()); }
  Constraint constraint() const override { return constraint_; }
  int dummies() const override { return dummies_; }
  std::int64_t QueryCount(const StageView&) const override { return 0; }
  Decision Decide(const StageView& view, ValueOracle&, Rng&) const override {
    return script_[view.round];
  }
  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle&) const override {
    return {{script_[view.round], 1.0}};
  }

 private:
  std::vector<Decision> script_;
  Constraint constraint_;
  int dummies_;
};

Policy Scripted(std::vector<Decision> script, Constraint constraint,
                int dummies = 0) {
  return Policy(std::make_shared<ScriptedStage>(std::move(script),
                                                std::move(constraint), dummies));
}

std::vector<Realization> AllBinary(int n) {
  std::vector<Realization> out;
  for (int bits = 0; bits < (1 << n); ++bits) {
    Realization phi{std::vector<StateValue>(n)};
    for (int e = 0; e < n; ++e) phi.set_state(e, (bits >> e) & 1);
    out.push_back(phi);
  }
  return out;
}

void ExpectSameTrace(const Trace& a, const Trace& b) {
  EXPECT_EQ(a.steps, b.steps);
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.final_value, b.final_value);
  EXPECT_EQ(a.queries, b.queries);
}

TEST(RunPolicyTest, EmptyPolicy) {
  const Instance instance = ShippedFixture("coverage-3");
  ValueOracle oracle(instance);
  const Trace trace = RunPolicy(Policy(), Realization{1, 1, 1}, oracle, 0);
  EXPECT_TRUE(trace.selected.empty());
  EXPECT_EQ(trace.final_value, 0.0);
  EXPECT_EQ(trace.queries, 0);
}

TEST(RunPolicyTest, WrongRealizationLength) {
  const Instance instance = ShippedFixture("coverage-3");
  ValueOracle oracle(instance);
  EXPECT_THROW(RunPolicy(AdaptiveGreedy(3, 1), Realization{1, 1}, oracle, 0),
               InvalidInputError);
}

TEST(RunPolicyTest, SameSeedSameTrace) {
  const Instance instance = ShippedFixture("mixed-5");
  for (const Realization& phi : AllBinary(5)) {
    ValueOracle a(instance);
    ValueOracle b(instance);
    ExpectSameTrace(RunPolicy(AdaptiveRandomGreedy(5, 3), phi, a, 42),
                    RunPolicy(AdaptiveRandomGreedy(5, 3), phi, b, 42));
  }
}

TEST(RunPolicyTest, GreedyWithFullBudgetOnMonotone) {
  const Instance instance = ShippedFixture("coverage-3");
  for (const Realization& phi : AllBinary(3)) {
    ValueOracle oracle(instance);
    const Trace trace = RunPolicy(AdaptiveGreedy(3, 3), phi, oracle, 0);
    EXPECT_EQ(trace.selected.size(), 3u);
    EXPECT_EQ(trace.final_value,
              instance.Evaluate(std::vector<ItemId>{0, 1, 2}, phi));
  }
}

TEST(RunPolicyTest, FeasibleOnEveryRealization) {
  const Instance instance = ShippedFixture("mixed-5");
  const PartitionMatroid matroid{{{0, 1}, {2, 3, 4}}, {1, 2}};
  const std::vector<Policy> policies = {
      AdaptiveGreedy(5, 3), AdaptiveRandomGreedy(5, 3),
      LinearTimePolicy(5, 3, 0.3), AdaptiveStochasticGreedy(5, 3, 0.4),
      LocallyGreedy(5, matroid), GeneralizedStochasticGreedy(5, matroid, 0.4)};
  for (const Policy& pi : policies) {
    for (const Realization& phi : AllBinary(5)) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        ValueOracle oracle(instance);
        const Trace trace = RunPolicy(pi, phi, oracle, seed);
        if (pi.stages()[0]->constraint().matroid) {
          int first = 0;
          for (ItemId e : trace.selected) first += e < 2;
          EXPECT_LE(first, 1);
          EXPECT_LE(trace.selected.size() - first, 2u);
        } else {
          EXPECT_LE(trace.selected.size(), 3u);
        }
        EXPECT_EQ(trace.observed.size(), static_cast<int>(trace.selected.size()));
        EXPECT_TRUE(IsConsistent(phi, trace.observed));
      }
    }
  }
}

TEST(RunPolicyTest, DummyAndNothingLeaveStateUnchanged) {
  const Instance instance = ShippedFixture("coverage-3");
  Constraint constraint;
  constraint.cardinality = 2;
  const Policy pi = Scripted({Decision::Dummy(3), Decision::Select(1),
                              Decision::Nothing(), Decision::Dummy(4)},
                             constraint, 2);
  ValueOracle oracle(instance);
  const Trace trace = RunPolicy(pi, Realization{1, 1, 1}, oracle, 0);
  EXPECT_EQ(trace.selected, (std::vector<ItemId>{1}));
  EXPECT_EQ(trace.final_value,
            instance.Evaluate(std::vector<ItemId>{1}, Realization{1, 1, 1}));
}

TEST(RunPolicyTest, ContractViolations) {
  const Instance instance = ShippedFixture("coverage-3");
  const Realization phi{1, 1, 1};
  Constraint one;
  one.cardinality = 1;
  ValueOracle oracle(instance);
  EXPECT_THROW(RunPolicy(Scripted({Decision::Select(0), Decision::Select(1)}, one),
                         phi, oracle, 0),
               ContractViolation);
  EXPECT_THROW(RunPolicy(Scripted({Decision::Select(9)}, one), phi, oracle, 0),
               ContractViolation);
  Constraint two;
  two.cardinality = 2;
  EXPECT_THROW(RunPolicy(Scripted({Decision::Select(0), Decision::Select(0)}, two),
                         phi, oracle, 0),
               ContractViolation);
  EXPECT_THROW(RunPolicy(Scripted({Decision::Dummy(3)}, two), phi, oracle, 0),
               ContractViolation);
  Constraint blocks;
  blocks.matroid = PartitionMatroid{{{0}}, {1}};
  EXPECT_THROW(RunPolicy(Scripted({Decision::Select(2)}, blocks), phi, oracle, 0),
               ContractViolation);
}

TEST(ConcatTest, EmptyIsIdentity) {
  const Instance instance = ShippedFixture("mixed-5");
  const Policy pi = AdaptiveRandomGreedy(5, 2);
  for (const Realization& phi : AllBinary(5)) {
    ValueOracle a(instance);
    ValueOracle b(instance);
    ValueOracle c(instance);
    const Trace base = RunPolicy(pi, phi, a, 8);
    ExpectSameTrace(RunPolicy(Concat(Policy(), pi), phi, b, 8), base);
    ExpectSameTrace(RunPolicy(Concat(pi, Policy()), phi, c, 8), base);
  }
}

TEST(ConcatTest, SecondStageStartsFresh) {
  // Greedy twice with k = 1 picks the same item twice: the second stage
  // does not see the first stage's observation.
  const Instance instance = ShippedFixture("coverage-3");
  ValueOracle oracle(instance);
  const Policy once = AdaptiveGreedy(3, 1);
  const Trace trace = RunPolicy(Concat(once, once), Realization{1, 1, 1}, oracle, 0);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0], trace.steps[1]);
  EXPECT_EQ(trace.selected.size(), 1u);
  EXPECT_EQ(trace.queries, 6);
}

TEST(ConcatTest, NeverLowersValueOnMonotoneInstances) {
  const Instance instance = ShippedFixture("coverage-4-matroid");
  const int n = instance.n();
  const std::vector<Policy> policies = {
      AdaptiveGreedy(n, 2), AdaptiveRandomGreedy(n, 1),
      AdaptiveStochasticGreedy(n, 2, 0.3), LinearTimePolicy(n, 1, 0.4)};
  for (const Policy& first : policies) {
    const double alone = ExactFavg(first, instance).favg;
    for (const Policy& second : policies) {
      EXPECT_GE(ExactFavg(Concat(first, second), instance).favg, alone - 1e-12)
          << first.name() << " then " << second.name();
    }
  }
}

}  // namespace
}  // namespace adasub
