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

#include "adasub/policy_tree.h"

#include <string>
#include <vector>

#include "adasub/errors.h"

namespace adasub {
namespace {

class Expander {
 public:
  Expander(const Policy& pi, const Instance& instance,
           const EnumerationLimits& limits)
      : pi_(pi),
        instance_(instance),
        limits_(limits),
        oracle_(instance, OracleMode::Exact(), limits) {}

  TreeExpansion Run(const PartialRealization& start) {
    Visit(start, 0, PartialRealization(), 0, 0, 1.0);
    return result_;
  }

 private:
  void Visit(const PartialRealization& world, std::size_t stage_index,
             const PartialRealization& view_observed, int round,
             int dummies_used, double probability) {
    if (++result_.nodes > limits_.max_branches) {
      throw EnumerationCapError("policy tree exceeds the branch cap of " +
                                std::to_string(limits_.max_branches));
    }
    const auto stages = pi_.stages();
    if (stage_index < stages.size() &&
        round >= stages[stage_index]->rounds()) {
      Visit(world, stage_index + 1, PartialRealization(), 0, 0, probability);
      return;
    }
    if (stage_index == stages.size()) {
      result_.expected_value +=
          probability * oracle_.ConditionalValue(world.Domain(), world);
      result_.total_probability += probability;
      return;
    }
    const Stage& stage = *stages[stage_index];
    const StageView view{view_observed, round, dummies_used};
    result_.expected_queries +=
        probability * static_cast<double>(stage.QueryCount(view));
    for (const auto& [decision, p] : stage.DecisionDistribution(view, oracle_)) {
      if (p <= 0.0) continue;
      const double branch = probability * p;
      switch (decision.kind) {
        case Decision::Kind::kNothing:
          Visit(world, stage_index, view_observed, round + 1, dummies_used,
                branch);
          break;
        case Decision::Kind::kDummy:
          Visit(world, stage_index, view_observed, round + 1,
                dummies_used + 1, branch);
          break;
        case Decision::Kind::kSelect: {
          const ItemId e = decision.item;
          if (const auto known = world.StateOf(e); known.has_value()) {
            // Re-selection after a concatenation: the state is already known.
            Visit(world, stage_index, view_observed.With(e, *known), round + 1,
                  dummies_used, branch);
            break;
          }
          const std::vector<double> states =
              instance_.prior.ConditionalStateDistribution(e, world);
          for (StateValue o = 0; o < static_cast<StateValue>(states.size()); ++o) {
            if (states[o] <= 0.0) continue;
            Visit(world.With(e, o), stage_index, view_observed.With(e, o),
                  round + 1, dummies_used, branch * states[o]);
          }
          break;
        }
      }
    }
  }

  const Policy& pi_;
  const Instance& instance_;
  EnumerationLimits limits_;
  ValueOracle oracle_;
  TreeExpansion result_;
};

}  // namespace

TreeExpansion ExpandPolicyTree(const Policy& pi, const Instance& instance,
                               const PartialRealization& start,
                               const EnumerationLimits& limits) {
  instance.prior.CheckPartial(start);
  instance.prior.RequireEnumerable(limits);
  if (instance.prior.ProbabilityOf(start) <= 0.0) {
    throw NullEventError("conditioning on a zero-probability observation");
  }
  return Expander(pi, instance, limits).Run(start);
}

double MarginalPolicy(const Policy& pi, const PartialRealization& psi,
                      ValueOracle& oracle) {
  oracle.ledger().RecordPolicyQuery();
  const TreeExpansion tree =
      ExpandPolicyTree(pi, oracle.instance(), psi, oracle.limits());
  return tree.expected_value - oracle.ConditionalValue(psi.Domain(), psi);
}

}  // namespace adasub
