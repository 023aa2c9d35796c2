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

#include <string>
#include <vector>

#include "adasub/errors.h"
#include "adasub/policy.h"

namespace adasub {
namespace {

// Tracks one stage's selections against its declared constraint.
class FeasibilityGuard {
 public:
  FeasibilityGuard(const Stage& stage, int n_real)
      : stage_(stage), constraint_(stage.constraint()), n_real_(n_real) {
    if (constraint_.matroid.has_value()) {
      per_block_.assign(constraint_.matroid->num_blocks(), 0);
    }
  }

  void Check(const Decision& d, const PartialRealization& view_observed,
             std::vector<char>& dummy_used) {
    switch (d.kind) {
      case Decision::Kind::kNothing:
        return;
      case Decision::Kind::kDummy: {
        const int index = d.item - n_real_;
        if (index < 0 || index >= stage_.dummies() || dummy_used[index]) {
          Fail("invalid dummy item " + std::to_string(d.item));
        }
        dummy_used[index] = 1;
        return;
      }
      case Decision::Kind::kSelect:
        break;
    }
    if (d.item < 0 || d.item >= n_real_) {
      Fail("selected unknown item " + std::to_string(d.item));
    }
    if (view_observed.Contains(d.item)) {
      Fail("re-selected item " + std::to_string(d.item));
    }
    if (constraint_.matroid.has_value()) {
      const auto block = constraint_.matroid->BlockOf(d.item);
      if (!block.has_value() ||
          ++per_block_[*block] > constraint_.matroid->limits[*block]) {
        Fail("matroid limit exceeded by item " + std::to_string(d.item));
      }
    } else if (++selected_ > constraint_.cardinality) {
      Fail("cardinality limit " + std::to_string(constraint_.cardinality) +
           " exceeded");
    }
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ContractViolation("policy '" + stage_.name() + "': " + what);
  }

  const Stage& stage_;
  Constraint constraint_;
  int n_real_;
  int selected_ = 0;
  std::vector<int> per_block_;
};

}  // namespace

Trace RunPolicy(const Policy& pi, const Realization& phi, ValueOracle& oracle,
                std::uint64_t seed) {
  const Instance& instance = oracle.instance();
  const int n = instance.n();
  if (phi.size() != n) {
    throw InvalidInputError("realization covers " + std::to_string(phi.size()) +
                            " items, instance has " + std::to_string(n));
  }
  const std::int64_t queries_before = oracle.ledger().item_queries();
  Trace trace;
  int global_round = 0;
  for (const auto& stage : pi.stages()) {
    FeasibilityGuard guard(*stage, n);
    std::vector<char> dummy_used(stage->dummies(), 0);
    PartialRealization view_observed;
    int dummies_used = 0;
    for (int round = 0; round < stage->rounds(); ++round, ++global_round) {
      const StageView view{view_observed, round, dummies_used};
      Rng rng = MakeRng(seed, "policy-round", global_round);
      const Decision d = stage->Decide(view, oracle, rng);
      guard.Check(d, view_observed, dummy_used);
      trace.steps.push_back(d);
      if (d.kind == Decision::Kind::kDummy) {
        ++dummies_used;
      } else if (d.kind == Decision::Kind::kSelect) {
        const StateValue state = phi.state(d.item);
        view_observed.Add(d.item, state);
        if (!trace.observed.Contains(d.item)) {
          trace.observed.Add(d.item, state);
          trace.selected.push_back(d.item);
        }
      }
    }
  }
  trace.final_value = instance.Evaluate(trace.selected, phi);
  trace.queries = oracle.ledger().item_queries() - queries_before;
  return trace;
}

}  // namespace adasub
