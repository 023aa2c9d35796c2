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

// Exact expansion of a policy's decision tree against the prior.

#ifndef ADASUB_POLICY_TREE_H_
#define ADASUB_POLICY_TREE_H_

#include <cstdint>

#include "adasub/core.h"
#include "adasub/objectives.h"
#include "adasub/oracle.h"
#include "adasub/policy.h"

namespace adasub {

struct TreeExpansion {
  // E[f(dom(start) u E(pi, Phi), Phi) | Phi ~ start].
  double expected_value = 0.0;
  // Expected item queries the sampled route would spend.
  double expected_queries = 0.0;
  // Probability mass reaching the leaves; 1 up to rounding.
  double total_probability = 0.0;
  std::int64_t nodes = 0;
};

// Expands pi over both the conditional prior p(phi | start) and the policy's
// own randomness. pi starts with an empty history; `start` only fixes what
// is already known about the world. Throws EnumerationCapError past
// limits.max_branches nodes.
TreeExpansion ExpandPolicyTree(
    const Policy& pi, const Instance& instance,
    const PartialRealization& start = {},
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());

// Delta(pi | psi), computed exactly. Counts one policy query on `oracle`.
double MarginalPolicy(const Policy& pi, const PartialRealization& psi,
                      ValueOracle& oracle);

}  // namespace adasub

#endif  // ADASUB_POLICY_TREE_H_
