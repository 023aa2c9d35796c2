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

// Randomized invariants over seeded tiny instances.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "adasub/analysis.h"
#include "adasub/instance_io.h"
#include "adasub/objectives.h"
#include "adasub/oracle.h"
#include "adasub/policy.h"
#include "adasub/policy_tree.h"
#include "adasub/rng.h"

namespace adasub {
namespace {

class RandomInstanceTest : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Instance Make() const {
    const std::uint64_t seed = GetParam();
    Rng rng = MakeRng(seed, "properties-test");
    const int n = 3 + UniformIndex(3, rng);
    switch (seed % 3) {
      case 0:
        return GenerateCoverage(n, 4, 0.5, 0.6, seed);
      case 1:
        return GenerateCut(n, 0.6, 1.5, 0.4, seed);
      default:
        return GenerateMixed(n, 3, 0.5, 0.7, 0.5, 1.0, seed);
    }
  }
};

TEST_P(RandomInstanceTest, SubmodularityHolds) {
  const Instance instance = Make();
  EXPECT_TRUE(CheckAdaptiveSubmodularity(instance).empty());
  EXPECT_TRUE(CheckPointwiseSubmodularity(instance).empty());
  if (instance.objective->type() == "coverage") {
    EXPECT_TRUE(CheckAdaptiveMonotonicity(instance).empty());
  }
}

TEST_P(RandomInstanceTest, PoliciesNeverBeatTheOptimum) {
  const Instance instance = Make();
  const int n = instance.n();
  for (int k = 1; k <= 2; ++k) {
    const double opt = OptimalPolicyValue(instance, k);
    for (const Policy& pi :
         {AdaptiveGreedy(n, k), AdaptiveRandomGreedy(n, k),
          LinearTimePolicy(n, k, 0.25), AdaptiveStochasticGreedy(n, k, 0.25)}) {
      const TreeExpansion tree = ExpandPolicyTree(pi, instance);
      EXPECT_LE(tree.expected_value, opt + 1e-9) << pi.name();
      EXPECT_GE(tree.expected_value, 0.0);
      EXPECT_NEAR(tree.total_probability, 1.0, 1e-12);
    }
  }
}

TEST_P(RandomInstanceTest, FullSampleReductions) {
  const Instance instance = Make();
  const int n = instance.n();
  ValueOracle oracle(instance);
  const Policy lt = LinearTimePolicy(n, 2, 0.05);
  const Policy arg = AdaptiveRandomGreedy(n, 2);
  ASSERT_GE(LtParams::Compute(n, 2, 0.05).sample_size, n);
  for (const PartialRealization& psi : EnumeratePartialRealizations(instance, {})) {
    if (psi.size() > 1) continue;
    const StageView view{psi, psi.size(), 0};
    const auto a = NormalizeDistribution(lt.stages()[0]->DecisionDistribution(view, oracle));
    const auto b = NormalizeDistribution(arg.stages()[0]->DecisionDistribution(view, oracle));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].decision, b[i].decision);
      EXPECT_NEAR(a[i].probability, b[i].probability, 1e-9);
    }
  }
  if (instance.objective->type() == "coverage") {
    EXPECT_NEAR(ExactFavg(AdaptiveStochasticGreedy(n, 2, 0.001), instance).favg,
                ExactFavg(AdaptiveGreedy(n, 2), instance).favg, 1e-12);
  }
}

TEST_P(RandomInstanceTest, SerializationRoundTrip) {
  const Instance instance = Make();
  const Instance back = ParseInstance(SerializeInstance(instance));
  const int n = instance.n();
  for (const auto& [phi, p] : ConditionalRealizations(instance.prior, {}).Enumerate()) {
    EXPECT_NEAR(back.prior.Probability(phi), p, 1e-15);
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<ItemId> s;
      for (int e = 0; e < n; ++e) {
        if (mask & (1 << e)) s.push_back(e);
      }
      EXPECT_EQ(back.Evaluate(s, phi), instance.Evaluate(s, phi));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomInstanceTest, ::testing::Range<std::uint64_t>(0, 12));

}  // namespace
}  // namespace adasub
