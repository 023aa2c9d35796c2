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

#include <algorithm>
#include <vector>

#include "adasub/analysis.h"
#include "adasub/errors.h"
#include "adasub/objectives.h"
#include "adasub/oracle.h"
#include "adasub/verify.h"

namespace adasub {
namespace {

TEST(EnumeratePartialRealizationsTest, IndependentBinaryCount) {
  const Instance instance = ShippedFixture("coverage-3");
  const auto all = EnumeratePartialRealizations(instance, {});
  EXPECT_EQ(all.size(), 27u);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i - 1].size(), all[i].size());
  }
  EXPECT_TRUE(all.front().empty());
}

TEST(EnumeratePartialRealizationsTest, JointPriorSkipsNullEvents) {
  const Instance instance = ShippedFixture("coverage-joint");
  int expected = 0;
  for (int digits = 0; digits < 27; ++digits) {
    PartialRealization psi;
    for (int e = 0, d = digits; e < 3; ++e, d /= 3) {
      if (d % 3) psi.Add(e, d % 3 - 1);
    }
    if (instance.prior.ProbabilityOf(psi) > 0.0) ++expected;
  }
  EXPECT_EQ(static_cast<int>(EnumeratePartialRealizations(instance, {}).size()),
            expected);
  EXPECT_LT(expected, 27);
}

TEST(EnumeratePartialRealizationsTest, Cap) {
  EnumerationLimits limits;
  limits.max_branches = 10;
  EXPECT_THROW(EnumeratePartialRealizations(ShippedFixture("coverage-3"), limits),
               EnumerationCapError);
}

TEST(CheckersTest, CoveragePassesEverything) {
  for (const char* name : {"one-sensor", "coverage-3", "coverage-4-matroid"}) {
    const Instance instance = ShippedFixture(name);
    EXPECT_TRUE(CheckAdaptiveSubmodularity(instance).empty()) << name;
    EXPECT_TRUE(CheckAdaptiveMonotonicity(instance).empty()) << name;
    EXPECT_TRUE(CheckPointwiseSubmodularity(instance).empty()) << name;
    EXPECT_TRUE(CheckFullyAdaptiveSubmodularity(instance, 2).empty()) << name;
  }
}

TEST(CheckersTest, GeneratedCoverageIsAdaptiveSubmodular) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance instance = GenerateCoverage(4, 5, 0.5, 0.6, seed);
    EXPECT_TRUE(CheckAdaptiveSubmodularity(instance).empty());
    EXPECT_TRUE(CheckAdaptiveMonotonicity(instance).empty());
  }
}

TEST(CheckersTest, TriangleCutIsSubmodularButNotMonotone) {
  const Instance triangle = TriangleCut(0.3);
  EXPECT_TRUE(CheckAdaptiveSubmodularity(triangle).empty());
  EXPECT_TRUE(CheckPointwiseSubmodularity(triangle).empty());
  const auto violations = CheckAdaptiveMonotonicity(triangle);
  ASSERT_FALSE(violations.empty());
  ValueOracle oracle(triangle);
  for (const ViolationReport& v : violations) {
    ASSERT_TRUE(v.item.has_value());
    EXPECT_EQ(v.property, "adaptive monotonicity");
    EXPECT_NEAR(v.lhs, oracle.MarginalItem(*v.item, v.psi), 1e-12);
    EXPECT_LT(v.lhs, 0.0);
    EXPECT_EQ(v.psi.size(), 2);  // only the third vertex hurts
    EXPECT_NEAR(v.margin, 2.0, 1e-12);
  }
}

TEST(CheckersTest, SquaredCardinalityViolatesDiminishingReturns) {
  const Instance squared = ShippedFixture("squared-3");
  ValueOracle oracle(squared);

  const auto adaptive = CheckAdaptiveSubmodularity(squared);
  ASSERT_FALSE(adaptive.empty());
  for (const ViolationReport& v : adaptive) {
    EXPECT_TRUE(IsSubrealization(v.psi, v.psi_prime));
    EXPECT_NEAR(v.lhs, oracle.MarginalItem(*v.item, v.psi), 1e-12);
    EXPECT_NEAR(v.rhs, oracle.MarginalItem(*v.item, v.psi_prime), 1e-12);
    EXPECT_GE(v.margin, 0.1);
  }

  const auto pointwise = CheckPointwiseSubmodularity(squared);
  ASSERT_FALSE(pointwise.empty());
  const ViolationReport& w = pointwise.front();
  ASSERT_TRUE(w.phi.has_value());
  std::vector<ItemId> s1 = w.smaller_set;
  std::vector<ItemId> s2 = w.larger_set;
  EXPECT_TRUE(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
  const auto size = [](std::size_t s) { return static_cast<double>(s * s); };
  EXPECT_EQ(w.lhs, size(s1.size() + 1) - size(s1.size()));
  EXPECT_EQ(w.rhs, size(s2.size() + 1) - size(s2.size()));

  const auto fully = CheckFullyAdaptiveSubmodularity(squared, 2);
  ASSERT_FALSE(fully.empty());
  for (const ViolationReport& v : fully) {
    EXPECT_FALSE(v.allowed.empty());
    EXPECT_GE(v.budget, 1);
    EXPECT_LE(v.budget, 2);
    const double lhs = RestrictedPolicyValue(squared, v.allowed, v.budget, v.psi) -
                       oracle.ConditionalValue(v.psi.Domain(), v.psi);
    EXPECT_NEAR(v.lhs, lhs, 1e-12);
  }
  EXPECT_NE(fully.front().Describe().find("V={"), std::string::npos);
}

TEST(CheckersTest, SingleBudgetFullyAdaptiveTracksAdaptive) {
  // With a = 1 the best restricted policy picks one item of V or stops:
  // its gain is max(0, max over e in V of Delta(e | psi)).
  for (const char* name : {"squared-3", "mixed-5", "coverage-3"}) {
    const Instance instance = ShippedFixture(name);
    ValueOracle oracle(instance);
    const auto gain = [&](const std::vector<ItemId>& v,
                          const PartialRealization& psi) {
      double best = 0.0;
      for (ItemId e : v) best = std::max(best, oracle.MarginalItem(e, psi));
      return best;
    };
    const auto adaptive = CheckAdaptiveSubmodularity(instance);
    const auto fully = CheckFullyAdaptiveSubmodularity(instance, 1);
    for (const ViolationReport& v : fully) {
      EXPECT_EQ(v.budget, 1);
      EXPECT_NEAR(v.lhs, gain(v.allowed, v.psi), 1e-12);
      EXPECT_NEAR(v.rhs, gain(v.allowed, v.psi_prime), 1e-12);
      if (v.allowed.size() == 1) {
        const bool matched = std::any_of(
            adaptive.begin(), adaptive.end(), [&](const ViolationReport& a) {
              return a.psi == v.psi && a.psi_prime == v.psi_prime &&
                     *a.item == v.allowed[0];
            });
        EXPECT_TRUE(matched) << v.Describe();
      }
    }
    EXPECT_EQ(adaptive.empty(), fully.empty()) << name;
  }
}

TEST(CheckersTest, DescribeNamesTheWitness) {
  const auto violations = CheckAdaptiveMonotonicity(TriangleCut());
  ASSERT_FALSE(violations.empty());
  const std::string text = violations.front().Describe();
  EXPECT_NE(text.find("adaptive monotonicity"), std::string::npos);
  EXPECT_NE(text.find("psi={"), std::string::npos);
  EXPECT_NE(text.find("e="), std::string::npos);
}

TEST(CheckersTest, ArgumentChecks) {
  EXPECT_THROW(CheckFullyAdaptiveSubmodularity(TriangleCut(), 0),
               InvalidInputError);
  EnumerationLimits limits;
  limits.max_realizations = 4;
  EXPECT_THROW(CheckPointwiseSubmodularity(TriangleCut(), limits),
               EnumerationCapError);
}

}  // namespace
}  // namespace adasub
