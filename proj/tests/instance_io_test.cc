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

#include <cstdio>
#include <string>
#include <vector>

#include "adasub/errors.h"
#include "adasub/instance_io.h"
#include "adasub/objectives.h"
#include "adasub/verify.h"

namespace adasub {
namespace {

std::string FixturePath(const std::string& name) {
  return std::string(ADASUB_FIXTURE_DIR) + "/" + name;
}

// Exhaustive comparison of f over all S and all realizations with the
// probabilities of both priors.
void ExpectSameInstance(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.n(), b.n());
  const int n = a.n();
  ASSERT_LE(n, 6);
  const auto realizations = ConditionalRealizations(a.prior, {}).Enumerate();
  const auto other = ConditionalRealizations(b.prior, {}).Enumerate();
  ASSERT_EQ(realizations.size(), other.size());
  for (const auto& [phi, p] : realizations) {
    EXPECT_NEAR(b.prior.Probability(phi), p, 1e-12);
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<ItemId> s;
      for (int e = 0; e < n; ++e) {
        if (mask & (1 << e)) s.push_back(e);
      }
      EXPECT_DOUBLE_EQ(a.Evaluate(s, phi), b.Evaluate(s, phi));
    }
  }
  ASSERT_EQ(a.matroid.has_value(), b.matroid.has_value());
  if (a.matroid) {
    EXPECT_EQ(a.matroid->blocks, b.matroid->blocks);
    EXPECT_EQ(a.matroid->limits, b.matroid->limits);
  }
}

TEST(LoadInstanceTest, MinimalCoverage) {
  const Instance instance = LoadInstance(FixturePath("minimal_coverage.json"));
  EXPECT_EQ(instance.n(), 2);
  EXPECT_EQ(instance.name, "minimal-coverage");
  EXPECT_EQ(instance.objective->type(), "coverage");
  EXPECT_DOUBLE_EQ(instance.prior.Probability(Realization{1, 1}), 0.4);
  EXPECT_EQ(instance.Evaluate(std::vector<ItemId>{0, 1}, Realization{1, 1}), 2.0);
  EXPECT_EQ(instance.state_labels[0][1], "normal");
}

TEST(LoadInstanceTest, ShippedFilesMatchBuiltInFixtures) {
  ExpectSameInstance(LoadInstance(FixturePath("triangle_cut.json")),
                     ShippedFixture("triangle-cut"));
  ExpectSameInstance(LoadInstance(FixturePath("matroid_coverage.json")),
                     ShippedFixture("coverage-4-matroid"));
  ExpectSameInstance(LoadInstance(FixturePath("joint_coverage.json")),
                     ShippedFixture("coverage-joint"));
}

TEST(LoadInstanceTest, MixedSumHandValues) {
  const Instance instance = LoadInstance(FixturePath("mixed_sum.json"));
  EXPECT_EQ(instance.objective->type(), "sum");
  // Coverage {0, 1} covers targets 0, 1; the cut of {1} is 0.5 + 2.0.
  EXPECT_DOUBLE_EQ(instance.Evaluate(std::vector<ItemId>{1}, Realization{0, 1, 0}),
                   2.0 + 2.5);
  EXPECT_DOUBLE_EQ(
      instance.Evaluate(std::vector<ItemId>{0, 2}, Realization{1, 0, 1}),
      2.0 + 2.5);
}

TEST(LoadInstanceTest, RoundTripsEveryShippedFixture) {
  for (const Fixture& fixture : ShippedFixtures()) {
    SCOPED_TRACE(fixture.name);
    const std::string text = SerializeInstance(fixture.instance);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(back.name, fixture.instance.name);
    ExpectSameInstance(fixture.instance, back);
  }
}

TEST(LoadInstanceTest, SaveThenLoad) {
  const std::string path = ::testing::TempDir() + "/adasub_roundtrip.json";
  const Instance original = GenerateMixed(4, 3, 0.6, 0.7, 0.5, 1.5, 11);
  SaveInstance(original, path);
  ExpectSameInstance(original, LoadInstance(path));
  std::remove(path.c_str());
}

TEST(LoadInstanceTest, ProbabilitiesNotSummingToOne) {
  const std::string text = R"({
    "version": 1, "items": 1,
    "states": [[{"label": "a", "probability": 0.5},
                {"label": "b", "probability": 0.4}]],
    "objective": {"type": "coverage", "targets": 1, "covers": [[[], [0]]]}
  })";
  try {
    ParseInstance(text, "bad.json");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("states"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("sum"), std::string::npos) << e.what();
  }
}

TEST(LoadInstanceTest, OverlappingMatroidBlocks) {
  const std::string text = R"({
    "version": 1, "items": 2,
    "states": [[{"label": "a", "probability": 1.0}],
               [{"label": "a", "probability": 1.0}]],
    "objective": {"type": "cut", "edges": [[0, 1, 1.0]]},
    "matroid": {"blocks": [[0, 1], [1]], "limits": [1, 1]}
  })";
  try {
    ParseInstance(text, "overlap.json");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("disjoint"), std::string::npos) << e.what();
  }
}

TEST(LoadInstanceTest, SyntaxErrorsReportLineAndColumn) {
  try {
    ParseInstance("{\n  \"version\": 1,\n  \"items\": ,\n}", "broken.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("broken.json"), std::string::npos) << message;
    EXPECT_NE(message.find("line 3"), std::string::npos) << message;
  }
}

TEST(LoadInstanceTest, FieldErrorsNameThePath) {
  const std::string text = R"({
    "version": 1, "items": 1,
    "states": [[{"label": "a", "probability": 1.0}]],
    "objective": {"type": "cut", "edges": [[0, "x", 1.0]]}
  })";
  try {
    ParseInstance(text, "edge.json");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("objective.edges"), std::string::npos)
        << e.what();
  }
}

TEST(LoadInstanceTest, UnknownVersionAndObjective) {
  EXPECT_THROW(ParseInstance(R"({"version": 2, "items": 0})"), ParseError);
  EXPECT_THROW(ParseInstance(R"({"version": 1, "items": 1,
      "states": [[{"label": "a", "probability": 1.0}]],
      "objective": {"type": "mystery"}})"),
               Error);
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), ParseError);
}

}  // namespace
}  // namespace adasub
