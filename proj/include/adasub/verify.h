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

// Acceptance suites: approximation ratios against the DP optimum, property
// checkers, query accounting, the sampling lemma, reductions between
// policies, and exact-vs-sampled evaluation.

#ifndef ADASUB_VERIFY_H_
#define ADASUB_VERIFY_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "adasub/objectives.h"

namespace adasub {

struct Fixture {
  std::string name;
  Instance instance;
};

// Small instances shipped with the library; every one is exact-tractable.
std::vector<Fixture> ShippedFixtures();
// The fixture called `name`. Throws InvalidInputError if unknown.
Instance ShippedFixture(std::string_view name);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string required;
  // Per-check lines, failures first.
  std::vector<std::string> details;
};

CriterionResult VerifyNonMonotoneRatio(const VerifyOptions& options);     // 1
CriterionResult VerifyLinearTimeRatio(const VerifyOptions& options);      // 2
CriterionResult VerifyMonotoneRatios(const VerifyOptions& options);       // 3
CriterionResult VerifyMatroidRatios(const VerifyOptions& options);        // 4
CriterionResult VerifyQueryAccounting(const VerifyOptions& options);      // 5
CriterionResult VerifySamplingLemma(const VerifyOptions& options);        // 6
CriterionResult VerifyPropertyCheckers(const VerifyOptions& options);     // 7
CriterionResult VerifyReductions(const VerifyOptions& options);           // 8
CriterionResult VerifyCrossValidation(const VerifyOptions& options);      // 9

// Suite names: ratios, properties, queries, sampling, reductions, crossval,
// all. Throws InvalidInputError for anything else.
std::vector<CriterionResult> RunSuite(std::string_view suite,
                                      const VerifyOptions& options);
const std::vector<std::string>& SuiteNames();

// "PASS [3] monotone ratios: measured ...; required ..."
std::string FormatResult(const CriterionResult& result);
void PrintResult(const CriterionResult& result, bool verbose, std::ostream& out);

}  // namespace adasub

#endif  // ADASUB_VERIFY_H_
