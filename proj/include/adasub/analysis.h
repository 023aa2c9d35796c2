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

// Policy evaluation, the brute-force optimal policy, and numerical checkers
// for the submodularity notions.

#ifndef ADASUB_ANALYSIS_H_
#define ADASUB_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adasub/core.h"
#include "adasub/objectives.h"
#include "adasub/oracle.h"
#include "adasub/policy.h"

namespace adasub {

enum class EvalMode { kExact, kMonteCarlo };

struct EvalReport {
  double favg = 0.0;
  double std_error = 0.0;  // 0 in exact mode
  std::int64_t trials = 0;  // 0 in exact mode
  double mean_queries = 0.0;
  EvalMode mode = EvalMode::kExact;
};

// f_avg(pi) over the prior and the policy's randomness, by policy-tree
// expansion. Bit-for-bit reproducible.
EvalReport ExactFavg(
    const Policy& pi, const Instance& instance,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());

struct McOptions {
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  // Worker threads. The report does not depend on this.
  int jobs = 1;
  OracleMode oracle_mode = OracleMode::Exact();
};

// Sample mean and standard error over independent trials. Trial t draws
// its realization, policy stream and oracle stream from seed-derived
// streams indexed by t.
EvalReport McFavg(const Policy& pi, const Instance& instance,
                  const McOptions& options);

// Value of the optimal adaptive policy selecting at most k items, by
// dynamic programming over partial realizations.
double OptimalPolicyValue(
    const Instance& instance, int k,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());

// Same under a partition matroid. Items outside every block cannot be
// selected.
double OptimalPolicyValueMatroid(
    const Instance& instance, const PartitionMatroid& matroid,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());

// max over policies selecting at most `budget` items from `allowed`, of
// E[f(dom(psi) u E(pi, Phi), Phi) | Phi ~ psi]. The policy may read psi.
double RestrictedPolicyValue(
    const Instance& instance, std::span<const ItemId> allowed, int budget,
    const PartialRealization& psi,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());

inline constexpr double kViolationTolerance = 1e-9;

struct ViolationReport {
  std::string property;
  // Witness. Fields unused by a property stay empty.
  PartialRealization psi;
  PartialRealization psi_prime;
  std::optional<ItemId> item;
  std::vector<ItemId> allowed;  // V
  int budget = 0;               // a
  std::optional<Realization> phi;
  std::vector<ItemId> smaller_set;  // S1
  std::vector<ItemId> larger_set;   // S2
  // The property requires lhs >= rhs.
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs

  std::string Describe() const;
};

// Delta(e | psi) >= Delta(e | psi') for all psi <= psi', e outside dom(psi').
std::vector<ViolationReport> CheckAdaptiveSubmodularity(
    const Instance& instance,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());
// Delta(e | psi) >= 0.
std::vector<ViolationReport> CheckAdaptiveMonotonicity(
    const Instance& instance,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());
// f(., phi) submodular for every phi with p(phi) > 0.
std::vector<ViolationReport> CheckPointwiseSubmodularity(
    const Instance& instance,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());
// max over Omega(V, a) of Delta(pi | psi) is non-increasing in psi, for all
// V and a <= min(|V|, max_a).
std::vector<ViolationReport> CheckFullyAdaptiveSubmodularity(
    const Instance& instance, int max_a,
    const EnumerationLimits& limits = EnumerationLimits::FromEnvironment());

// Every positive-probability partial realization, smallest domains first.
std::vector<PartialRealization> EnumeratePartialRealizations(
    const Instance& instance, const EnumerationLimits& limits);

struct SamplingLemmaResult {
  double hit_rate = 0.0;
  double bound = 0.0;  // 1 - epsilon
  int sample_size = 0;
  std::int64_t trials = 0;
};

// Fraction of uniform samples R, |R| = min(n, ceil((n/k) ln(1/eps))), that
// meet a fixed k-subset.
SamplingLemmaResult CheckSamplingLemma(int n, int k, double epsilon,
                                       std::int64_t trials, std::uint64_t seed);

}  // namespace adasub

#endif  // ADASUB_ANALYSIS_H_
