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

// The value oracle: conditional expected marginal utilities, exact or
// sampled, with query accounting.

#ifndef ADASUB_ORACLE_H_
#define ADASUB_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <span>

#include "adasub/core.h"
#include "adasub/objectives.h"
#include "adasub/rng.h"

namespace adasub {

// One item query = one MarginalItem call, whatever it costs internally.
// Set and policy queries are analysis tools and are counted separately so
// algorithm counts stay comparable with the closed-form bounds.
class QueryLedger {
 public:
  QueryLedger() = default;
  QueryLedger(const QueryLedger& other);
  QueryLedger& operator=(const QueryLedger& other);

  void RecordItemQuery() { item_queries_.fetch_add(1, std::memory_order_relaxed); }
  void RecordSetQuery() { set_queries_.fetch_add(1, std::memory_order_relaxed); }
  void RecordPolicyQuery() {
    policy_queries_.fetch_add(1, std::memory_order_relaxed);
  }
  // Adds another ledger's counts (per-thread shards).
  void Merge(const QueryLedger& other);
  void Reset();

  std::int64_t item_queries() const { return item_queries_.load(); }
  std::int64_t set_queries() const { return set_queries_.load(); }
  std::int64_t policy_queries() const { return policy_queries_.load(); }

 private:
  std::atomic<std::int64_t> item_queries_{0};
  std::atomic<std::int64_t> set_queries_{0};
  std::atomic<std::int64_t> policy_queries_{0};
};

struct OracleMode {
  enum class Kind { kExact, kMonteCarlo };
  Kind kind = Kind::kExact;
  int samples = 0;
  std::uint64_t seed = 0;

  static OracleMode Exact() { return {}; }
  static OracleMode MonteCarlo(int samples, std::uint64_t seed) {
    return {Kind::kMonteCarlo, samples, seed};
  }
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Exact mode is reentrant. Monte-Carlo mode owns an RNG stream and must not
// be shared between threads.
class ValueOracle {
 public:
  explicit ValueOracle(const Instance& instance,
                       OracleMode mode = OracleMode::Exact(),
                       EnumerationLimits limits = EnumerationLimits::FromEnvironment());

  // Delta(e | psi). Dummy items and observed items give exactly 0 without
  // touching the objective. Counts one item query.
  double MarginalItem(ItemId e, const PartialRealization& psi);
  // Same value with a standard error (0 in exact mode). Counts one query.
  Estimate EstimateMarginalItem(ItemId e, const PartialRealization& psi);

  // Delta(S | psi), always exact. Counts one set query.
  double MarginalSet(std::span<const ItemId> items,
                     const PartialRealization& psi);

  // E[f(S, Phi) | Phi ~ psi], exact and uncounted.
  double ConditionalValue(std::span<const ItemId> items,
                          const PartialRealization& psi) const;

  const Instance& instance() const { return *instance_; }
  const OracleMode& mode() const { return mode_; }
  const EnumerationLimits& limits() const { return limits_; }
  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  // E[f(dom(psi) u S, Phi) - f(dom(psi), Phi) | Phi ~ psi].
  double ExactGain(std::span<const ItemId> items,
                   const PartialRealization& psi) const;
  Estimate SampledGain(ItemId e, const PartialRealization& psi);

  const Instance* instance_;
  OracleMode mode_;
  EnumerationLimits limits_;
  QueryLedger ledger_;
  Rng mc_rng_;
};

}  // namespace adasub

#endif  // ADASUB_ORACLE_H_
