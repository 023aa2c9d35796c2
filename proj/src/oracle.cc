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

#include "adasub/oracle.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "adasub/errors.h"

namespace adasub {

QueryLedger::QueryLedger(const QueryLedger& other) { *this = other; }

QueryLedger& QueryLedger::operator=(const QueryLedger& other) {
  item_queries_.store(other.item_queries());
  set_queries_.store(other.set_queries());
  policy_queries_.store(other.policy_queries());
  return *this;
}

void QueryLedger::Merge(const QueryLedger& other) {
  item_queries_.fetch_add(other.item_queries());
  set_queries_.fetch_add(other.set_queries());
  policy_queries_.fetch_add(other.policy_queries());
}

void QueryLedger::Reset() {
  item_queries_.store(0);
  set_queries_.store(0);
  policy_queries_.store(0);
}

ValueOracle::ValueOracle(const Instance& instance, OracleMode mode,
                         EnumerationLimits limits)
    : instance_(&instance),
      mode_(mode),
      limits_(limits),
      mc_rng_(MakeRng(mode.seed, "oracle-mc")) {
  if (mode_.kind == OracleMode::Kind::kMonteCarlo && mode_.samples < 1) {
    throw InvalidInputError("Monte-Carlo oracle needs at least one sample");
  }
}

namespace {

// Expectation of g(phi) over p(phi | psi). When f is local and the prior
// independent, only the `free` items (unobserved items g reads) are
// enumerated; otherwise whole conditional realizations are.
template <typename G>
double Expect(const Instance& instance, const PartialRealization& psi,
              std::span<const ItemId> free, const EnumerationLimits& limits,
              G&& g) {
  const Prior& prior = instance.prior;
  if (prior.ProbabilityOf(psi) <= 0.0) {
    throw NullEventError("conditioning on a zero-probability observation");
  }
  if (!(instance.objective->IsLocal() &&
        prior.kind() == Prior::Kind::kIndependent)) {
    double total = 0.0;
    for (const auto& w : ConditionalRealizations(prior, psi).Enumerate(limits)) {
      total += w.probability * g(w.realization);
    }
    return total;
  }
  Realization scratch(std::vector<StateValue>(instance.n(), 0));
  for (const auto& [e, s] : psi.observations()) scratch.set_state(e, s);
  std::vector<std::vector<StateValue>> support(free.size());
  std::int64_t count = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    const auto& probs = prior.marginals()[free[i]];
    for (int s = 0; s < static_cast<int>(probs.size()); ++s) {
      if (probs[s] > 0.0) support[i].push_back(s);
    }
    count *= static_cast<std::int64_t>(support[i].size());
    if (count > limits.max_realizations) {
      throw EnumerationCapError("exact expectation over " +
                                std::to_string(free.size()) +
                                " unobserved items exceeds the cap of " +
                                std::to_string(limits.max_realizations));
    }
  }
  std::vector<int> cursor(free.size(), 0);
  double total = 0.0;
  while (true) {
    double p = 1.0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const StateValue s = support[i][cursor[i]];
      scratch.set_state(free[i], s);
      p *= prior.marginals()[free[i]][s];
    }
    total += p * g(scratch);
    int i = static_cast<int>(free.size()) - 1;
    while (i >= 0 && ++cursor[i] == static_cast<int>(support[i].size())) {
      cursor[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return total;
}

}  // namespace

double ValueOracle::ExactGain(std::span<const ItemId> items,
                              const PartialRealization& psi) const {
  instance_->prior.CheckPartial(psi);
  const std::vector<ItemId> dom = psi.Domain();
  std::vector<ItemId> added;
  for (ItemId e : items) {
    if (!instance_->ground.IsReal(e)) {
      if (instance_->ground.IsDummy(e)) continue;
      throw InvalidInputError("unknown item " + std::to_string(e));
    }
    if (!psi.Contains(e) &&
        std::find(added.begin(), added.end(), e) == added.end()) {
      added.push_back(e);
    }
  }
  if (added.empty()) {
    if (instance_->prior.ProbabilityOf(psi) <= 0.0) {
      throw NullEventError("conditioning on a zero-probability observation");
    }
    return 0.0;
  }
  std::vector<ItemId> with = dom;
  with.insert(with.end(), added.begin(), added.end());
  return Expect(*instance_, psi, added, limits_, [&](const Realization& phi) {
    return instance_->Evaluate(with, phi) - instance_->Evaluate(dom, phi);
  });
}

double ValueOracle::ConditionalValue(std::span<const ItemId> items,
                                     const PartialRealization& psi) const {
  instance_->prior.CheckPartial(psi);
  std::vector<ItemId> set;
  std::vector<ItemId> free;
  for (ItemId e : items) {
    if (!instance_->ground.IsReal(e)) continue;
    set.push_back(e);
    if (!psi.Contains(e) && std::find(free.begin(), free.end(), e) == free.end()) {
      free.push_back(e);
    }
  }
  return Expect(*instance_, psi, free, limits_, [&](const Realization& phi) {
    return instance_->Evaluate(set, phi);
  });
}

Estimate ValueOracle::SampledGain(ItemId e, const PartialRealization& psi) {
  instance_->prior.CheckPartial(psi);
  const ConditionalDistribution cond =
      ConditionalRealizations(instance_->prior, psi);
  const std::vector<ItemId> dom = psi.Domain();
  std::vector<ItemId> with = dom;
  with.push_back(e);
  // Welford.
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 1; i <= mode_.samples; ++i) {
    const Realization phi = cond.Sample(mc_rng_);
    const double x = instance_->Evaluate(with, phi) - instance_->Evaluate(dom, phi);
    const double delta = x - mean;
    mean += delta / i;
    m2 += delta * (x - mean);
  }
  const double variance = mode_.samples > 1 ? m2 / (mode_.samples - 1) : 0.0;
  return {mean, std::sqrt(variance / mode_.samples)};
}

Estimate ValueOracle::EstimateMarginalItem(ItemId e,
                                           const PartialRealization& psi) {
  ledger_.RecordItemQuery();
  if (instance_->ground.IsDummy(e)) return {};
  if (!instance_->ground.IsReal(e)) {
    throw InvalidInputError("unknown item " + std::to_string(e));
  }
  if (psi.Contains(e)) {
    instance_->prior.CheckPartial(psi);
    return {};
  }
  if (mode_.kind == OracleMode::Kind::kMonteCarlo) return SampledGain(e, psi);
  const ItemId single[] = {e};
  return {ExactGain(single, psi), 0.0};
}

double ValueOracle::MarginalItem(ItemId e, const PartialRealization& psi) {
  return EstimateMarginalItem(e, psi).mean;
}

double ValueOracle::MarginalSet(std::span<const ItemId> items,
                                const PartialRealization& psi) {
  ledger_.RecordSetQuery();
  return ExactGain(items, psi);
}

}  // namespace adasub
