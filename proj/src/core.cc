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

#include "adasub/core.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "adasub/errors.h"

namespace adasub {
namespace {

void CheckDistribution(std::span<const double> probs, const std::string& what) {
  if (probs.empty()) {
    throw InvalidInputError(what + ": empty state distribution");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidInputError(what + ": probability " + std::to_string(p) +
                              " outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw InvalidInputError(what + ": probabilities sum to " +
                            std::to_string(sum) + ", expected 1");
  }
}

int SampleCategorical(std::span<const double> probs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  int last_positive = 0;
  for (int s = 0; s < static_cast<int>(probs.size()); ++s) {
    if (probs[s] <= 0.0) continue;
    last_positive = s;
    if (u < probs[s]) return s;
    u -= probs[s];
  }
  return last_positive;
}

}  // namespace

EnumerationLimits EnumerationLimits::FromEnvironment() {
  EnumerationLimits limits;
  if (const char* cap = std::getenv("ADASUB_ENUM_CAP"); cap != nullptr) {
    char* end = nullptr;
    const long long value = std::strtoll(cap, &end, 10);
    if (end == cap || *end != '\0' || value <= 0) {
      throw InvalidInputError(std::string("ADASUB_ENUM_CAP: expected a "
                                          "positive integer, got '") +
                              cap + "'");
    }
    limits.max_realizations = value;
  }
  return limits;
}

GroundSet::GroundSet(std::vector<int> state_alphabets, int n_dummy)
    : alphabets_(std::move(state_alphabets)), n_dummy_(n_dummy) {
  if (n_dummy < 0) throw InvalidInputError("negative dummy count");
  for (int a : alphabets_) {
    if (a < 1) throw InvalidInputError("state alphabet must be non-empty");
  }
}

GroundSet GroundSet::Uniform(int n_real, int alphabet, int n_dummy) {
  if (n_real < 0) throw InvalidInputError("negative item count");
  return GroundSet(std::vector<int>(n_real, alphabet), n_dummy);
}

int GroundSet::alphabet_size(ItemId e) const {
  if (IsReal(e)) return alphabets_[e];
  if (IsDummy(e)) return 1;
  throw InvalidInputError("unknown item " + std::to_string(e));
}

GroundSet GroundSet::WithDummies(int n_dummy) const {
  return GroundSet(alphabets_, n_dummy);
}

PartialRealization::PartialRealization(
    std::initializer_list<Observation> observations) {
  for (const auto& [e, s] : observations) Add(e, s);
}

void PartialRealization::Add(ItemId e, StateValue s) {
  if (Contains(e)) {
    throw InvalidInputError("item " + std::to_string(e) +
                            " observed twice in a partial realization");
  }
  observations_.emplace_back(e, s);
}

PartialRealization PartialRealization::With(ItemId e, StateValue s) const {
  PartialRealization out = *this;
  out.Add(e, s);
  return out;
}

bool PartialRealization::Contains(ItemId e) const {
  return std::any_of(observations_.begin(), observations_.end(),
                     [e](const Observation& o) { return o.first == e; });
}

std::optional<StateValue> PartialRealization::StateOf(ItemId e) const {
  for (const auto& [item, state] : observations_) {
    if (item == e) return state;
  }
  return std::nullopt;
}

std::vector<ItemId> PartialRealization::Domain() const {
  std::vector<ItemId> dom;
  dom.reserve(observations_.size());
  for (const auto& o : observations_) dom.push_back(o.first);
  return dom;
}

std::vector<PartialRealization::Observation> PartialRealization::Canonical()
    const {
  std::vector<Observation> sorted = observations_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool operator==(const PartialRealization& a, const PartialRealization& b) {
  return a.size() == b.size() && a.Canonical() == b.Canonical();
}

bool IsConsistent(const Realization& phi, const PartialRealization& psi) {
  for (const auto& [e, s] : psi.observations()) {
    if (e < 0 || e >= phi.size()) {
      throw InvalidInputError("partial realization references unknown item " +
                              std::to_string(e));
    }
    if (phi.state(e) != s) return false;
  }
  return true;
}

bool IsSubrealization(const PartialRealization& psi,
                      const PartialRealization& psi2) {
  for (const auto& [e, s] : psi.observations()) {
    if (e < 0) {
      throw InvalidInputError("negative item id " + std::to_string(e));
    }
    const auto other = psi2.StateOf(e);
    if (!other.has_value() || *other != s) return false;
  }
  return true;
}

std::vector<WeightedRealization> ConditionalDistribution::Enumerate(
    const EnumerationLimits& limits) const {
  if (!factored_) return table_;
  const auto& marginals = *marginals_;
  const int n = static_cast<int>(fixed_.size());
  // Support of each free item.
  std::vector<std::vector<StateValue>> support(n);
  std::int64_t count = 1;
  for (int e = 0; e < n; ++e) {
    if (fixed_[e] >= 0) {
      support[e] = {fixed_[e]};
      continue;
    }
    for (int s = 0; s < static_cast<int>(marginals[e].size()); ++s) {
      if (marginals[e][s] > 0.0) support[e].push_back(s);
    }
    count *= static_cast<std::int64_t>(support[e].size());
    if (count > limits.max_realizations) {
      throw EnumerationCapError(
          "enumerating conditional realizations exceeds the cap of " +
          std::to_string(limits.max_realizations));
    }
  }
  std::vector<WeightedRealization> out;
  out.reserve(count);
  std::vector<int> cursor(n, 0);
  while (true) {
    Realization phi{std::vector<StateValue>(n)};
    double p = 1.0;
    for (int e = 0; e < n; ++e) {
      const StateValue s = support[e][cursor[e]];
      phi.set_state(e, s);
      if (fixed_[e] < 0) p *= marginals[e][s];
    }
    out.push_back({std::move(phi), p});
    int e = n - 1;
    while (e >= 0 && ++cursor[e] == static_cast<int>(support[e].size())) {
      cursor[e] = 0;
      --e;
    }
    if (e < 0) break;
  }
  return out;
}

Realization ConditionalDistribution::Sample(std::mt19937_64& rng) const {
  if (!factored_) {
    std::vector<double> probs;
    probs.reserve(table_.size());
    for (const auto& w : table_) probs.push_back(w.probability);
    return table_[SampleCategorical(probs, rng)].realization;
  }
  const auto& marginals = *marginals_;
  Realization phi(std::vector<StateValue>(fixed_.size()));
  for (int e = 0; e < static_cast<int>(fixed_.size()); ++e) {
    phi.set_state(e, fixed_[e] >= 0 ? fixed_[e]
                                    : SampleCategorical(marginals[e], rng));
  }
  return phi;
}

Prior Prior::Independent(std::vector<std::vector<double>> marginals) {
  Prior prior;
  prior.kind_ = Kind::kIndependent;
  for (int e = 0; e < static_cast<int>(marginals.size()); ++e) {
    CheckDistribution(marginals[e], "item " + std::to_string(e));
    prior.alphabets_.push_back(static_cast<int>(marginals[e].size()));
  }
  prior.marginals_ =
      std::make_shared<const std::vector<std::vector<double>>>(
          std::move(marginals));
  return prior;
}

Prior Prior::IndependentBernoulli(int n, double p_one) {
  return Independent(std::vector<std::vector<double>>(
      n, std::vector<double>{1.0 - p_one, p_one}));
}

Prior Prior::Joint(std::vector<int> alphabets,
                   std::vector<WeightedRealization> table,
                   const EnumerationLimits& limits) {
  std::int64_t space = 1;
  for (int a : alphabets) {
    if (a < 1) throw InvalidInputError("state alphabet must be non-empty");
    space *= a;
    if (space > limits.max_realizations) {
      throw EnumerationCapError(
          "joint prior realization space exceeds the enumeration cap of " +
          std::to_string(limits.max_realizations));
    }
  }
  std::set<Realization> seen;
  std::vector<double> probs;
  for (const auto& w : table) {
    if (w.realization.size() != static_cast<int>(alphabets.size())) {
      throw InvalidInputError("joint prior entry has wrong length");
    }
    for (int e = 0; e < w.realization.size(); ++e) {
      const StateValue s = w.realization.state(e);
      if (s < 0 || s >= alphabets[e]) {
        throw InvalidInputError("joint prior entry has state out of range");
      }
    }
    if (!seen.insert(w.realization).second) {
      throw InvalidInputError("joint prior lists a realization twice");
    }
    probs.push_back(w.probability);
  }
  CheckDistribution(probs, "joint prior");
  Prior prior;
  prior.kind_ = Kind::kJoint;
  prior.alphabets_ = std::move(alphabets);
  prior.table_ = std::move(table);
  return prior;
}

void Prior::CheckPartial(const PartialRealization& psi) const {
  for (const auto& [e, s] : psi.observations()) {
    if (e < 0 || e >= num_items()) {
      throw InvalidInputError("partial realization references unknown item " +
                              std::to_string(e));
    }
    if (s < 0 || s >= alphabets_[e]) {
      throw InvalidInputError("state " + std::to_string(s) +
                              " out of range for item " + std::to_string(e));
    }
  }
}

double Prior::Probability(const Realization& phi) const {
  if (phi.size() != num_items()) {
    throw InvalidInputError("realization has wrong length");
  }
  if (kind_ == Kind::kJoint) {
    for (const auto& w : table_) {
      if (w.realization == phi) return w.probability;
    }
    return 0.0;
  }
  double p = 1.0;
  for (int e = 0; e < num_items(); ++e) p *= (*marginals_)[e][phi.state(e)];
  return p;
}

double Prior::ProbabilityOf(const PartialRealization& psi) const {
  CheckPartial(psi);
  if (kind_ == Kind::kJoint) {
    double p = 0.0;
    for (const auto& w : table_) {
      if (IsConsistent(w.realization, psi)) p += w.probability;
    }
    return p;
  }
  double p = 1.0;
  for (const auto& [e, s] : psi.observations()) p *= (*marginals_)[e][s];
  return p;
}

std::vector<double> Prior::ConditionalStateDistribution(
    ItemId e, const PartialRealization& psi) const {
  CheckPartial(psi);
  if (e < 0 || e >= num_items()) {
    throw InvalidInputError("unknown item " + std::to_string(e));
  }
  std::vector<double> dist(alphabets_[e], 0.0);
  if (const auto known = psi.StateOf(e); known.has_value()) {
    if (ProbabilityOf(psi) <= 0.0) {
      throw NullEventError("conditioning on a zero-probability observation");
    }
    dist[*known] = 1.0;
    return dist;
  }
  if (kind_ == Kind::kIndependent) {
    if (ProbabilityOf(psi) <= 0.0) {
      throw NullEventError("conditioning on a zero-probability observation");
    }
    return (*marginals_)[e];
  }
  double total = 0.0;
  for (const auto& w : table_) {
    if (!IsConsistent(w.realization, psi)) continue;
    dist[w.realization.state(e)] += w.probability;
    total += w.probability;
  }
  if (total <= 0.0) {
    throw NullEventError("conditioning on a zero-probability observation");
  }
  for (double& p : dist) p /= total;
  return dist;
}

Realization Prior::Sample(std::mt19937_64& rng) const {
  return ConditionalRealizations(*this, {}).Sample(rng);
}

double Prior::RealizationCount() const {
  if (kind_ == Kind::kJoint) return static_cast<double>(table_.size());
  double count = 1.0;
  for (int a : alphabets_) count *= a;
  return count;
}

void Prior::RequireEnumerable(const EnumerationLimits& limits) const {
  const double count = RealizationCount();
  if (count > static_cast<double>(limits.max_realizations)) {
    throw EnumerationCapError(
        "exact evaluation needs " + std::to_string(static_cast<long long>(count)) +
        " realizations, above the enumeration cap of " +
        std::to_string(limits.max_realizations));
  }
}

ConditionalDistribution ConditionalRealizations(const Prior& prior,
                                                const PartialRealization& psi) {
  if (prior.ProbabilityOf(psi) <= 0.0) {
    throw NullEventError("conditioning on a zero-probability observation");
  }
  ConditionalDistribution dist;
  if (prior.kind() == Prior::Kind::kIndependent) {
    dist.factored_ = true;
    dist.marginals_ = prior.marginals_;
    dist.fixed_.assign(prior.num_items(), -1);
    for (const auto& [e, s] : psi.observations()) dist.fixed_[e] = s;
    return dist;
  }
  double total = 0.0;
  for (const auto& w : prior.table()) {
    if (w.probability > 0.0 && IsConsistent(w.realization, psi)) {
      dist.table_.push_back(w);
      total += w.probability;
    }
  }
  for (auto& w : dist.table_) w.probability /= total;
  return dist;
}

int PartitionMatroid::total_limit() const {
  return std::accumulate(limits.begin(), limits.end(), 0);
}

std::optional<int> PartitionMatroid::BlockOf(ItemId e) const {
  for (int i = 0; i < num_blocks(); ++i) {
    if (std::find(blocks[i].begin(), blocks[i].end(), e) != blocks[i].end()) {
      return i;
    }
  }
  return std::nullopt;
}

void PartitionMatroid::Validate(int n_real) const {
  if (blocks.size() != limits.size()) {
    throw ValidationError("matroid: " + std::to_string(blocks.size()) +
                          " blocks but " + std::to_string(limits.size()) +
                          " limits");
  }
  std::vector<int> owner(n_real, -1);
  for (int i = 0; i < num_blocks(); ++i) {
    for (ItemId e : blocks[i]) {
      if (e < 0 || e >= n_real) {
        throw ValidationError("matroid: block " + std::to_string(i) +
                              " references unknown item " + std::to_string(e));
      }
      if (owner[e] != -1) {
        throw ValidationError("matroid: blocks must be disjoint, item " +
                              std::to_string(e) + " is in blocks " +
                              std::to_string(owner[e]) + " and " +
                              std::to_string(i));
      }
      owner[e] = i;
    }
    if (limits[i] < 0 || limits[i] > static_cast<int>(blocks[i].size())) {
      throw ValidationError("matroid: limit " + std::to_string(limits[i]) +
                            " of block " + std::to_string(i) +
                            " outside [0, |block|]");
    }
  }
}

}  // namespace adasub
