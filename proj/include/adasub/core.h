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

// Items, states, realizations and priors.
//
// Real items of the ground set are numbered 0..n-1. Dummy items, when a
// policy needs them, are numbered n..n+n_dummy-1; they have a single state
// and never change the value of any objective.

#ifndef ADASUB_CORE_H_
#define ADASUB_CORE_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace adasub {

using ItemId = std::int32_t;
using StateValue = std::int32_t;

// Tolerance for probability sums.
inline constexpr double kProbabilityTolerance = 1e-12;

// Guards every exact-enumeration path. Exceeding a limit raises
// EnumerationCapError; there is no silent fallback to sampling.
struct EnumerationLimits {
  // Maximum number of realizations enumerated (2 states ^ 12 items).
  std::int64_t max_realizations = 4096;
  // Maximum number of policy-tree / DP nodes visited by one computation.
  std::int64_t max_branches = 10'000'000;

  // Defaults, with max_realizations overridden by ADASUB_ENUM_CAP if set.
  static EnumerationLimits FromEnvironment();
};

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<int> state_alphabets, int n_dummy = 0);

  // n real items sharing an alphabet of `alphabet` states.
  static GroundSet Uniform(int n_real, int alphabet, int n_dummy = 0);

  int n_real() const { return static_cast<int>(alphabets_.size()); }
  int n_dummy() const { return n_dummy_; }
  int n_total() const { return n_real() + n_dummy_; }

  bool IsReal(ItemId e) const { return e >= 0 && e < n_real(); }
  bool IsDummy(ItemId e) const { return e >= n_real() && e < n_total(); }

  // Dummy items have exactly one state.
  int alphabet_size(ItemId e) const;
  std::span<const int> alphabets() const { return alphabets_; }

  GroundSet WithDummies(int n_dummy) const;

 private:
  std::vector<int> alphabets_;
  int n_dummy_ = 0;
};

// A full assignment of states to the real items.
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::vector<StateValue> states)
      : states_(std::move(states)) {}
  Realization(std::initializer_list<StateValue> states) : states_(states) {}

  int size() const { return static_cast<int>(states_.size()); }
  StateValue state(ItemId e) const { return states_[e]; }
  void set_state(ItemId e, StateValue s) { states_[e] = s; }
  std::span<const StateValue> states() const { return states_; }

  friend bool operator==(const Realization&, const Realization&) = default;
  friend auto operator<=>(const Realization&, const Realization&) = default;

 private:
  std::vector<StateValue> states_;
};

// Observed (item, state) pairs in the order they were revealed. Equality
// ignores that order.
class PartialRealization {
 public:
  using Observation = std::pair<ItemId, StateValue>;

  PartialRealization() = default;
  PartialRealization(std::initializer_list<Observation> observations);

  // Throws InvalidInputError if `e` is already observed.
  void Add(ItemId e, StateValue s);
  PartialRealization With(ItemId e, StateValue s) const;

  bool Contains(ItemId e) const;
  std::optional<StateValue> StateOf(ItemId e) const;

  std::span<const Observation> observations() const { return observations_; }
  // dom(psi), in observation order.
  std::vector<ItemId> Domain() const;
  int size() const { return static_cast<int>(observations_.size()); }
  bool empty() const { return observations_.empty(); }

  // Observations sorted by item; the memoization key for set semantics.
  std::vector<Observation> Canonical() const;

  friend bool operator==(const PartialRealization& a,
                         const PartialRealization& b);

 private:
  std::vector<Observation> observations_;
};

bool IsConsistent(const Realization& phi, const PartialRealization& psi);
bool IsSubrealization(const PartialRealization& psi,
                      const PartialRealization& psi2);

struct WeightedRealization {
  Realization realization;
  double probability = 0.0;
};

class Prior;

// p(phi | psi). Independent priors are kept in factored form: observed items
// are fixed and the rest keep their marginals.
class ConditionalDistribution {
 public:
  // Every realization consistent with psi and its conditional probability.
  std::vector<WeightedRealization> Enumerate(
      const EnumerationLimits& limits = {}) const;
  Realization Sample(std::mt19937_64& rng) const;

 private:
  friend class Prior;
  friend ConditionalDistribution ConditionalRealizations(
      const Prior& prior, const PartialRealization& psi);
  // Factored form. fixed_[e] >= 0 pins the item.
  std::vector<StateValue> fixed_;
  std::shared_ptr<const std::vector<std::vector<double>>> marginals_;
  // Explicit form, probabilities already normalized.
  std::vector<WeightedRealization> table_;
  bool factored_ = false;
};

class Prior {
 public:
  enum class Kind { kIndependent, kJoint };

  Prior() = default;

  // Per-item categorical distributions; each must sum to 1.
  static Prior Independent(std::vector<std::vector<double>> marginals);
  // n items each Bernoulli(p) over states {0, 1}.
  static Prior IndependentBernoulli(int n, double p_one);
  // Explicit (realization, probability) table over the given alphabets.
  static Prior Joint(std::vector<int> alphabets,
                     std::vector<WeightedRealization> table,
                     const EnumerationLimits& limits = {});

  Kind kind() const { return kind_; }
  int num_items() const { return static_cast<int>(alphabets_.size()); }
  int alphabet_size(ItemId e) const { return alphabets_[e]; }
  std::span<const int> alphabets() const { return alphabets_; }
  // Only meaningful for independent priors.
  const std::vector<std::vector<double>>& marginals() const {
    return *marginals_;
  }
  const std::vector<WeightedRealization>& table() const { return table_; }

  double Probability(const Realization& phi) const;
  // Pr[Phi ~ psi].
  double ProbabilityOf(const PartialRealization& psi) const;
  // Pr[Phi_e = o | Phi ~ psi] for every state o of e.
  std::vector<double> ConditionalStateDistribution(
      ItemId e, const PartialRealization& psi) const;
  Realization Sample(std::mt19937_64& rng) const;

  // Throws InvalidInputError for unknown items or states in psi.
  void CheckPartial(const PartialRealization& psi) const;

  // Size of the realization space an exact computation may have to visit:
  // the product of alphabet sizes, or the table size for joint priors.
  double RealizationCount() const;
  // Throws EnumerationCapError when RealizationCount() exceeds the cap.
  void RequireEnumerable(const EnumerationLimits& limits) const;

 private:
  friend ConditionalDistribution ConditionalRealizations(
      const Prior& prior, const PartialRealization& psi);

  Kind kind_ = Kind::kIndependent;
  std::vector<int> alphabets_;
  std::shared_ptr<const std::vector<std::vector<double>>> marginals_ =
      std::make_shared<const std::vector<std::vector<double>>>();
  std::vector<WeightedRealization> table_;
};

// Throws NullEventError when Pr[Phi ~ psi] = 0.
ConditionalDistribution ConditionalRealizations(const Prior& prior,
                                                const PartialRealization& psi);

// Disjoint blocks B_1..B_b with per-block limits d_i.
struct PartitionMatroid {
  std::vector<std::vector<ItemId>> blocks;
  std::vector<int> limits;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int total_limit() const;
  // Block index of e, or nullopt when e lies outside every block.
  std::optional<int> BlockOf(ItemId e) const;
  // Throws ValidationError naming the violated invariant.
  void Validate(int n_real) const;
};

}  // namespace adasub

#endif  // ADASUB_CORE_H_
