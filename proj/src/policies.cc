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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "adasub/errors.h"
#include "adasub/policy.h"

namespace adasub {
namespace {

struct Scored {
  ItemId item;
  double delta;
  // Already observed by the stage; re-selecting it is a no-op.
  bool observed;
};

// Larger marginal first, then unobserved before observed, then smaller id.
// Observed items play the role of dummies: zero marginal, no effect.
bool RanksBefore(const Scored& a, const Scored& b) {
  if (a.delta != b.delta) return a.delta > b.delta;
  if (a.observed != b.observed) return !a.observed;
  return a.item < b.item;
}

long double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  k = std::min(k, n - k);
  long double value = 1.0L;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

void CheckCardinality(int n, int k) {
  if (n < 1) throw InvalidInputError("policy needs at least one item");
  if (k < 1 || k > n) {
    throw InvalidInputError("k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
}

std::vector<ItemId> Iota(int n) {
  std::vector<ItemId> items(n);
  std::iota(items.begin(), items.end(), 0);
  return items;
}

std::vector<Scored> Score(std::span<const ItemId> items, const StageView& view,
                          ValueOracle& oracle) {
  std::vector<Scored> scored;
  scored.reserve(items.size());
  for (ItemId e : items) {
    scored.push_back(
        {e, oracle.MarginalItem(e, view.observed), view.observed.Contains(e)});
  }
  return scored;
}

std::int64_t CountUnobserved(std::span<const ItemId> scope,
                             const StageView& view) {
  return std::count_if(scope.begin(), scope.end(), [&](ItemId e) {
    return !view.observed.Contains(e);
  });
}

// argmax over unobserved items of `scope`; nothing on a negative maximum.
Decision GreedyPick(std::span<const ItemId> scope, const StageView& view,
                    ValueOracle& oracle) {
  std::optional<Scored> best;
  for (ItemId e : scope) {
    if (view.observed.Contains(e)) continue;
    const Scored s{e, oracle.MarginalItem(e, view.observed), false};
    if (!best.has_value() || RanksBefore(s, *best)) best = s;
  }
  if (!best.has_value() || best->delta < 0.0) return Decision::Nothing();
  return Decision::Select(best->item);
}

// argmax over a uniform `m`-subset of `universe`, unconditional. Landing on
// an observed item selects nothing.
Decision SampledArgmax(std::span<const ItemId> universe, int m,
                       const StageView& view, ValueOracle& oracle, Rng& rng) {
  const std::vector<ItemId> sample = SampleWithoutReplacement(universe, m, rng);
  const std::vector<Scored> scored = Score(sample, view, oracle);
  const Scored& best = *std::min_element(scored.begin(), scored.end(), RanksBefore);
  return best.observed ? Decision::Nothing() : Decision::Select(best.item);
}

// The item at global rank t is the sample argmax iff it is sampled and none
// of the t items above it are: C(N-1-t, m-1) / C(N, m).
std::vector<WeightedDecision> SampledArgmaxDistribution(
    std::span<const ItemId> universe, int m, const StageView& view,
    ValueOracle& oracle) {
  std::vector<Scored> ranked = Score(universe, view, oracle);
  std::sort(ranked.begin(), ranked.end(), RanksBefore);
  const int n = static_cast<int>(ranked.size());
  const long double total = Binomial(n, m);
  std::vector<WeightedDecision> out;
  double nothing = 0.0;
  for (int t = 0; t < n; ++t) {
    const double p = static_cast<double>(Binomial(n - 1 - t, m - 1) / total);
    if (p == 0.0) continue;
    if (ranked[t].observed) {
      nothing += p;
    } else {
      out.push_back({Decision::Select(ranked[t].item), p});
    }
  }
  if (nothing > 0.0) out.push_back({Decision::Nothing(), nothing});
  return out;
}

class GreedyStage : public Stage {
 public:
  GreedyStage(int n, int k) : k_(k), scope_(Iota(n)) { CheckCardinality(n, k); }

  std::string name() const override { return "greedy"; }
  int rounds() const override { return k_; }
  Constraint constraint() const override { return {k_, std::nullopt}; }
  std::int64_t QueryCount(const StageView& view) const override {
    return CountUnobserved(scope_, view);
  }
  Decision Decide(const StageView& view, ValueOracle& oracle,
                  Rng&) const override {
    return GreedyPick(scope_, view, oracle);
  }
  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const override {
    return {{GreedyPick(scope_, view, oracle), 1.0}};
  }

 private:
  int k_;
  std::vector<ItemId> scope_;
};

class RandomGreedyStage : public Stage {
 public:
  RandomGreedyStage(int n, int k) : n_(n), k_(k), scope_(Iota(n)) {
    CheckCardinality(n, k);
  }

  std::string name() const override { return "arg"; }
  int rounds() const override { return k_; }
  Constraint constraint() const override { return {k_, std::nullopt}; }
  int dummies() const override { return 2 * k_ - 1; }
  std::int64_t QueryCount(const StageView& view) const override {
    return CountUnobserved(scope_, view);
  }

  Decision Decide(const StageView& view, ValueOracle& oracle,
                  Rng& rng) const override {
    const std::vector<ItemId> reals = TopReals(view, oracle);
    const int pick = UniformIndex(k_, rng);
    if (pick < static_cast<int>(reals.size())) return Decision::Select(reals[pick]);
    return Decision::Dummy(FirstFreeDummy(view) + pick -
                           static_cast<int>(reals.size()));
  }

  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const override {
    const std::vector<ItemId> reals = TopReals(view, oracle);
    std::vector<WeightedDecision> out;
    for (ItemId e : reals) out.push_back({Decision::Select(e), 1.0 / k_});
    const int dummy_slots = k_ - static_cast<int>(reals.size());
    if (dummy_slots > 0) {
      out.push_back({Decision::Dummy(FirstFreeDummy(view)),
                     static_cast<double>(dummy_slots) / k_});
    }
    return out;
  }

 private:
  // Real members of M(psi): dummies (Delta = 0, at least k of them left)
  // outrank every negative item and rank after non-negative real items.
  std::vector<ItemId> TopReals(const StageView& view, ValueOracle& oracle) const {
    std::vector<Scored> candidates;
    for (ItemId e : scope_) {
      if (view.observed.Contains(e)) continue;
      const double delta = oracle.MarginalItem(e, view.observed);
      if (delta >= 0.0) candidates.push_back({e, delta, false});
    }
    std::sort(candidates.begin(), candidates.end(), RanksBefore);
    std::vector<ItemId> top;
    for (int i = 0; i < std::min<int>(k_, candidates.size()); ++i) {
      top.push_back(candidates[i].item);
    }
    return top;
  }

  ItemId FirstFreeDummy(const StageView& view) const {
    if (view.dummies_used + k_ > dummies()) {
      throw ContractViolation("random greedy ran out of dummy items");
    }
    return n_ + view.dummies_used;
  }

  int n_;
  int k_;
  std::vector<ItemId> scope_;
};

class LinearTimeStage : public Stage {
 public:
  LinearTimeStage(int n, int k, double epsilon)
      : k_(k), params_(LtParams::Compute(n, k, epsilon)), universe_(Iota(n)) {}

  std::string name() const override { return "lt"; }
  int rounds() const override { return k_; }
  Constraint constraint() const override { return {k_, std::nullopt}; }
  std::int64_t QueryCount(const StageView&) const override {
    return params_.sample_size;
  }

  Decision Decide(const StageView& view, ValueOracle& oracle,
                  Rng& rng) const override {
    const int m = params_.sample_size;
    const std::vector<ItemId> sample = SampleWithoutReplacement(universe_, m, rng);
    std::vector<Scored> ranked = Score(sample, view, oracle);
    std::sort(ranked.begin(), ranked.end(), RanksBefore);
    const int rank = static_cast<int>(std::ceil(UniformOpenClosed(params_.s, rng)));
    if (rank < 1 || rank > m) return Decision::Nothing();
    const Scored& chosen = ranked[rank - 1];
    if (chosen.delta < 0.0 || chosen.observed) return Decision::Nothing();
    return Decision::Select(chosen.item);
  }

  // Rank j = ceil(d) has probability (min(j, s) - (j - 1)) / s. The item at
  // global position t is j-th in the sample with hypergeometric probability
  // C(t, j-1) C(N-1-t, m-j) / C(N, m).
  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const override {
    std::vector<Scored> ranked = Score(universe_, view, oracle);
    std::sort(ranked.begin(), ranked.end(), RanksBefore);
    const int n = static_cast<int>(ranked.size());
    const int m = params_.sample_size;
    const double s = params_.s;
    const int max_rank = static_cast<int>(std::ceil(s));
    const long double total = Binomial(n, m);
    std::vector<double> rank_probability(max_rank + 1, 0.0);
    double nothing = 0.0;
    for (int j = 1; j <= max_rank; ++j) {
      rank_probability[j] = (std::min<double>(j, s) - (j - 1)) / s;
      if (j > m) nothing += rank_probability[j];
    }
    std::vector<WeightedDecision> out;
    for (int t = 0; t < n; ++t) {
      double p = 0.0;
      for (int j = 1; j <= std::min(max_rank, m); ++j) {
        p += rank_probability[j] *
             static_cast<double>(Binomial(t, j - 1) *
                                 Binomial(n - 1 - t, m - j) / total);
      }
      if (p == 0.0) continue;
      if (ranked[t].delta >= 0.0 && !ranked[t].observed) {
        out.push_back({Decision::Select(ranked[t].item), p});
      } else {
        nothing += p;
      }
    }
    if (nothing > 0.0) out.push_back({Decision::Nothing(), nothing});
    return out;
  }

 private:
  int k_;
  LtParams params_;
  std::vector<ItemId> universe_;
};

class StochasticGreedyStage : public Stage {
 public:
  StochasticGreedyStage(int n, int k, double epsilon)
      : k_(k), sample_size_(StochasticSampleSize(n, k, epsilon)),
        universe_(Iota(n)) {}

  std::string name() const override { return "asg"; }
  int rounds() const override { return k_; }
  Constraint constraint() const override { return {k_, std::nullopt}; }
  std::int64_t QueryCount(const StageView&) const override {
    return sample_size_;
  }
  Decision Decide(const StageView& view, ValueOracle& oracle,
                  Rng& rng) const override {
    return SampledArgmax(universe_, sample_size_, view, oracle, rng);
  }
  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const override {
    return SampledArgmaxDistribution(universe_, sample_size_, view, oracle);
  }

 private:
  int k_;
  int sample_size_;
  std::vector<ItemId> universe_;
};

// Rounds are laid out block by block: d_1 rounds in B_1, then d_2 in B_2...
class BlockStage : public Stage {
 public:
  BlockStage(int n, const PartitionMatroid& matroid) : matroid_(matroid) {
    matroid_.Validate(n);
    for (int i = 0; i < matroid_.num_blocks(); ++i) {
      for (int j = 0; j < matroid_.limits[i]; ++j) round_block_.push_back(i);
    }
  }

  int rounds() const override { return static_cast<int>(round_block_.size()); }
  Constraint constraint() const override { return {-1, matroid_}; }

 protected:
  std::span<const ItemId> BlockFor(const StageView& view) const {
    return matroid_.blocks[round_block_.at(view.round)];
  }
  int BlockIndexFor(const StageView& view) const {
    return round_block_.at(view.round);
  }

  PartitionMatroid matroid_;
  std::vector<int> round_block_;
};

class LocallyGreedyStage : public BlockStage {
 public:
  using BlockStage::BlockStage;

  std::string name() const override { return "local"; }
  std::int64_t QueryCount(const StageView& view) const override {
    return CountUnobserved(BlockFor(view), view);
  }
  Decision Decide(const StageView& view, ValueOracle& oracle,
                  Rng&) const override {
    return GreedyPick(BlockFor(view), view, oracle);
  }
  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const override {
    return {{GreedyPick(BlockFor(view), view, oracle), 1.0}};
  }
};

class GeneralizedStochasticGreedyStage : public BlockStage {
 public:
  GeneralizedStochasticGreedyStage(int n, const PartitionMatroid& matroid,
                                   double epsilon)
      : BlockStage(n, matroid) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw InvalidInputError("epsilon must lie in (0, 1)");
    }
    for (int i = 0; i < matroid_.num_blocks(); ++i) {
      const int size = static_cast<int>(matroid_.blocks[i].size());
      sample_sizes_.push_back(
          matroid_.limits[i] == 0
              ? 0
              : StochasticSampleSize(size, matroid_.limits[i], epsilon));
    }
  }

  std::string name() const override { return "gasg"; }
  std::int64_t QueryCount(const StageView& view) const override {
    return sample_sizes_[BlockIndexFor(view)];
  }
  Decision Decide(const StageView& view, ValueOracle& oracle,
                  Rng& rng) const override {
    return SampledArgmax(BlockFor(view), sample_sizes_[BlockIndexFor(view)],
                         view, oracle, rng);
  }
  std::vector<WeightedDecision> DecisionDistribution(
      const StageView& view, ValueOracle& oracle) const override {
    return SampledArgmaxDistribution(
        BlockFor(view), sample_sizes_[BlockIndexFor(view)], view, oracle);
  }

 private:
  std::vector<int> sample_sizes_;
};

}  // namespace

std::vector<WeightedDecision> NormalizeDistribution(
    std::span<const WeightedDecision> distribution) {
  std::map<ItemId, double> selects;
  double nothing = 0.0;
  for (const auto& w : distribution) {
    if (w.decision.kind == Decision::Kind::kSelect) {
      selects[w.decision.item] += w.probability;
    } else {
      nothing += w.probability;
    }
  }
  std::vector<WeightedDecision> out;
  for (const auto& [e, p] : selects) out.push_back({Decision::Select(e), p});
  if (nothing > 0.0) out.push_back({Decision::Nothing(), nothing});
  return out;
}

Policy::Policy(std::shared_ptr<const Stage> stage) {
  stages_.push_back(std::move(stage));
}

int Policy::total_rounds() const {
  int total = 0;
  for (const auto& stage : stages_) total += stage->rounds();
  return total;
}

std::string Policy::name() const {
  if (stages_.empty()) return "empty";
  std::string out;
  for (const auto& stage : stages_) {
    if (!out.empty()) out += "@";
    out += stage->name();
  }
  return out;
}

Policy Concat(const Policy& first, const Policy& second) {
  Policy out = first;
  out.stages_.insert(out.stages_.end(), second.stages_.begin(),
                     second.stages_.end());
  return out;
}

LtParams LtParams::Compute(int n, int k, double epsilon) {
  CheckCardinality(n, k);
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw InvalidInputError("epsilon must lie in (0, 1/2) for the linear-time "
                            "policy, got " + std::to_string(epsilon));
  }
  LtParams params;
  params.epsilon = epsilon;
  params.q = 8.0 / (k * epsilon * epsilon) * std::log(1.0 / (2.0 * epsilon));
  const double scaled = std::ceil(params.q * n);
  params.sample_size = scaled >= n ? n : static_cast<int>(scaled);
  params.s = static_cast<double>(k) * params.sample_size / n;
  return params;
}

int StochasticSampleSize(int n, int k, double epsilon) {
  CheckCardinality(n, k);
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidInputError("epsilon must lie in (0, 1), got " +
                            std::to_string(epsilon));
  }
  const double size =
      std::ceil(static_cast<double>(n) / k * std::log(1.0 / epsilon));
  return size >= n ? n : static_cast<int>(size);
}

Policy AdaptiveGreedy(int n, int k) {
  return Policy(std::make_shared<GreedyStage>(n, k));
}

Policy AdaptiveRandomGreedy(int n, int k) {
  return Policy(std::make_shared<RandomGreedyStage>(n, k));
}

Policy LinearTimePolicy(int n, int k, double epsilon) {
  return Policy(std::make_shared<LinearTimeStage>(n, k, epsilon));
}

Policy AdaptiveStochasticGreedy(int n, int k, double epsilon) {
  return Policy(std::make_shared<StochasticGreedyStage>(n, k, epsilon));
}

Policy LocallyGreedy(int n, const PartitionMatroid& matroid) {
  return Policy(std::make_shared<LocallyGreedyStage>(n, matroid));
}

Policy GeneralizedStochasticGreedy(int n, const PartitionMatroid& matroid,
                                   double epsilon) {
  return Policy(
      std::make_shared<GeneralizedStochasticGreedyStage>(n, matroid, epsilon));
}

}  // namespace adasub
