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

#include "adasub/objectives.h"

#include <algorithm>
#include <string>

#include "adasub/errors.h"
#include "adasub/rng.h"

namespace adasub {
namespace {

void CheckUnitInterval(double x, const char* name) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw InvalidInputError(std::string(name) + " must lie in (0, 1], got " +
                            std::to_string(x));
  }
}

std::vector<std::vector<std::string>> BinaryLabels(int n, const char* zero,
                                                   const char* one) {
  return std::vector<std::vector<std::string>>(n, {zero, one});
}

}  // namespace

CoverageObjective::CoverageObjective(
    int n_targets, std::vector<std::vector<std::vector<int>>> covers)
    : n_targets_(n_targets), covers_(std::move(covers)) {
  if (n_targets_ < 0) throw InvalidInputError("negative target count");
  for (const auto& per_state : covers_) {
    for (const auto& targets : per_state) {
      for (int t : targets) {
        if (t < 0 || t >= n_targets_) {
          throw InvalidInputError("coverage: target " + std::to_string(t) +
                                  " outside [0, " +
                                  std::to_string(n_targets_) + ")");
        }
      }
    }
  }
}

double CoverageObjective::Evaluate(std::span<const ItemId> items,
                                   const Realization& phi) const {
  std::vector<char> covered(n_targets_, 0);
  int count = 0;
  for (ItemId e : items) {
    for (int t : covers_[e][phi.state(e)]) {
      if (!covered[t]) {
        covered[t] = 1;
        ++count;
      }
    }
  }
  return count;
}

CutObjective::CutObjective(int n_vertices, std::vector<WeightedEdge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  for (const auto& edge : edges_) {
    if (edge.u < 0 || edge.u >= n_vertices_ || edge.v < 0 ||
        edge.v >= n_vertices_) {
      throw InvalidInputError("cut: edge endpoint outside [0, " +
                              std::to_string(n_vertices_) + ")");
    }
    if (!(edge.weight >= 0.0)) {
      throw InvalidInputError("cut: edge weights must be non-negative");
    }
  }
}

double CutObjective::Evaluate(std::span<const ItemId> items,
                              const Realization&) const {
  std::vector<char> in_set(n_vertices_, 0);
  for (ItemId e : items) in_set[e] = 1;
  double value = 0.0;
  for (const auto& edge : edges_) {
    if (in_set[edge.u] != in_set[edge.v]) value += edge.weight;
  }
  return value;
}

SumObjective::SumObjective(std::vector<std::shared_ptr<const Objective>> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInputError("sum: no parts");
  for (const auto& part : parts_) {
    if (part == nullptr) throw InvalidInputError("sum: null part");
  }
}

double SumObjective::Evaluate(std::span<const ItemId> items,
                              const Realization& phi) const {
  double value = 0.0;
  for (const auto& part : parts_) value += part->Evaluate(items, phi);
  return value;
}

bool SumObjective::IsLocal() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const auto& part) { return part->IsLocal(); });
}

double SquaredCardinalityObjective::Evaluate(std::span<const ItemId> items,
                                             const Realization&) const {
  const double size = static_cast<double>(items.size());
  return size * size;
}

double Instance::Evaluate(std::span<const ItemId> items,
                          const Realization& phi) const {
  std::vector<ItemId> real;
  real.reserve(items.size());
  for (ItemId e : items) {
    if (ground.IsReal(e)) real.push_back(e);
  }
  std::sort(real.begin(), real.end());
  real.erase(std::unique(real.begin(), real.end()), real.end());
  return objective->Evaluate(real, phi);
}

namespace {

void ValidateObjective(const Objective& objective, const GroundSet& ground,
                       const std::string& path) {
  const int n = ground.n_real();
  if (const auto* coverage = dynamic_cast<const CoverageObjective*>(&objective)) {
    if (static_cast<int>(coverage->covers().size()) != n) {
      throw ValidationError(path + ".covers: expected one entry per item (" +
                            std::to_string(n) + "), got " +
                            std::to_string(coverage->covers().size()));
    }
    for (int e = 0; e < n; ++e) {
      if (static_cast<int>(coverage->covers()[e].size()) !=
          ground.alphabet_size(e)) {
        throw ValidationError(path + ".covers[" + std::to_string(e) +
                              "]: expected one target list per state (" +
                              std::to_string(ground.alphabet_size(e)) + ")");
      }
    }
  } else if (const auto* cut = dynamic_cast<const CutObjective*>(&objective)) {
    if (cut->n_vertices() != n) {
      throw ValidationError(path + ": cut has " +
                            std::to_string(cut->n_vertices()) +
                            " vertices but the instance has " +
                            std::to_string(n) + " items");
    }
  } else if (const auto* sum = dynamic_cast<const SumObjective*>(&objective)) {
    for (int i = 0; i < static_cast<int>(sum->parts().size()); ++i) {
      ValidateObjective(*sum->parts()[i], ground,
                        path + ".parts[" + std::to_string(i) + "]");
    }
  }
}

}  // namespace

void Instance::Validate() const {
  if (objective == nullptr) throw ValidationError("objective: missing");
  if (prior.num_items() != ground.n_real()) {
    throw ValidationError("states: prior covers " +
                          std::to_string(prior.num_items()) +
                          " items, expected " + std::to_string(n()));
  }
  for (int e = 0; e < n(); ++e) {
    if (prior.alphabet_size(e) != ground.alphabet_size(e)) {
      throw ValidationError("states: alphabet mismatch for item " +
                            std::to_string(e));
    }
  }
  ValidateObjective(*objective, ground, "objective");
  if (matroid.has_value()) matroid->Validate(n());
}

Instance GenerateCoverage(int n_sensors, int n_targets,
                          double coverage_density, double p_normal,
                          std::uint64_t seed) {
  if (n_sensors < 1) throw InvalidInputError("sensors must be >= 1");
  if (n_targets < 1) throw InvalidInputError("targets must be >= 1");
  CheckUnitInterval(coverage_density, "coverage density");
  CheckUnitInterval(p_normal, "p_normal");
  Rng rng = MakeRng(seed, "instance-gen/coverage");
  std::bernoulli_distribution covered(coverage_density);
  std::vector<std::vector<std::vector<int>>> covers(n_sensors);
  for (int e = 0; e < n_sensors; ++e) {
    covers[e].resize(2);
    for (int t = 0; t < n_targets; ++t) {
      if (covered(rng)) covers[e][1].push_back(t);
    }
  }
  Instance instance;
  instance.name = "coverage-" + std::to_string(n_sensors) + "x" +
                  std::to_string(n_targets) + "-s" + std::to_string(seed);
  instance.ground = GroundSet::Uniform(n_sensors, 2);
  instance.prior = Prior::IndependentBernoulli(n_sensors, p_normal);
  instance.objective =
      std::make_shared<CoverageObjective>(n_targets, std::move(covers));
  instance.state_labels = BinaryLabels(n_sensors, "failure", "normal");
  return instance;
}

namespace {

std::vector<WeightedEdge> RandomEdges(int n, double edge_probability,
                                      double max_weight, Rng& rng) {
  CheckUnitInterval(edge_probability, "edge probability");
  if (!(max_weight > 0.0)) {
    throw InvalidInputError("max edge weight must be positive");
  }
  std::bernoulli_distribution present(edge_probability);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present(rng)) edges.push_back({u, v, UniformOpenClosed(max_weight, rng)});
    }
  }
  return edges;
}

}  // namespace

Instance GenerateCut(int n_vertices, double edge_probability,
                     double max_weight, double p_one, std::uint64_t seed) {
  if (n_vertices < 1) throw InvalidInputError("vertices must be >= 1");
  Rng rng = MakeRng(seed, "instance-gen/cut");
  Instance instance =
      MakeCut(n_vertices, RandomEdges(n_vertices, edge_probability,
                                      max_weight, rng),
              p_one);
  instance.name = "cut-" + std::to_string(n_vertices) + "-s" +
                  std::to_string(seed);
  return instance;
}

Instance MakeCut(int n_vertices, std::vector<WeightedEdge> edges,
                 double p_one) {
  if (n_vertices < 1) throw InvalidInputError("vertices must be >= 1");
  Instance instance;
  instance.name = "cut-" + std::to_string(n_vertices);
  instance.ground = GroundSet::Uniform(n_vertices, 2);
  instance.prior = Prior::IndependentBernoulli(n_vertices, p_one);
  instance.objective =
      std::make_shared<CutObjective>(n_vertices, std::move(edges));
  instance.state_labels = BinaryLabels(n_vertices, "s0", "s1");
  return instance;
}

Instance GenerateMixed(int n_sensors, int n_targets, double coverage_density,
                       double p_normal, double edge_probability,
                       double max_weight, std::uint64_t seed) {
  Instance instance = GenerateCoverage(n_sensors, n_targets, coverage_density,
                                       p_normal, seed);
  Rng rng = MakeRng(seed, "instance-gen/mixed-cut");
  auto cut = std::make_shared<CutObjective>(
      n_sensors, RandomEdges(n_sensors, edge_probability, max_weight, rng));
  instance.objective = std::make_shared<SumObjective>(
      std::vector<std::shared_ptr<const Objective>>{instance.objective, cut});
  instance.name = "mixed-" + std::to_string(n_sensors) + "x" +
                  std::to_string(n_targets) + "-s" + std::to_string(seed);
  return instance;
}

Instance OneSensorToy(double p_normal) {
  Instance instance;
  instance.name = "one-sensor";
  instance.ground = GroundSet::Uniform(1, 2);
  instance.prior = Prior::IndependentBernoulli(1, p_normal);
  instance.objective = std::make_shared<CoverageObjective>(
      2, std::vector<std::vector<std::vector<int>>>{{{}, {0, 1}}});
  instance.state_labels = BinaryLabels(1, "failure", "normal");
  return instance;
}

Instance TriangleCut(double p_one) {
  Instance instance = MakeCut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, p_one);
  instance.name = "triangle-cut";
  return instance;
}

Instance SquaredCardinality(int n, double p_one) {
  Instance instance;
  instance.name = "squared-cardinality-" + std::to_string(n);
  instance.ground = GroundSet::Uniform(n, 2);
  instance.prior = Prior::IndependentBernoulli(n, p_one);
  instance.objective = std::make_shared<SquaredCardinalityObjective>();
  instance.state_labels = BinaryLabels(n, "s0", "s1");
  return instance;
}

}  // namespace adasub
