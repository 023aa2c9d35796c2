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

// State-dependent utility functions f(S, phi) and the instances built from
// them.

#ifndef ADASUB_OBJECTIVES_H_
#define ADASUB_OBJECTIVES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adasub/core.h"

namespace adasub {

class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::string_view type() const = 0;
  // f(S, phi) >= 0. `items` holds distinct real items.
  virtual double Evaluate(std::span<const ItemId> items,
                          const Realization& phi) const = 0;
  // True when f(S, phi) reads phi only on S. Lets the oracle sum over the
  // states of a handful of items instead of whole realizations.
  virtual bool IsLocal() const { return false; }
};

// Sensor coverage: f(S, phi) = |union over e in S of covers[e][phi(e)]|.
class CoverageObjective : public Objective {
 public:
  // covers[item][state] lists target ids in [0, n_targets).
  CoverageObjective(int n_targets,
                    std::vector<std::vector<std::vector<int>>> covers);

  std::string_view type() const override { return "coverage"; }
  double Evaluate(std::span<const ItemId> items,
                  const Realization& phi) const override;
  bool IsLocal() const override { return true; }

  int n_targets() const { return n_targets_; }
  const std::vector<std::vector<std::vector<int>>>& covers() const {
    return covers_;
  }

 private:
  int n_targets_;
  std::vector<std::vector<std::vector<int>>> covers_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

// Weighted graph cut, independent of the states. Submodular and
// non-monotone.
class CutObjective : public Objective {
 public:
  CutObjective(int n_vertices, std::vector<WeightedEdge> edges);

  std::string_view type() const override { return "cut"; }
  double Evaluate(std::span<const ItemId> items,
                  const Realization& phi) const override;
  bool IsLocal() const override { return true; }

  int n_vertices() const { return n_vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  int n_vertices_;
  std::vector<WeightedEdge> edges_;
};

class SumObjective : public Objective {
 public:
  explicit SumObjective(std::vector<std::shared_ptr<const Objective>> parts);

  std::string_view type() const override { return "sum"; }
  double Evaluate(std::span<const ItemId> items,
                  const Realization& phi) const override;
  bool IsLocal() const override;

  const std::vector<std::shared_ptr<const Objective>>& parts() const {
    return parts_;
  }

 private:
  std::vector<std::shared_ptr<const Objective>> parts_;
};

// f(S) = |S|^2. Supermodular; the standard violating fixture.
class SquaredCardinalityObjective : public Objective {
 public:
  std::string_view type() const override { return "squared_cardinality"; }
  double Evaluate(std::span<const ItemId> items,
                  const Realization& phi) const override;
  bool IsLocal() const override { return true; }
};

struct Instance {
  std::string name;
  GroundSet ground;
  Prior prior;
  std::shared_ptr<const Objective> objective;
  std::optional<PartitionMatroid> matroid;
  // Optional human-readable state names, per item.
  std::vector<std::vector<std::string>> state_labels;

  int n() const { return ground.n_real(); }
  // f(S, phi) with dummy items and repeats dropped from S.
  double Evaluate(std::span<const ItemId> items, const Realization& phi) const;
  // Throws ValidationError if the parts disagree on sizes.
  void Validate() const;
};

// Sensors with states {0 = failure, 1 = normal}. Under the normal state each
// (sensor, target) pair is covered independently with probability
// `coverage_density`; failed sensors cover nothing.
Instance GenerateCoverage(int n_sensors, int n_targets,
                          double coverage_density, double p_normal,
                          std::uint64_t seed);

// Random graph over n vertices: each edge present with `edge_probability`
// and weight uniform in (0, max_weight]. Binary states with Pr[1] = p_one.
Instance GenerateCut(int n_vertices, double edge_probability,
                     double max_weight, double p_one, std::uint64_t seed);
Instance MakeCut(int n_vertices, std::vector<WeightedEdge> edges,
                 double p_one = 0.5);

// Coverage plus a random cut over the same items.
Instance GenerateMixed(int n_sensors, int n_targets, double coverage_density,
                       double p_normal, double edge_probability,
                       double max_weight, std::uint64_t seed);

// One sensor covering two targets when normal, Pr[normal] = p_normal.
Instance OneSensorToy(double p_normal = 0.5);
// Unit-weight triangle cut.
Instance TriangleCut(double p_one = 0.5);
// f(S) = |S|^2 over n binary items.
Instance SquaredCardinality(int n, double p_one = 0.5);

}  // namespace adasub

#endif  // ADASUB_OBJECTIVES_H_
