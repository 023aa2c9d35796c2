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
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "adasub/analysis.h"
#include "adasub/errors.h"

namespace adasub {
namespace {

// Digit 0 means unobserved, digit d > 0 means state d - 1.
std::int64_t Encode(const PartialRealization& psi, std::span<const int> alphabets) {
  std::int64_t code = 0;
  std::vector<int> digits(alphabets.size(), 0);
  for (const auto& [e, s] : psi.observations()) digits[e] = s + 1;
  for (std::size_t e = 0; e < alphabets.size(); ++e) {
    code = code * (alphabets[e] + 1) + digits[e];
  }
  return code;
}

void RequireWork(double work, const EnumerationLimits& limits,
                 const std::string& what) {
  if (work > static_cast<double>(limits.max_branches)) {
    throw EnumerationCapError(what + " needs about " +
                              std::to_string(static_cast<std::int64_t>(work)) +
                              " evaluations, above the cap of " +
                              std::to_string(limits.max_branches));
  }
}

std::string FormatItems(std::span<const ItemId> items) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << (i ? "," : "") << items[i];
  }
  out << "}";
  return out.str();
}

std::string FormatPartial(const PartialRealization& psi) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [e, s] : psi.Canonical()) {
    out << (first ? "" : ",") << e << ":" << s;
    first = false;
  }
  out << "}";
  return out.str();
}

// Every psi together with Delta(e | psi) for each real item (0 if observed).
struct DeltaTable {
  std::vector<PartialRealization> partials;
  std::vector<std::vector<double>> delta;
  std::unordered_map<std::int64_t, int> index;
};

DeltaTable BuildDeltaTable(const Instance& instance,
                           const EnumerationLimits& limits) {
  DeltaTable table;
  table.partials = EnumeratePartialRealizations(instance, limits);
  ValueOracle oracle(instance, OracleMode::Exact(), limits);
  const int n = instance.n();
  for (int i = 0; i < static_cast<int>(table.partials.size()); ++i) {
    const PartialRealization& psi = table.partials[i];
    table.index.emplace(Encode(psi, instance.prior.alphabets()), i);
    std::vector<double> row(n, 0.0);
    for (ItemId e = 0; e < n; ++e) {
      if (!psi.Contains(e)) row[e] = oracle.MarginalItem(e, psi);
    }
    table.delta.push_back(std::move(row));
  }
  return table;
}

// Invokes visit(sub) for every subrealization of psi, including psi itself.
template <typename Visit>
void ForEachSubrealization(const PartialRealization& psi, Visit visit) {
  const auto obs = psi.Canonical();
  const std::uint32_t count = 1u << obs.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    PartialRealization sub;
    for (std::size_t j = 0; j < obs.size(); ++j) {
      if (mask & (1u << j)) sub.Add(obs[j].first, obs[j].second);
    }
    visit(sub);
  }
}

std::vector<ItemId> MaskItems(std::uint32_t mask, int n) {
  std::vector<ItemId> items;
  for (ItemId e = 0; e < n; ++e) {
    if (mask & (1u << e)) items.push_back(e);
  }
  return items;
}

}  // namespace

std::string ViolationReport::Describe() const {
  std::ostringstream out;
  out << property << " violated:";
  if (phi) {
    out << " phi=(";
    for (int e = 0; e < phi->size(); ++e) out << (e ? "," : "") << phi->state(e);
    out << ")";
  }
  if (!smaller_set.empty() || !larger_set.empty() || phi) {
    out << " S1=" << FormatItems(smaller_set)
        << " S2=" << FormatItems(larger_set);
  }
  if (!phi) {
    out << " psi=" << FormatPartial(psi);
    if (!psi_prime.empty()) out << " psi'=" << FormatPartial(psi_prime);
  }
  if (!allowed.empty()) out << " V=" << FormatItems(allowed) << " a=" << budget;
  if (item) out << " e=" << *item;
  out << " lhs=" << lhs << " rhs=" << rhs << " margin=" << margin;
  return out.str();
}

std::vector<PartialRealization> EnumeratePartialRealizations(
    const Instance& instance, const EnumerationLimits& limits) {
  const std::span<const int> alphabets = instance.prior.alphabets();
  const int n = static_cast<int>(alphabets.size());
  instance.prior.RequireEnumerable(limits);
  double total = 1.0;
  for (int a : alphabets) total *= a + 1;
  RequireWork(total, limits, "enumerating partial realizations");

  std::vector<PartialRealization> result;
  std::vector<int> digits(n, 0);
  while (true) {
    PartialRealization psi;
    for (ItemId e = 0; e < n; ++e) {
      if (digits[e] > 0) psi.Add(e, digits[e] - 1);
    }
    if (instance.prior.ProbabilityOf(psi) > 0.0) result.push_back(std::move(psi));
    int pos = n - 1;
    while (pos >= 0 && ++digits[pos] > alphabets[pos]) digits[pos--] = 0;
    if (pos < 0) break;
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const PartialRealization& a, const PartialRealization& b) {
                     return a.size() < b.size();
                   });
  return result;
}

std::vector<ViolationReport> CheckAdaptiveMonotonicity(
    const Instance& instance, const EnumerationLimits& limits) {
  const DeltaTable table = BuildDeltaTable(instance, limits);
  std::vector<ViolationReport> violations;
  for (std::size_t i = 0; i < table.partials.size(); ++i) {
    for (ItemId e = 0; e < instance.n(); ++e) {
      if (table.partials[i].Contains(e)) continue;
      const double delta = table.delta[i][e];
      if (delta < -kViolationTolerance) {
        ViolationReport v;
        v.property = "adaptive monotonicity";
        v.psi = table.partials[i];
        v.item = e;
        v.lhs = delta;
        v.rhs = 0.0;
        v.margin = -delta;
        violations.push_back(std::move(v));
      }
    }
  }
  return violations;
}

std::vector<ViolationReport> CheckAdaptiveSubmodularity(
    const Instance& instance, const EnumerationLimits& limits) {
  const DeltaTable table = BuildDeltaTable(instance, limits);
  double work = 0.0;
  for (const auto& psi : table.partials) work += std::ldexp(1.0, psi.size());
  RequireWork(work * instance.n(), limits, "adaptive submodularity check");

  std::vector<ViolationReport> violations;
  const auto alphabets = instance.prior.alphabets();
  for (std::size_t j = 0; j < table.partials.size(); ++j) {
    const PartialRealization& larger = table.partials[j];
    ForEachSubrealization(larger, [&](const PartialRealization& smaller) {
      if (smaller.size() == larger.size()) return;
      const int i = table.index.at(Encode(smaller, alphabets));
      for (ItemId e = 0; e < instance.n(); ++e) {
        if (larger.Contains(e)) continue;
        const double lhs = table.delta[i][e];
        const double rhs = table.delta[j][e];
        if (lhs < rhs - kViolationTolerance) {
          ViolationReport v;
          v.property = "adaptive submodularity";
          v.psi = smaller;
          v.psi_prime = larger;
          v.item = e;
          v.lhs = lhs;
          v.rhs = rhs;
          v.margin = rhs - lhs;
          violations.push_back(std::move(v));
        }
      }
    });
  }
  return violations;
}

std::vector<ViolationReport> CheckPointwiseSubmodularity(
    const Instance& instance, const EnumerationLimits& limits) {
  const int n = instance.n();
  if (n > 20) throw EnumerationCapError("pointwise check needs n <= 20");
  const auto realizations =
      ConditionalRealizations(instance.prior, {}).Enumerate(limits);
  RequireWork(static_cast<double>(realizations.size()) * std::pow(3.0, n) * n,
              limits, "pointwise submodularity check");

  std::vector<ViolationReport> violations;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<double> f(full + 1);
  for (const auto& [phi, p] : realizations) {
    if (p <= 0.0) continue;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      f[mask] = instance.Evaluate(MaskItems(mask, n), phi);
    }
    for (std::uint32_t s2 = 0; s2 <= full; ++s2) {
      // Walk every s1 contained in s2.
      for (std::uint32_t s1 = s2;; s1 = (s1 - 1) & s2) {
        for (ItemId e = 0; e < n; ++e) {
          const std::uint32_t bit = 1u << e;
          if (s2 & bit) continue;
          const double lhs = f[s1 | bit] - f[s1];
          const double rhs = f[s2 | bit] - f[s2];
          if (lhs < rhs - kViolationTolerance) {
            ViolationReport v;
            v.property = "pointwise submodularity";
            v.phi = phi;
            v.smaller_set = MaskItems(s1, n);
            v.larger_set = MaskItems(s2, n);
            v.item = e;
            v.lhs = lhs;
            v.rhs = rhs;
            v.margin = rhs - lhs;
            violations.push_back(std::move(v));
          }
        }
        if (s1 == 0) break;
      }
    }
  }
  return violations;
}

std::vector<ViolationReport> CheckFullyAdaptiveSubmodularity(
    const Instance& instance, int max_a, const EnumerationLimits& limits) {
  if (max_a < 1) throw InvalidInputError("max_a must be >= 1");
  const int n = instance.n();
  if (n > 20) throw EnumerationCapError("fully adaptive check needs n <= 20");
  const auto partials = EnumeratePartialRealizations(instance, limits);
  double pairs = 0.0;
  for (const auto& psi : partials) pairs += std::ldexp(1.0, psi.size());
  RequireWork(pairs * std::ldexp(1.0, n) * max_a, limits,
              "fully adaptive submodularity check");

  ValueOracle oracle(instance, OracleMode::Exact(), limits);
  const auto alphabets = instance.prior.alphabets();
  std::unordered_map<std::int64_t, int> index;
  std::vector<double> base(partials.size());
  for (int i = 0; i < static_cast<int>(partials.size()); ++i) {
    index.emplace(Encode(partials[i], alphabets), i);
    base[i] = oracle.ConditionalValue(partials[i].Domain(), partials[i]);
  }

  std::vector<ViolationReport> violations;
  for (std::uint32_t v_mask = 1; v_mask < (1u << n); ++v_mask) {
    const std::vector<ItemId> allowed = MaskItems(v_mask, n);
    const int a_max = std::min<int>(max_a, allowed.size());
    for (int a = 1; a <= a_max; ++a) {
      // gain[i] = max over Omega(V, a) of Delta(pi | psi_i).
      std::vector<double> gain(partials.size());
      for (std::size_t i = 0; i < partials.size(); ++i) {
        gain[i] = RestrictedPolicyValue(instance, allowed, a, partials[i],
                                        limits) -
                  base[i];
      }
      for (std::size_t j = 0; j < partials.size(); ++j) {
        const PartialRealization& larger = partials[j];
        ForEachSubrealization(larger, [&](const PartialRealization& smaller) {
          if (smaller.size() == larger.size()) return;
          const int i = index.at(Encode(smaller, alphabets));
          if (gain[i] < gain[j] - kViolationTolerance) {
            ViolationReport v;
            v.property = "fully adaptive submodularity";
            v.psi = smaller;
            v.psi_prime = larger;
            v.allowed = allowed;
            v.budget = a;
            v.lhs = gain[i];
            v.rhs = gain[j];
            v.margin = gain[j] - gain[i];
            violations.push_back(std::move(v));
          }
        });
      }
    }
  }
  return violations;
}

}  // namespace adasub
