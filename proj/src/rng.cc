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

#include "adasub/rng.h"

#include "adasub/errors.h"

namespace adasub {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index) {
  return SplitMix64(SplitMix64(seed ^ Fnv1a(label)) + index);
}

Rng MakeRng(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  return Rng(DeriveSeed(seed, label, index));
}

int UniformIndex(int n, Rng& rng) {
  if (n <= 0) throw InvalidInputError("UniformIndex: empty range");
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

double UniformOpenClosed(double hi, Rng& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return hi * (1.0 - u);
}

std::vector<ItemId> SampleWithoutReplacement(std::span<const ItemId> universe,
                                             int count, Rng& rng) {
  const int n = static_cast<int>(universe.size());
  if (count < 0 || count > n) {
    throw InvalidInputError("sample size " + std::to_string(count) +
                            " outside [0, " + std::to_string(n) + "]");
  }
  // Partial Fisher-Yates.
  std::vector<ItemId> pool(universe.begin(), universe.end());
  for (int i = 0; i < count; ++i) {
    const int j = i + UniformIndex(n - i, rng);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace adasub
