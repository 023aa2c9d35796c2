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

// Seeded random streams. One experiment seed fans out into independent
// streams by hashing a label and an index, so that parallel or reordered
// consumers never share state.

#ifndef ADASUB_RNG_H_
#define ADASUB_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "adasub/core.h"

namespace adasub {

using Rng = std::mt19937_64;

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index = 0);
Rng MakeRng(std::uint64_t seed, std::string_view label,
            std::uint64_t index = 0);

// Uniform in [0, n).
int UniformIndex(int n, Rng& rng);
// Uniform real in (0, hi].
double UniformOpenClosed(double hi, Rng& rng);
// `count` distinct elements of `universe`, uniformly, in sampled order.
std::vector<ItemId> SampleWithoutReplacement(std::span<const ItemId> universe,
                                             int count, Rng& rng);

}  // namespace adasub

#endif  // ADASUB_RNG_H_
