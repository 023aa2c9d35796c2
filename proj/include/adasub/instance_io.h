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

// Instance files: UTF-8 JSON documents (comments allowed).
//
//   {
//     "version": 1,
//     "items": 2,
//     "states": [[{"label": "failure", "probability": 0.5},
//                 {"label": "normal", "probability": 0.5}], ...],
//     "objective": {"type": "coverage", "targets": 2,
//                   "covers": [[[], [0, 1]], ...]},
//     "matroid": {"blocks": [[0], [1]], "limits": [1, 1]}
//   }
//
// Instead of "states", a correlated prior may be given as
//   "joint": [{"assignment": [0, 1], "probability": 0.3}, ...]
// with an optional "alphabets": [2, 2].
//
// Objective types: coverage {targets, covers}, cut {edges: [[u, v, w]]},
// sum {parts: [objective, ...]}, squared_cardinality {}.

#ifndef ADASUB_INSTANCE_IO_H_
#define ADASUB_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "adasub/objectives.h"

namespace adasub {

// Throws ParseError (with line/column or field path) or ValidationError.
Instance LoadInstance(const std::string& path);
Instance ParseInstance(std::string_view text,
                       std::string_view source = "<memory>");

std::string SerializeInstance(const Instance& instance);
void SaveInstance(const Instance& instance, const std::string& path);

}  // namespace adasub

#endif  // ADASUB_INSTANCE_IO_H_
