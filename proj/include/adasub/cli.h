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

// Command-line front end: `adasub run | verify | generate`.
//
// Exit codes: 0 success, 1 invalid configuration, 2 enumeration cap hit,
// 3 a verify check failed.

#ifndef ADASUB_CLI_H_
#define ADASUB_CLI_H_

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "adasub/objectives.h"

namespace adasub {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitEnumerationCap = 2;
inline constexpr int kExitVerifyFailed = 3;

inline constexpr std::string_view kCsvHeader =
    "instance,policy,k,epsilon,seed,trials,mode,favg,stderr,queries_mean,"
    "wall_ms";

// Builds an instance from a generator kind (coverage, cut, mixed) and
// key=value parameters. Unknown keys raise InvalidInputError.
Instance GenerateFromSpec(std::string_view kind,
                          const std::map<std::string, std::string>& params,
                          std::uint64_t seed);

// Resolves --instance: a file path, "fixture:<name>", or
// "gen:<kind>[,key=value...]".
Instance ResolveInstance(const std::string& source, std::uint64_t seed);

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace adasub

#endif  // ADASUB_CLI_H_
