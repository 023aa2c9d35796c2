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

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <cstdlib>
#include <iostream>

#include "adasub/verify.h"

int main(int argc, char** argv) {
  adasub::VerifyOptions options;
  options.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  options.jobs = 4;
  int failed = 0;
  for (const auto& result : adasub::RunSuite("all", options)) {
    adasub::PrintResult(result, /*verbose=*/false, std::cout);
    std::cout.flush();
    if (!result.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
