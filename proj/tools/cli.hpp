// Copyright 2026 The mpilat Authors
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


#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace mpilat::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kMalformed = 2;
inline constexpr int kNotUnitary = 3;
inline constexpr int kResidual = 4;
inline constexpr int kCapacity = 5;
}  // namespace exit_code

/// Runs one command line (without the program name). Documents go to `out`
/// unless `--out` names a file; diagnostics go to `err`. A target or input
/// path of `-` reads `in`.
int run(const std::vector<std::string> &args, std::ostream &out = std::cout,
        std::ostream &err = std::cerr, std::istream &in = std::cin);

}  // namespace mpilat::cli
