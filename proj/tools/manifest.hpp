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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpilat/json_io.hpp"

namespace mpilat::cli {

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

struct InputDigest {
  std::string path;
  std::string sha256;
};

/// Provenance block embedded in every output document.
struct RunManifest {
  std::string command;
  std::vector<InputDigest> inputs;
  std::map<std::string, double> tolerances;
  std::string version;
  /// Only recorded on request so repeated runs stay byte-identical.
  std::optional<double> wall_clock_s;

  Json to_json() const;
  /// `# key: value` comment lines for text output.
  std::string to_text() const;
};

}  // namespace mpilat::cli
