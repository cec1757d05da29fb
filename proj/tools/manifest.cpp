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


#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <sstream>
#include <stdexcept>

namespace mpilat::cli {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

Json RunManifest::to_json() const {
  Json inputs_doc = Json::array();
  for (const auto &in : inputs) inputs_doc.push_back({{"path", in.path}, {"sha256", in.sha256}});
  Json doc = {{"command", command},
              {"inputs", std::move(inputs_doc)},
              {"tolerances", tolerances},
              {"version", version}};
  if (wall_clock_s) doc["wall_clock_s"] = *wall_clock_s;
  return doc;
}

std::string RunManifest::to_text() const {
  std::ostringstream os;
  os << "# mpilat " << version << " " << command << "\n";
  for (const auto &in : inputs) os << "# input " << in.path << " sha256:" << in.sha256 << "\n";
  for (const auto &[name, v] : tolerances) os << "# tolerance " << name << " = " << v << "\n";
  if (wall_clock_s) os << "# wall clock " << *wall_clock_s << " s\n";
  return os.str();
}

}  // namespace mpilat::cli
