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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mpilat/generators.hpp"
#include "mpilat/lattice.hpp"
#include "mpilat/matrix.hpp"
#include "mpilat/solver.hpp"

namespace mpilat {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const CMatrix &m);
/// Throws ParseError on missing fields, wrong sizes or non-numeric entries.
CMatrix matrix_from_json(const Json &j);

/// {"d": d, "theta": {"j,k": v}, "phi": {"j,k": v}} with 1-based keys.
Json params_to_json(const LatticeParams &p);
/// Accepts any document with those three fields, so a decomposition result
/// can be fed back in unchanged. Missing nodes default to 0.
LatticeParams params_from_json(const Json &j);

/// Parameter fields at top level plus R, x, y, blocked_jumps, z_modulus,
/// residual and tolerance.
Json result_to_json(const DecompositionResult &r);

/// Basis labels and every generator matrix of the set.
Json genset_to_json(const GeneratorSet &g);

/// "j,k" <-> (j, k).
std::string pair_key(int j, int k);
PortPair parse_pair_key(std::string_view key);

/// Parses text as JSON, wrapping syntax errors in ParseError.
Json parse_json(std::string_view text);

}  // namespace mpilat
