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

#include "mpilat/json_io.hpp"

#include <charconv>
#include <sstream>

#include "mpilat/errors.hpp"
#include "mpilat/targets.hpp"

namespace mpilat {

namespace {

double number(const Json &v, const char *what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  return v.get<double>();
}

int positive_int(const Json &doc, const char *field) {
  if (!doc.contains(field) || !doc.at(field).is_number_integer())
    throw ParseError(std::string("field '") + field + "' must be an integer");
  const auto v = doc.at(field).get<long long>();
  if (v < 1 || v > 1'000'000)
    throw ParseError(std::string("field '") + field + "' must be positive");
  return static_cast<int>(v);
}

Json pair_map(const std::map<PortPair, double> &m) {
  Json out = Json::object();
  for (const auto &[key, v] : m) out[pair_key(key.first, key.second)] = v;
  return out;
}

Json matrix_map(const GeneratorSet &g, const CMatrix &(GeneratorSet::*get)(int, int) const) {
  Json out = Json::object();
  for (int j = 1; j <= g.ports(); ++j)
    for (int k = j + 1; k <= g.ports(); ++k)
      out[pair_key(j, k)] = matrix_to_json((g.*get)(j, k));
  return out;
}

}  // namespace

std::string pair_key(int j, int k) {
  return std::to_string(j) + "," + std::to_string(k);
}

PortPair parse_pair_key(std::string_view key) {
  const auto comma = key.find(',');
  auto parse = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("malformed lattice key '" + std::string(key) + "'");
    return v;
  };
  if (comma == std::string_view::npos)
    throw ParseError("malformed lattice key '" + std::string(key) + "'");
  return {parse(key.substr(0, comma)), parse(key.substr(comma + 1))};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json matrix_to_json(const CMatrix &m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const Json &j) {
  if (!j.is_object()) throw ParseError("matrix document must be a JSON object");
  const int rows = positive_int(j, "rows");
  const int cols = positive_int(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array())
    throw ParseError("field 'data' must be an array of [re, im] pairs");
  const Json &data = j.at("data");
  if (data.size() != static_cast<std::size_t>(rows) * cols) {
    std::ostringstream msg;
    msg << "field 'data' has " << data.size() << " entries, expected " << rows << "x"
        << cols;
    throw ParseError(msg.str());
  }
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Json &e = data.at(static_cast<std::size_t>(r) * cols + c);
      if (!e.is_array() || e.size() != 2)
        throw ParseError("matrix entries must be [re, im] pairs");
      m(r, c) = Complex(number(e[0], "real part"), number(e[1], "imaginary part"));
    }
  }
  return m;
}

Json params_to_json(const LatticeParams &p) {
  Json theta = Json::object(), phi = Json::object();
  for (int k = 1; k <= p.d(); ++k) {
    for (int j = 1; j <= k; ++j) {
      if (j < k) theta[pair_key(j, k)] = p.theta(j, k);
      phi[pair_key(j, k)] = p.phi(j, k);
    }
  }
  return {{"d", p.d()}, {"theta", std::move(theta)}, {"phi", std::move(phi)}};
}

LatticeParams params_from_json(const Json &j) {
  if (!j.is_object()) throw ParseError("parameter document must be a JSON object");
  LatticeParams p(positive_int(j, "d"));
  auto load = [&](const char *field, auto setter) {
    if (!j.contains(field)) return;
    if (!j.at(field).is_object())
      throw ParseError(std::string("field '") + field + "' must be an object");
    for (const auto &[key, v] : j.at(field).items()) {
      const auto [a, b] = parse_pair_key(key);
      try {
        (p.*setter)(a, b, number(v, field));
      } catch (const PreconditionError &e) {
        throw ParseError(std::string(field) + " key '" + key + "': " + e.what());
      }
    }
  };
  load("theta", &LatticeParams::set_theta);
  load("phi", &LatticeParams::set_phi);
  return p;
}

Json result_to_json(const DecompositionResult &r) {
  Json out = params_to_json(r.params);
  out["R"] = pair_map(r.grid.r);
  out["x"] = pair_map(r.grid.x);
  out["y"] = pair_map(r.grid.y);
  Json jumps = Json::object();
  for (const auto &[k, b] : r.blocked_jumps) jumps[std::to_string(k)] = b;
  out["blocked_jumps"] = std::move(jumps);
  out["z_modulus"] = pair_map(r.z_modulus);
  out["residual"] = r.residual;
  out["tolerance"] = r.tolerance;
  return out;
}

Json genset_to_json(const GeneratorSet &g) {
  Json basis = Json::array();
  for (Eigen::Index i = 0; i < g.dim(); ++i)
    basis.push_back(state_label(state_at(g, static_cast<std::size_t>(i))));
  Json e = Json::object(), z = Json::object();
  for (int k = 1; k <= g.ports(); ++k) e[std::to_string(k)] = matrix_to_json(g.e(k));
  for (int k = 1; k < g.ports(); ++k) z[std::to_string(k)] = matrix_to_json(g.z(k));
  Json out = {{"spec", g.spec().to_string()},
              {"d", g.ports()},
              {"dim", g.dim()},
              {"basis", std::move(basis)},
              {"Y", matrix_map(g, &GeneratorSet::y)},
              {"X", matrix_map(g, &GeneratorSet::x)},
              {"perm", matrix_map(g, &GeneratorSet::perm)},
              {"E", std::move(e)},
              {"Z", std::move(z)}};
  if (g.has_eta()) out["eta"] = matrix_map(g, &GeneratorSet::eta);
  return out;
}

}  // namespace mpilat
