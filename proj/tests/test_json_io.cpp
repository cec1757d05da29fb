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

#include <random>

#include "doctest.h"
#include "mpilat/errors.hpp"
#include "mpilat/json_io.hpp"
#include "mpilat/targets.hpp"
#include "support/oracles.hpp"

using namespace mpilat;

TEST_CASE("matrix documents round trip bit for bit") {
  std::mt19937_64 rng(1);
  const CMatrix u = testing::haar_unitary(5, rng);
  const Json doc = matrix_to_json(u);
  CHECK(doc.at("rows") == 5);
  CHECK(doc.at("cols") == 5);
  CHECK(doc.at("data").size() == 25);
  const CMatrix back = matrix_from_json(parse_json(doc.dump()));
  CHECK((back - u).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix layout is row-major") {
  CMatrix m(2, 3);
  m << 1.0, 2.0, 3.0, 4.0, 5.0, Complex(6.0, -1.0);
  const Json doc = matrix_to_json(m);
  CHECK(doc.at("data")[1][0] == 2.0);
  CHECK(doc.at("data")[3][0] == 4.0);
  CHECK(doc.at("data")[5][1] == -1.0);
}

TEST_CASE("malformed matrix documents") {
  for (const char *text : {
           R"([1,2])",
           R"({"rows":2,"cols":2})",
           R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0]]})",
           R"({"rows":1,"cols":1,"data":[[1]]})",
           R"({"rows":1,"cols":1,"data":[["a",0]]})",
           R"({"rows":0,"cols":1,"data":[]})",
           R"({"rows":1.5,"cols":1,"data":[[1,0]]})",
       })
    CHECK_THROWS_AS(matrix_from_json(parse_json(text)), ParseError);
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("parameter documents") {
  std::mt19937_64 rng(2);
  const LatticeParams p = random_params(4, rng);
  const Json doc = params_to_json(p);
  CHECK(doc.at("d") == 4);
  CHECK(doc.at("theta").size() == 6);
  CHECK(doc.at("phi").size() == 10);
  CHECK(doc.at("theta").contains("1,4"));
  const LatticeParams back = params_from_json(parse_json(doc.dump()));
  for (const auto &[key, t] : p.thetas()) CHECK(back.theta(key.first, key.second) == t);
  for (const auto &[key, v] : p.phis()) CHECK(back.phi(key.first, key.second) == v);

  CHECK_THROWS_AS(params_from_json(parse_json(R"({"theta":{}})")), ParseError);
  CHECK_THROWS_AS(params_from_json(parse_json(R"({"d":3,"theta":{"2,2":0.1}})")), ParseError);
  CHECK_THROWS_AS(params_from_json(parse_json(R"({"d":3,"theta":{"1-2":0.1}})")), ParseError);
  CHECK_THROWS_AS(params_from_json(parse_json(R"({"d":3,"phi":{"1,1":"x"}})")), ParseError);
  const LatticeParams sparse = params_from_json(parse_json(R"({"d":3,"theta":{"1,3":0.5}})"));
  CHECK(sparse.theta(1, 3) == 0.5);
  CHECK(sparse.theta(1, 2) == 0.0);
}

TEST_CASE("decomposition documents feed back as parameters") {
  const CMatrix f = dft(5);
  const DecompositionResult r = decompose(f);
  const Json doc = result_to_json(r);
  for (const char *key : {"d", "theta", "phi", "R", "x", "y", "blocked_jumps", "z_modulus",
                          "residual", "tolerance"})
    CHECK(doc.contains(key));
  const LatticeParams p = params_from_json(parse_json(doc.dump()));
  CHECK((assemble_unitary(p) - f).norm() <= 1e-9);
}

TEST_CASE("generator documents") {
  const Json doc = genset_to_json(GeneratorSet(ParticleSpec::fermions(2), 3));
  CHECK(doc.at("spec") == "2F");
  CHECK(doc.at("dim") == 3);
  CHECK(doc.at("basis")[0] == "|1,1,0>");
  CHECK(doc.at("Y").size() == 3);
  CHECK(doc.at("E").size() == 3);
  CHECK(doc.at("Z").size() == 2);
  CHECK(doc.contains("eta"));
  CHECK_FALSE(genset_to_json(GeneratorSet(ParticleSpec::bosons(2), 3)).contains("eta"));
}

TEST_CASE("lattice keys") {
  CHECK(pair_key(3, 12) == "3,12");
  CHECK(parse_pair_key("3,12") == PortPair{3, 12});
  for (const char *bad : {"3", "3,", ",4", "a,b", "1,2,3", " 1,2"})
    CHECK_THROWS_AS(parse_pair_key(bad), ParseError);
}
