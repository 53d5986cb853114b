// Copyright 2026 The maxflow-protection Authors.
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

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mfp/coding.h"
#include "mfp/gf256.h"

namespace mfp {
namespace {

using gf256::Symbol;

TEST_CASE("field axioms hold for every element") {
  for (int a = 0; a < 256; ++a) {
    const Symbol x = static_cast<Symbol>(a);
    CHECK(gf256::Mul(x, 1) == x);
    CHECK(gf256::Mul(x, 0) == 0);
    CHECK(gf256::Add(x, x) == 0);
    if (a != 0) CHECK(gf256::Mul(x, gf256::Inv(x)) == 1);
  }
  for (int a = 1; a < 256; a += 7) {
    for (int b = 1; b < 256; b += 11) {
      const Symbol x = static_cast<Symbol>(a);
      const Symbol y = static_cast<Symbol>(b);
      CHECK(gf256::Mul(x, y) == gf256::Mul(y, x));
      CHECK(gf256::Div(gf256::Mul(x, y), y) == x);
    }
  }
}

TEST_CASE("a 4 x 6 Cauchy matrix has every 4 x 4 minor invertible") {
  const CodingMatrix m = CauchyMatrix(4, 6);
  CHECK(AllMaximalMinorsInvertible(m));
  CHECK(AllSquareSubmatricesInvertible(m));
}

TEST_CASE("systematic transform starts with the identity") {
  const CodingMatrix s = SystematicTransform(CauchyMatrix(3, 5));
  CHECK(s.flavor == MatrixFlavor::kSystematic);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(s.at(i, j) == (i == j ? 1 : 0));
  }
  CHECK(AllMaximalMinorsInvertible(s));
}

TEST_CASE("protection matrix special cases") {
  const CodingMatrix parity = ProtectionMatrix(3, 1);
  for (int i = 0; i < 3; ++i) CHECK(parity.at(i, 3) == 1);
  const CodingMatrix copies = ProtectionMatrix(1, 3);
  for (int j = 0; j < 4; ++j) CHECK(copies.at(0, j) == 1);
  CHECK(AllMaximalMinorsInvertible(ProtectionMatrix(4, 3)));
}

TEST_CASE("constructor arguments are validated") {
  CHECK_THROWS_AS(CauchyMatrix(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(CauchyMatrix(200, 100), std::invalid_argument);
  CHECK_THROWS_AS(CauchyMatrix(2, 2, 300), std::invalid_argument);
  CHECK_THROWS_AS(SystematicTransform(CauchyMatrix(4, 2)),
                  std::invalid_argument);
}

TEST_CASE("encode then decode from parity columns") {
  const CodingMatrix m = ProtectionMatrix(3, 2);
  const std::vector<Payload> data = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::vector<Payload> combos = Encode(data, m);
  CHECK(combos[0] == data[0]);
  const std::vector<Combination> received = {
      {1, combos[1]}, {3, combos[3]}, {4, combos[4]}};
  CHECK(Decode(received, m) == data);
}

TEST_CASE("decode rejects malformed input") {
  const CodingMatrix m = ProtectionMatrix(2, 1);
  const std::vector<Payload> data = {{1}, {2}};
  const auto combos = Encode(data, m);
  const std::vector<Combination> repeated = {{0, combos[0]}, {0, combos[0]}};
  CHECK_THROWS(Decode(repeated, m));
  const std::vector<Combination> too_few = {{0, combos[0]}};
  CHECK_THROWS_AS(Decode(too_few, m), std::invalid_argument);
  const std::vector<Payload> ragged = {{1, 2}, {3}};
  CHECK_THROWS_AS(Encode(ragged, m), std::invalid_argument);
}

TEST_CASE("solvable units follow the span of masked vectors") {
  // Units 0 and 1 only appear together; unit 2 appears alone.
  const std::vector<std::vector<Symbol>> vectors = {{1, 1, 0}, {0, 0, 5}};
  const std::vector<bool> solvable = SolvableUnits(vectors, 3);
  CHECK(solvable == std::vector<bool>{false, false, true});
  CHECK(Rank(vectors, 3) == 2);
  const std::vector<CodedSymbol> received = {{{1, 1, 0}, {3}},
                                             {{0, 0, 5}, {gf256::Mul(5, 9)}}};
  const auto out = RecoverSolvable(received, 3);
  CHECK_FALSE(out[0].has_value());
  REQUIRE(out[2].has_value());
  CHECK((*out[2])[0] == 9);
}

TEST_CASE("matrix dump round-trips") {
  const CodingMatrix m = ProtectionMatrix(3, 3);
  const std::string text = DumpMatrix(m);
  CHECK(text.rfind("3 6 systematic", 0) == 0);
  CHECK(ParseMatrixDump(text) == m);
  CHECK(DumpMatrix(CauchyMatrix(2, 3)).rfind("2 3 cauchy", 0) == 0);
}

TEST_CASE("random payloads decode from every k-subset") {
  std::mt19937 rng(3);
  const int k = 3;
  const int e = 3;
  const CodingMatrix m = ProtectionMatrix(k, e);
  std::vector<Payload> data(k, Payload(32));
  for (auto& p : data) {
    for (auto& b : p) b = static_cast<Symbol>(rng());
  }
  const auto combos = Encode(data, m);
  int subsets = 0;
  for (int mask = 0; mask < 1 << (k + e); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != k) continue;
    std::vector<Combination> received;
    for (int c = 0; c < k + e; ++c) {
      if (mask >> c & 1) received.push_back({c, combos[c]});
    }
    CHECK(Decode(received, m) == data);
    ++subsets;
  }
  CHECK(subsets == 20);
}

}  // namespace
}  // namespace mfp
