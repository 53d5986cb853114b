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

// GF(2^8) with reducing polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11D).

#ifndef MFP_GF256_H_
#define MFP_GF256_H_

#include <array>
#include <cstdint>
#include <stdexcept>

namespace mfp::gf256 {

using Symbol = std::uint8_t;

inline constexpr unsigned kPolynomial = 0x11D;

namespace internal {

struct Tables {
  std::array<Symbol, 512> exp{};
  std::array<int, 256> log{};
};

constexpr Tables MakeTables() {
  Tables t;
  unsigned x = 1;
  for (int i = 0; i < 255; ++i) {
    t.exp[i] = static_cast<Symbol>(x);
    t.log[x] = i;
    x <<= 1;
    if (x & 0x100) x ^= kPolynomial;
  }
  // Doubled so Mul can index log[a] + log[b] without a modulo.
  for (int i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
  t.log[0] = -1;
  return t;
}

inline constexpr Tables kTables = MakeTables();

}  // namespace internal

constexpr Symbol Add(Symbol a, Symbol b) { return a ^ b; }
constexpr Symbol Sub(Symbol a, Symbol b) { return a ^ b; }

constexpr Symbol Mul(Symbol a, Symbol b) {
  if (a == 0 || b == 0) return 0;
  return internal::kTables.exp[internal::kTables.log[a] +
                               internal::kTables.log[b]];
}

inline Symbol Inv(Symbol a) {
  if (a == 0) throw std::domain_error("gf256::Inv: zero has no inverse");
  return internal::kTables.exp[255 - internal::kTables.log[a]];
}

inline Symbol Div(Symbol a, Symbol b) { return Mul(a, Inv(b)); }

}  // namespace mfp::gf256

#endif  // MFP_GF256_H_
