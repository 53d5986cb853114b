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

// Linear erasure codes over GF(2^8): Cauchy generator matrices, their
// systematic form, and byte-wise encode/decode.
//
// A k x n generator holds one coding vector per column. Combination j of k
// equal-length payloads is sum_i M[i][j] * data[i], computed independently
// for every byte position.

#ifndef MFP_CODING_H_
#define MFP_CODING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfp/gf256.h"

namespace mfp {

using Payload = std::vector<gf256::Symbol>;

enum class MatrixFlavor { kCauchy, kSystematic };

struct CodingMatrix {
  int rows = 0;  // k
  int cols = 0;  // n
  MatrixFlavor flavor = MatrixFlavor::kCauchy;
  std::vector<gf256::Symbol> entries;  // row-major

  gf256::Symbol at(int r, int c) const { return entries[r * cols + c]; }
  gf256::Symbol& at(int r, int c) { return entries[r * cols + c]; }
  std::vector<gf256::Symbol> Column(int c) const;

  bool operator==(const CodingMatrix&) const = default;
};

// Entry (i, j) = 1 / (x_i + y_j) with x_i = i and y_j = k + offset + j.
// Throws std::invalid_argument unless 1 <= k, 0 <= n, 0 <= offset and
// k + n + offset <= 256.
CodingMatrix CauchyMatrix(int k, int n, int offset = 0);

// M_k^{-1} * M where M_k is the leading k x k block: yields (I_k | M'_e).
// Throws std::invalid_argument if M has fewer columns than rows or the
// leading block is singular.
CodingMatrix SystematicTransform(const CodingMatrix& m);

// Systematic generator for a decoding node that forwards k data units and
// receives e extra combinations:
//   k == 1: every column is 1 (plain copies);
//   e == 1: (I_k | 1...1), the extra column is the sum of all data units;
//   otherwise the systematic transform of CauchyMatrix(k, k + e).
CodingMatrix ProtectionMatrix(int k, int e);

// Square matrix inverse over GF(2^8), row-major; nullopt if singular.
std::optional<std::vector<gf256::Symbol>> Invert(
    std::span<const gf256::Symbol> square, int size);
bool IsInvertible(std::span<const gf256::Symbol> square, int size);

// Every square submatrix (all sizes, all row/column choices) invertible.
// Exhaustive: intended for k + n <= 8 or so.
bool AllSquareSubmatricesInvertible(const CodingMatrix& m);
// Every k x k submatrix formed from k columns is invertible (MDS).
bool AllMaximalMinorsInvertible(const CodingMatrix& m);

// data.size() must equal m.rows and all payloads must share one length;
// throws std::invalid_argument otherwise.
std::vector<Payload> Encode(std::span<const Payload> data,
                            const CodingMatrix& m);

struct Combination {
  int column;       // generator column that produced it
  Payload payload;
};

// Recovers the k data payloads from exactly k combinations with distinct
// column indices. Throws std::invalid_argument on malformed input and
// std::logic_error if the selected columns are singular.
std::vector<Payload> Decode(std::span<const Combination> received,
                            const CodingMatrix& m);

// A received symbol vector with an explicit coefficient vector over the k
// data units (used where coefficients are masked by reachability).
struct CodedSymbol {
  std::vector<gf256::Symbol> coefficients;  // length k
  Payload payload;
};

// Returns, per data unit, its payload when the unit vector e_i lies in the
// span of the received coefficient vectors, or nullopt otherwise.
std::vector<std::optional<Payload>> RecoverSolvable(
    std::span<const CodedSymbol> received, int k);

// Which data units are solvable from the given coefficient vectors.
std::vector<bool> SolvableUnits(
    std::span<const std::vector<gf256::Symbol>> vectors, int k);
int Rank(std::span<const std::vector<gf256::Symbol>> vectors, int k);

// "k n flavor" header followed by one line of space-separated two-digit hex
// entries per row.
std::string DumpMatrix(const CodingMatrix& m);
CodingMatrix ParseMatrixDump(std::string_view text);

}  // namespace mfp

#endif  // MFP_CODING_H_
