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

#include "mfp/coding.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mfp {

using gf256::Symbol;

namespace {

// Row-reduces `rows` (each of width `width`) in place to reduced row echelon
// form and applies the same row operations to `track`. Returns pivot column
// per reduced row (the first `rank` rows are nonzero).
std::vector<int> ReduceRows(std::vector<std::vector<Symbol>>& rows,
                            std::vector<std::vector<Symbol>>* track,
                            int width) {
  std::vector<int> pivots;
  int next = 0;
  const int count = static_cast<int>(rows.size());
  for (int col = 0; col < width && next < count; ++col) {
    int pivot = -1;
    for (int r = next; r < count; ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[next]);
    if (track) std::swap((*track)[pivot], (*track)[next]);
    const Symbol scale = gf256::Inv(rows[next][col]);
    for (auto& v : rows[next]) v = gf256::Mul(v, scale);
    if (track) {
      for (auto& v : (*track)[next]) v = gf256::Mul(v, scale);
    }
    for (int r = 0; r < count; ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const Symbol factor = rows[r][col];
      for (int c = 0; c < width; ++c) {
        rows[r][c] ^= gf256::Mul(factor, rows[next][c]);
      }
      if (track) {
        auto& dst = (*track)[r];
        const auto& src = (*track)[next];
        for (size_t c = 0; c < dst.size(); ++c) {
          dst[c] ^= gf256::Mul(factor, src[c]);
        }
      }
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

void CheckPayloads(std::span<const Payload> data) {
  for (const Payload& p : data) {
    if (p.size() != data.front().size()) {
      throw std::invalid_argument("payloads differ in length");
    }
  }
}

// Calls visit(indices) for every size-`choose` subset of [0, n).
void ForEachSubset(int n, int choose,
                   const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(choose);
  for (int i = 0; i < choose; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    int i = choose - 1;
    while (i >= 0 && idx[i] == n - choose + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < choose; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Symbol> CodingMatrix::Column(int c) const {
  std::vector<Symbol> col(rows);
  for (int r = 0; r < rows; ++r) col[r] = at(r, c);
  return col;
}

CodingMatrix CauchyMatrix(int k, int n, int offset) {
  if (k < 1 || n < 0 || offset < 0 || k + n + offset > 256) {
    throw std::invalid_argument(
        "CauchyMatrix needs k >= 1 and k + n + offset <= 256");
  }
  CodingMatrix m{k, n, MatrixFlavor::kCauchy,
                 std::vector<Symbol>(static_cast<size_t>(k) * n)};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = gf256::Inv(static_cast<Symbol>(i ^ (k + offset + j)));
    }
  }
  return m;
}

std::optional<std::vector<Symbol>> Invert(std::span<const Symbol> square,
                                          int size) {
  std::vector<std::vector<Symbol>> rows(size, std::vector<Symbol>(size));
  std::vector<std::vector<Symbol>> track(size, std::vector<Symbol>(size, 0));
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) rows[r][c] = square[r * size + c];
    track[r][r] = 1;
  }
  if (static_cast<int>(ReduceRows(rows, &track, size).size()) != size) {
    return std::nullopt;
  }
  std::vector<Symbol> inverse(static_cast<size_t>(size) * size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) inverse[r * size + c] = track[r][c];
  }
  return inverse;
}

bool IsInvertible(std::span<const Symbol> square, int size) {
  std::vector<std::vector<Symbol>> rows(size, std::vector<Symbol>(size));
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) rows[r][c] = square[r * size + c];
  }
  return static_cast<int>(ReduceRows(rows, nullptr, size).size()) == size;
}

CodingMatrix SystematicTransform(const CodingMatrix& m) {
  const int k = m.rows;
  if (m.cols < k) {
    throw std::invalid_argument("SystematicTransform needs cols >= rows");
  }
  std::vector<Symbol> lead(static_cast<size_t>(k) * k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) lead[r * k + c] = m.at(r, c);
  }
  const auto inverse = Invert(lead, k);
  if (!inverse) {
    throw std::invalid_argument("leading block of generator is singular");
  }
  CodingMatrix out{k, m.cols, MatrixFlavor::kSystematic,
                   std::vector<Symbol>(m.entries.size(), 0)};
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      Symbol sum = 0;
      for (int i = 0; i < k; ++i) {
        sum ^= gf256::Mul((*inverse)[r * k + i], m.at(i, c));
      }
      out.at(r, c) = sum;
    }
  }
  return out;
}

CodingMatrix ProtectionMatrix(int k, int e) {
  if (k < 1 || e < 0) {
    throw std::invalid_argument("ProtectionMatrix needs k >= 1, e >= 0");
  }
  if (k == 1 || e == 1) {
    CodingMatrix m{k, k + e, MatrixFlavor::kSystematic,
                   std::vector<Symbol>(static_cast<size_t>(k) * (k + e), 0)};
    for (int r = 0; r < k; ++r) {
      m.at(r, r) = 1;
      for (int c = k; c < k + e; ++c) m.at(r, c) = 1;
    }
    return m;
  }
  return SystematicTransform(CauchyMatrix(k, k + e));
}

bool AllSquareSubmatricesInvertible(const CodingMatrix& m) {
  const int limit = std::min(m.rows, m.cols);
  for (int size = 1; size <= limit; ++size) {
    bool ok = true;
    ForEachSubset(m.rows, size, [&](const std::vector<int>& rs) {
      ForEachSubset(m.cols, size, [&](const std::vector<int>& cs) {
        std::vector<Symbol> sub(static_cast<size_t>(size) * size);
        for (int r = 0; r < size; ++r) {
          for (int c = 0; c < size; ++c) sub[r * size + c] = m.at(rs[r], cs[c]);
        }
        ok = IsInvertible(sub, size);
        return ok;
      });
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

bool AllMaximalMinorsInvertible(const CodingMatrix& m) {
  const int k = m.rows;
  if (m.cols < k) return false;
  bool ok = true;
  ForEachSubset(m.cols, k, [&](const std::vector<int>& cs) {
    std::vector<Symbol> sub(static_cast<size_t>(k) * k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) sub[r * k + c] = m.at(r, cs[c]);
    }
    ok = IsInvertible(sub, k);
    return ok;
  });
  return ok;
}

std::vector<Payload> Encode(std::span<const Payload> data,
                            const CodingMatrix& m) {
  if (static_cast<int>(data.size()) != m.rows) {
    throw std::invalid_argument("Encode: expected " + std::to_string(m.rows) +
                                " data payloads");
  }
  CheckPayloads(data);
  const size_t length = data.empty() ? 0 : data.front().size();
  std::vector<Payload> out(m.cols, Payload(length, 0));
  for (int c = 0; c < m.cols; ++c) {
    for (int r = 0; r < m.rows; ++r) {
      const Symbol coef = m.at(r, c);
      if (coef == 0) continue;
      for (size_t b = 0; b < length; ++b) {
        out[c][b] ^= gf256::Mul(coef, data[r][b]);
      }
    }
  }
  return out;
}

std::vector<Payload> Decode(std::span<const Combination> received,
                            const CodingMatrix& m) {
  const int k = m.rows;
  if (static_cast<int>(received.size()) != k) {
    throw std::invalid_argument("Decode: need exactly k combinations");
  }
  std::vector<bool> used(m.cols, false);
  for (const Combination& c : received) {
    if (c.column < 0 || c.column >= m.cols || used[c.column]) {
      throw std::invalid_argument("Decode: invalid or repeated column index");
    }
    used[c.column] = true;
    if (c.payload.size() != received.front().payload.size()) {
      throw std::invalid_argument("Decode: payloads differ in length");
    }
  }
  // Row j of the system is the coding vector of combination j.
  std::vector<Symbol> system(static_cast<size_t>(k) * k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) system[j * k + i] = m.at(i, received[j].column);
  }
  const auto inverse = Invert(system, k);
  if (!inverse) throw std::logic_error("Decode: selected columns are singular");
  const size_t length = received.front().payload.size();
  std::vector<Payload> data(k, Payload(length, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Symbol coef = (*inverse)[i * k + j];
      if (coef == 0) continue;
      for (size_t b = 0; b < length; ++b) {
        data[i][b] ^= gf256::Mul(coef, received[j].payload[b]);
      }
    }
  }
  return data;
}

std::vector<std::optional<Payload>> RecoverSolvable(
    std::span<const CodedSymbol> received, int k) {
  const int count = static_cast<int>(received.size());
  std::vector<std::vector<Symbol>> rows;
  std::vector<std::vector<Symbol>> track(count, std::vector<Symbol>(count, 0));
  for (int j = 0; j < count; ++j) {
    if (static_cast<int>(received[j].coefficients.size()) != k) {
      throw std::invalid_argument("RecoverSolvable: coefficient length != k");
    }
    rows.push_back(received[j].coefficients);
    track[j][j] = 1;
  }
  const std::vector<int> pivots = ReduceRows(rows, &track, k);
  std::vector<std::optional<Payload>> out(k);
  for (size_t r = 0; r < pivots.size(); ++r) {
    const int unit = pivots[r];
    bool is_unit = true;
    for (int c = 0; c < k; ++c) {
      if (c != unit && rows[r][c] != 0) {
        is_unit = false;
        break;
      }
    }
    if (!is_unit) continue;
    const size_t length = received[0].payload.size();
    Payload value(length, 0);
    for (int j = 0; j < count; ++j) {
      const Symbol coef = track[r][j];
      if (coef == 0) continue;
      for (size_t b = 0; b < length; ++b) {
        value[b] ^= gf256::Mul(coef, received[j].payload[b]);
      }
    }
    out[unit] = std::move(value);
  }
  return out;
}

std::vector<bool> SolvableUnits(std::span<const std::vector<Symbol>> vectors,
                                int k) {
  std::vector<std::vector<Symbol>> rows(vectors.begin(), vectors.end());
  const std::vector<int> pivots = ReduceRows(rows, nullptr, k);
  std::vector<bool> solvable(k, false);
  for (size_t r = 0; r < pivots.size(); ++r) {
    bool is_unit = true;
    for (int c = 0; c < k; ++c) {
      if (c != pivots[r] && rows[r][c] != 0) is_unit = false;
    }
    if (is_unit) solvable[pivots[r]] = true;
  }
  return solvable;
}

int Rank(std::span<const std::vector<Symbol>> vectors, int k) {
  std::vector<std::vector<Symbol>> rows(vectors.begin(), vectors.end());
  return static_cast<int>(ReduceRows(rows, nullptr, k).size());
}

std::string DumpMatrix(const CodingMatrix& m) {
  std::ostringstream out;
  out << m.rows << " " << m.cols << " "
      << (m.flavor == MatrixFlavor::kCauchy ? "cauchy" : "systematic") << "\n";
  char hex[4];
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      std::snprintf(hex, sizeof(hex), "%02x", m.at(r, c));
      out << (c ? " " : "") << hex;
    }
    out << "\n";
  }
  return out.str();
}

CodingMatrix ParseMatrixDump(std::string_view text) {
  std::istringstream in{std::string(text)};
  CodingMatrix m;
  std::string flavor;
  if (!(in >> m.rows >> m.cols >> flavor) || m.rows < 0 || m.cols < 0) {
    throw std::invalid_argument("matrix dump: bad header");
  }
  if (flavor == "cauchy") {
    m.flavor = MatrixFlavor::kCauchy;
  } else if (flavor == "systematic") {
    m.flavor = MatrixFlavor::kSystematic;
  } else {
    throw std::invalid_argument("matrix dump: unknown flavor " + flavor);
  }
  m.entries.resize(static_cast<size_t>(m.rows) * m.cols);
  for (auto& entry : m.entries) {
    std::string token;
    if (!(in >> token) || token.size() != 2) {
      throw std::invalid_argument("matrix dump: bad entry");
    }
    entry = static_cast<Symbol>(std::stoul(token, nullptr, 16));
  }
  return m;
}

}  // namespace mfp
