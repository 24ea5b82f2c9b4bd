// Copyright 2026 The QSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/codes.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "qss/error.h"

namespace qss {
namespace {

// Above this length the strict-subset table of size 2^n is not built and
// minimality falls back to comparing distinct supports pairwise.
constexpr std::size_t kMaxSubsetTableLength = 24;

void CheckLength(std::size_t got, std::size_t want) {
  if (got != want) {
    throw Error(ErrorCode::kLengthMismatch, "expected length " +
                                                std::to_string(want) + ", got " +
                                                std::to_string(got));
  }
}

bool IsZero(std::span<const Symbol> v) {
  return std::all_of(v.begin(), v.end(), [](Symbol s) { return s == 0; });
}

bool MatrixAnnihilates(const Field& field, const Matrix& m,
                       std::span<const Symbol> v) {
  for (const auto& row : m) {
    if (field.Dot(row, v) != 0) return false;
  }
  return true;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::uint64_t MaskOf(std::span<const Symbol> v) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) mask |= 1ull << i;
  }
  return mask;
}

// Orders supports by size, then lexicographically.
bool SupportLess(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

RowEchelon ReducedRowEchelon(const Field& field, Matrix rows) {
  RowEchelon out;
  if (rows.empty()) return out;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Symbol inv = field.Inv(rows[r][col]);
    for (auto& x : rows[r]) x = field.Mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      field.Axpy(field.Neg(rows[i][col]), rows[r], rows[i]);
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

Matrix NullspaceBasis(const Field& field, const Matrix& rows, std::size_t n) {
  RowEchelon ech = ReducedRowEchelon(field, rows);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      v[ech.pivots[i]] = field.Neg(ech.rows[i][free]);
    }
    basis.push_back(std::move(v));
  }
  return ReducedRowEchelon(field, std::move(basis)).rows;
}

Vector NormalizeLeading(const Field& field, Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](Symbol s) { return s != 0; });
  if (it == v.end() || *it == 1) return v;
  const Symbol inv = field.Inv(*it);
  for (auto& x : v) x = field.Mul(x, inv);
  return v;
}

std::size_t Codeword::Weight() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](Symbol s) { return s; }));
}

std::vector<int> Codeword::Support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) s.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

std::uint64_t Codeword::SupportMask() const {
  if (values.size() > 64) {
    throw Error(ErrorCode::kLengthMismatch, "support masks need n <= 64");
  }
  return MaskOf(values);
}

bool Covers(const Codeword& x, const Codeword& y) {
  CheckLength(y.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.values[i] == 0 && y.values[i] != 0) return false;
  }
  return true;
}

LinearCode LinearCode::FromGenerator(const Field& field, const Matrix& rows) {
  if (rows.empty() || rows[0].empty()) {
    throw Error(ErrorCode::kZeroCode, "no generator rows");
  }
  const std::size_t n = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::kBadEntry, "ragged generator");
    for (auto x : row) {
      if (!field.Contains(x)) {
        throw Error(ErrorCode::kBadEntry, std::to_string(x) +
                                              " is not an element of " +
                                              field.Name());
      }
    }
  }
  RowEchelon ech = ReducedRowEchelon(field, rows);
  if (ech.rows.empty()) throw Error(ErrorCode::kZeroCode, "generator has rank 0");
  Matrix h = NullspaceBasis(field, ech.rows, n);
  return LinearCode(field, n, std::move(ech.rows), std::move(h));
}

LinearCode LinearCode::Dual() const {
  if (parity_check_.empty()) {
    throw Error(ErrorCode::kZeroCode, "dual of the full space is zero");
  }
  return FromGenerator(field_, parity_check_);
}

bool LinearCode::Contains(std::span<const Symbol> v) const {
  CheckLength(v.size(), n_);
  return MatrixAnnihilates(field_, parity_check_, v);
}

bool LinearCode::DualContains(std::span<const Symbol> v) const {
  CheckLength(v.size(), n_);
  return MatrixAnnihilates(field_, generator_, v);
}

Vector LinearCode::Encode(std::span<const Symbol> message) const {
  CheckLength(message.size(), k());
  Vector out(n_, 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    field_.Axpy(message[i], generator_[i], out);
  }
  return out;
}

std::uint64_t LinearCode::NumCodewords() const {
  return SaturatingPow(field_.q(), k());
}

void LinearCode::ForEachCodeword(
    const std::function<void(const Vector&)>& visit, std::uint64_t cap) const {
  const std::uint64_t total = NumCodewords();
  if (total > cap) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "q^k = " + std::to_string(total) + " exceeds cap " +
                    std::to_string(cap));
  }
  const std::uint32_t q = field_.q();
  const std::size_t kk = k();
  // scaled[i][a] = a * G_i
  std::vector<Matrix> scaled(kk, Matrix(q, Vector(n_, 0)));
  for (std::size_t i = 0; i < kk; ++i) {
    for (Symbol a = 0; a < q; ++a) {
      for (std::size_t t = 0; t < n_; ++t) {
        scaled[i][a][t] = field_.Mul(a, generator_[i][t]);
      }
    }
  }
  std::vector<Symbol> message(kk, 0);
  Vector word(n_, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    visit(word);
    // Odometer step, least significant digit last.
    for (std::size_t pos = kk; pos-- > 0;) {
      const Symbol old = message[pos];
      const Symbol next = old + 1 == q ? 0 : old + 1;
      message[pos] = next;
      for (std::size_t t = 0; t < n_; ++t) {
        word[t] = field_.Add(field_.Sub(word[t], scaled[pos][old][t]),
                             scaled[pos][next][t]);
      }
      if (next != 0) break;
    }
  }
}

std::vector<Codeword> LinearCode::Codewords(std::uint64_t cap) const {
  std::vector<Codeword> out;
  out.reserve(static_cast<std::size_t>(std::min(NumCodewords(), cap)));
  ForEachCodeword([&](const Vector& v) { out.push_back(Codeword{v}); }, cap);
  return out;
}

bool ContainsDual(const LinearCode& code) {
  for (const auto& row : code.parity_check()) {
    if (!code.Contains(row)) return false;
  }
  return true;
}

std::vector<MinimalCodeword> MinimalCodewordsOutsideDual(
    const LinearCode& code, std::uint64_t cap) {
  if (!ContainsDual(code)) {
    throw Error(ErrorCode::kNotCssPair, "dual code is not contained in C");
  }
  const std::size_t n = code.n();
  if (n > 64) throw Error(ErrorCode::kLengthMismatch, "minimal codewords need n <= 64");
  // Projective classes (leading entry 1) of nonzero codewords per support.
  std::unordered_map<std::uint64_t, std::size_t> classes_per_mask;
  std::vector<Codeword> candidates;
  code.ForEachCodeword(
      [&](const Vector& v) {
        auto lead = std::find_if(v.begin(), v.end(), [](Symbol s) { return s; });
        if (lead == v.end() || *lead != 1) return;
        ++classes_per_mask[MaskOf(v)];
        if (!code.DualContains(v)) candidates.push_back(Codeword{v});
      },
      cap);

  std::function<bool(std::uint64_t)> has_strict_subset;
  std::vector<std::uint8_t> sub;  // sub[m]: some nonzero codeword has supp within m
  std::vector<std::uint64_t> masks;
  if (n <= kMaxSubsetTableLength) {
    sub.assign(std::size_t{1} << n, 0);
    for (const auto& [mask, count] : classes_per_mask) sub[mask] = 1;
    for (std::size_t bit = 0; bit < n; ++bit) {
      for (std::size_t m = 0; m < sub.size(); ++m) {
        if (m & (std::size_t{1} << bit)) sub[m] |= sub[m ^ (std::size_t{1} << bit)];
      }
    }
    has_strict_subset = [&](std::uint64_t mask) {
      for (std::size_t bit = 0; bit < n; ++bit) {
        const std::uint64_t b = 1ull << bit;
        if ((mask & b) && sub[mask ^ b]) return true;
      }
      return false;
    };
  } else {
    for (const auto& [mask, count] : classes_per_mask) masks.push_back(mask);
    has_strict_subset = [&](std::uint64_t mask) {
      for (auto other : masks) {
        if (other != mask && (other & ~mask) == 0) return true;
      }
      return false;
    };
  }

  std::map<std::vector<int>, MinimalCodeword, decltype(&SupportLess)>
      by_support(&SupportLess);
  for (auto& c : candidates) {
    const std::uint64_t mask = MaskOf(c.values);
    // A second class on the same support would let a combination of the two
    // cancel a coordinate, so minimality needs exactly one class here.
    if (classes_per_mask[mask] != 1 || has_strict_subset(mask)) continue;
    auto support = c.Support();
    auto [it, inserted] =
        by_support.try_emplace(std::move(support), MinimalCodeword{c, 0});
    ++it->second.multiplicity;
    if (!inserted && c.values < it->second.word.values) it->second.word = c;
  }

  std::vector<MinimalCodeword> out;
  out.reserve(by_support.size());
  for (auto& [support, mc] : by_support) out.push_back(std::move(mc));
  return out;
}

std::size_t MinWeightOutsideDual(const LinearCode& code, std::uint64_t cap) {
  if (!ContainsDual(code)) {
    throw Error(ErrorCode::kNotCssPair, "dual code is not contained in C");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  code.ForEachCodeword(
      [&](const Vector& v) {
        if (IsZero(v) || code.DualContains(v)) return;
        best = std::min(best, Codeword{v}.Weight());
      },
      cap);
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw Error(ErrorCode::kWrongDimension, "C equals its dual");
  }
  return best;
}

std::size_t MinNonzeroWeight(const LinearCode& code, std::uint64_t cap) {
  std::size_t best = 0;
  code.ForEachCodeword(
      [&](const Vector& v) {
        if (IsZero(v)) return;
        const std::size_t w = Codeword{v}.Weight();
        if (best == 0 || w < best) best = w;
      },
      cap);
  return best;
}

}  // namespace qss
