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

#ifndef QSS_CODES_H_
#define QSS_CODES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qss/gf.h"

namespace qss {

using Vector = std::vector<Symbol>;
using Matrix = std::vector<Vector>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 24;

struct RowEchelon {
  Matrix rows;                      // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row-echelon form over `field`; zero rows are dropped.
RowEchelon ReducedRowEchelon(const Field& field, Matrix rows);

// Basis (in RREF) of {x in F_q^n : r . x = 0 for every row r}.
Matrix NullspaceBasis(const Field& field, const Matrix& rows, std::size_t n);

// Scales v so its leftmost nonzero entry is 1. Zero vectors are unchanged.
Vector NormalizeLeading(const Field& field, Vector v);

// A vector of F_q^n viewed as a codeword. Positions are 1-indexed in
// `Support()` to match party numbering.
struct Codeword {
  Vector values;

  std::size_t size() const { return values.size(); }
  std::size_t Weight() const;
  std::vector<int> Support() const;
  // Bit t-1 set iff position t is in the support. Requires size() <= 64.
  std::uint64_t SupportMask() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// True iff supp(y) is a subset of supp(x). Throws LengthMismatch.
bool Covers(const Codeword& x, const Codeword& y);

// Linear [n, k]_q code with generator in RREF and a parity-check matrix that
// generates the dual.
class LinearCode {
 public:
  // Throws ZeroCode for rank 0, BadEntry for out-of-range entries or ragged
  // rows.
  static LinearCode FromGenerator(const Field& field, const Matrix& rows);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return generator_.size(); }
  const Matrix& generator() const { return generator_; }
  const Matrix& parity_check() const { return parity_check_; }

  // Code generated by the parity-check matrix. Throws ZeroCode when this
  // code is the full space.
  LinearCode Dual() const;

  // H v^T == 0. Throws LengthMismatch.
  bool Contains(std::span<const Symbol> v) const;
  // v . c == 0 for all c, i.e. G v^T == 0. Throws LengthMismatch.
  bool DualContains(std::span<const Symbol> v) const;

  // message * G.
  Vector Encode(std::span<const Symbol> message) const;

  // q^k, saturated at UINT64_MAX.
  std::uint64_t NumCodewords() const;

  // Visits all q^k codewords once, in base-q message order (zero first).
  // Throws EnumerationTooLarge if q^k exceeds `cap`.
  void ForEachCodeword(const std::function<void(const Vector&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap) const;
  std::vector<Codeword> Codewords(
      std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  LinearCode(Field field, std::size_t n, Matrix g, Matrix h)
      : field_(std::move(field)),
        n_(n),
        generator_(std::move(g)),
        parity_check_(std::move(h)) {}

  Field field_;
  std::size_t n_;
  Matrix generator_;
  Matrix parity_check_;
};

// True iff every row of the dual's generator lies in `code`.
bool ContainsDual(const LinearCode& code);

struct MinimalCodeword {
  Codeword word;  // leftmost nonzero entry is 1
  // Number of pairwise non-proportional minimal codewords with this support.
  std::size_t multiplicity = 1;
};

// Minimal codewords of C lying outside C-dual, one per support, sorted by
// (weight, support). Requires C-dual within C (NotCss) and n <= 64.
std::vector<MinimalCodeword> MinimalCodewordsOutsideDual(
    const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

// Minimum Hamming weight over C \ C-dual. Throws NotCss.
std::size_t MinWeightOutsideDual(const LinearCode& code,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// Minimum weight of a nonzero codeword; 0 when only the zero word exists.
std::size_t MinNonzeroWeight(const LinearCode& code,
                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qss

#endif  // QSS_CODES_H_
