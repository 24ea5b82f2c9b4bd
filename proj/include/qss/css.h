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

#ifndef QSS_CSS_H_
#define QSS_CSS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qss/codes.h"
#include "qss/gf.h"

namespace qss {

// The error operator X(a)Z(b) written as (a|b) in F_q^{2n}.
struct PauliWord {
  Vector a;
  Vector b;

  static PauliWord Identity(std::size_t n) { return {Vector(n, 0), Vector(n, 0)}; }

  std::size_t size() const { return a.size(); }
  // Positions t (1-indexed) with (a_t, b_t) != (0, 0).
  std::vector<int> Support() const;
};

enum class ErrorClass { kDetectable, kStabilizerElement, kUndetectableLogical };

std::string_view ErrorClassName(ErrorClass c);

struct SchemeOptions {
  // Secret direction g in C \ C-dual. Chosen automatically when absent.
  std::optional<Vector> g;
  bool allow_impure = false;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// A validated [[n,1,d]]_q CSS secret sharing instance built from a code C
// with C-dual inside C. The secret i is encoded as the uniform superposition
// over the coset i*g + C-dual.
class QssScheme {
 public:
  // Errors: NotCss, WrongDimension (n != 2k-1), ImpureCode unless
  // allow_impure, BadG for a supplied g outside C \ C-dual.
  static QssScheme Build(const LinearCode& code, const SchemeOptions& options = {});

  const Field& field() const { return code_.field(); }
  const LinearCode& code() const { return code_; }
  const LinearCode& dual() const { return dual_; }
  const Codeword& g() const { return g_; }
  Symbol beta() const { return beta_; }
  std::size_t n() const { return code_.n(); }
  std::size_t k() const { return code_.k(); }
  std::size_t d() const { return d_; }
  bool pure() const { return pure_; }
  std::uint32_t q() const { return code_.field().q(); }

  // True iff v lies in C \ C-dual.
  bool IsLogical(std::span<const Symbol> v) const;

 private:
  QssScheme(LinearCode code, LinearCode dual)
      : code_(std::move(code)), dual_(std::move(dual)) {}

  LinearCode code_;
  LinearCode dual_;
  Codeword g_;
  Symbol beta_ = 0;
  std::size_t d_ = 0;
  bool pure_ = false;
};

// [H 0; 0 H], with H the parity-check matrix of C.
Matrix StabilizerMatrix(const QssScheme& scheme);

// Splits a row of the stabilizer matrix back into (a|b).
PauliWord PauliFromRow(std::span<const Symbol> row);

ErrorClass ClassifyError(const QssScheme& scheme, const PauliWord& e);

struct Lemma2Witness {
  Vector x;
  Vector y;
  Symbol dot = 0;
};

struct Lemma2Report {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  std::size_t d = 0;
  // Only checked for q = 2.
  bool d_odd = true;
  std::optional<Lemma2Witness> witness;
};

// Checks x . y != 0 for pairs in C \ C-dual, and for q = 2 that x . y = 1
// and d is odd. Exhaustive unless `samples` is given.
Lemma2Report CheckLemma2(const QssScheme& scheme,
                         std::optional<std::uint64_t> samples = std::nullopt,
                         std::uint64_t seed = 0x5eed);

}  // namespace qss

#endif  // QSS_CSS_H_
