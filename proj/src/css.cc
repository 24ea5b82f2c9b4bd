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

#include "qss/css.h"

#include <algorithm>
#include <random>
#include <string>

#include "qss/error.h"

namespace qss {

std::vector<int> PauliWord::Support() const {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "Pauli halves differ in length");
  }
  std::vector<int> s;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] != 0 || b[t] != 0) s.push_back(static_cast<int>(t) + 1);
  }
  return s;
}

std::string_view ErrorClassName(ErrorClass c) {
  switch (c) {
    case ErrorClass::kDetectable: return "Detectable";
    case ErrorClass::kStabilizerElement: return "StabilizerElement";
    case ErrorClass::kUndetectableLogical: return "UndetectableLogical";
  }
  return "Unknown";
}

bool QssScheme::IsLogical(std::span<const Symbol> v) const {
  return code_.Contains(v) && !code_.DualContains(v);
}

QssScheme QssScheme::Build(const LinearCode& code, const SchemeOptions& options) {
  const Field& field = code.field();
  const Matrix& h = code.parity_check();
  // C-dual within C: H H^T = 0, and each row of H is a member of C.
  for (const auto& r1 : h) {
    for (const auto& r2 : h) {
      if (field.Dot(r1, r2) != 0) {
        throw Error(ErrorCode::kNotCssPair, "H H^T != 0");
      }
    }
    if (!code.Contains(r1)) {
      throw Error(ErrorCode::kNotCssPair, "a parity-check row is not in C");
    }
  }
  if (code.n() != 2 * code.k() - 1) {
    throw Error(ErrorCode::kWrongDimension,
                "need n = 2k - 1, got n = " + std::to_string(code.n()) +
                    ", k = " + std::to_string(code.k()));
  }

  QssScheme s(code, code.Dual());
  s.d_ = MinWeightOutsideDual(code, options.enumeration_cap);
  s.pure_ = MinNonzeroWeight(s.dual_, options.enumeration_cap) >= s.d_;
  if (!s.pure_ && !options.allow_impure) {
    throw Error(ErrorCode::kImpureCode,
                "C-dual has a nonzero word lighter than d = " +
                    std::to_string(s.d_));
  }

  if (options.g) {
    const Vector& g = *options.g;
    if (g.size() != code.n() ||
        !std::all_of(g.begin(), g.end(),
                     [&](Symbol x) { return field.Contains(x); })) {
      throw Error(ErrorCode::kBadG, "g is not a vector of F_q^n");
    }
    if (!s.IsLogical(g)) throw Error(ErrorCode::kBadG, "g is not in C \\ C-dual");
    s.g_ = Codeword{g};
  } else {
    std::optional<Vector> best;
    code.ForEachCodeword(
        [&](const Vector& v) {
          auto lead = std::find_if(v.begin(), v.end(), [](Symbol x) { return x; });
          if (lead == v.end() || *lead != 1 || code.DualContains(v)) return;
          if (!best || v < *best) best = v;
        },
        options.enumeration_cap);
    s.g_ = Codeword{*best};
  }
  s.beta_ = field.Dot(s.g_.values, s.g_.values);
  if (s.beta_ == 0) throw Error(ErrorCode::kBadG, "g . g = 0");
  return s;
}

Matrix StabilizerMatrix(const QssScheme& scheme) {
  const std::size_t n = scheme.n();
  const Matrix& h = scheme.code().parity_check();
  Matrix s;
  s.reserve(2 * h.size());
  for (const auto& row : h) {
    Vector r(2 * n, 0);
    std::copy(row.begin(), row.end(), r.begin());
    s.push_back(std::move(r));
  }
  for (const auto& row : h) {
    Vector r(2 * n, 0);
    std::copy(row.begin(), row.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    s.push_back(std::move(r));
  }
  return s;
}

PauliWord PauliFromRow(std::span<const Symbol> row) {
  if (row.size() % 2 != 0) {
    throw Error(ErrorCode::kLengthMismatch, "symplectic row has odd length");
  }
  const std::size_t n = row.size() / 2;
  return {Vector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n)),
          Vector(row.begin() + static_cast<std::ptrdiff_t>(n), row.end())};
}

ErrorClass ClassifyError(const QssScheme& scheme, const PauliWord& e) {
  if (e.a.size() != scheme.n() || e.b.size() != scheme.n()) {
    throw Error(ErrorCode::kLengthMismatch, "Pauli word length != n");
  }
  const LinearCode& c = scheme.code();
  if (c.DualContains(e.a) && c.DualContains(e.b)) {
    return ErrorClass::kStabilizerElement;
  }
  if (c.Contains(e.a) && c.Contains(e.b)) return ErrorClass::kUndetectableLogical;
  return ErrorClass::kDetectable;
}

Lemma2Report CheckLemma2(const QssScheme& scheme,
                         std::optional<std::uint64_t> samples,
                         std::uint64_t seed) {
  const Field& field = scheme.field();
  std::vector<Vector> outside;
  scheme.code().ForEachCodeword([&](const Vector& v) {
    if (!scheme.code().DualContains(v)) outside.push_back(v);
  });

  Lemma2Report report;
  report.d = scheme.d();
  const bool binary = scheme.q() == 2;
  auto check = [&](const Vector& x, const Vector& y) {
    ++report.pairs_checked;
    const Symbol dot = field.Dot(x, y);
    const bool ok = binary ? dot == 1 : dot != 0;
    if (!ok && !report.witness) {
      report.passed = false;
      report.witness = Lemma2Witness{x, y, dot};
    }
  };

  if (samples) {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    for (std::uint64_t i = 0; i < *samples; ++i) {
      check(outside[pick(rng)], outside[pick(rng)]);
    }
  } else {
    for (const auto& x : outside) {
      for (const auto& y : outside) check(x, y);
    }
  }
  if (binary) {
    report.d_odd = scheme.d() % 2 == 1;
    report.passed = report.passed && report.d_odd;
  }
  return report;
}

}  // namespace qss
