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

#ifndef QSS_GF_H_
#define QSS_GF_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qss {

// An element of F_q stored as an integer in [0, q). For q = p^m the base-p
// digits of the integer are the polynomial coefficients, lowest degree first,
// so the prime subfield F_p is exactly the values [0, p).
using Symbol = std::uint32_t;

// Largest extension field we build lookup tables for.
inline constexpr std::uint32_t kMaxExtensionFieldSize = 1u << 20;

// Handle to an immutable finite field F_{p^m}. Copies share state.
class Field {
 public:
  // Builds F_{p^m}. `poly` is the ascending coefficient list of a monic
  // irreducible polynomial of degree m over F_p; it may be omitted for prime
  // fields and for GF(4), GF(8), GF(9), which have built-in defaults.
  static Field Make(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<std::uint32_t>> poly = {});

  // Shorthand for the prime field F_p.
  static Field Prime(std::uint32_t p) { return Make(p, 1); }

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  // Modulus polynomial, ascending degree. {0, 1} (i.e. x) for prime fields.
  const std::vector<std::uint32_t>& poly() const;

  bool Contains(std::uint64_t value) const { return value < q(); }

  Symbol Add(Symbol a, Symbol b) const;
  Symbol Sub(Symbol a, Symbol b) const;
  Symbol Neg(Symbol a) const;
  Symbol Mul(Symbol a, Symbol b) const;
  // Throws DivisionByZero when b == 0.
  Symbol Div(Symbol a, Symbol b) const;
  // Throws DivisionByZero when a == 0.
  Symbol Inv(Symbol a) const;
  Symbol Pow(Symbol a, std::uint64_t e) const;

  // Absolute trace tr_{q/p}(a) = a + a^p + ... + a^{p^(m-1)}, in [0, p).
  Symbol Trace(Symbol a) const;

  // Sum of u_i * v_i. Throws LengthMismatch.
  Symbol Dot(std::span<const Symbol> u, std::span<const Symbol> v) const;

  // y += c * x, elementwise. Throws LengthMismatch.
  void Axpy(Symbol c, std::span<const Symbol> x, std::span<Symbol> y) const;

  std::string Name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// A field element bound to its field. Mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Symbol value);

  const Field& field() const { return field_; }
  Symbol value() const { return value_; }

  FieldElement Inverse() const;
  // Trace, as an element of the same field (it lies in the prime subfield).
  FieldElement Trace() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Symbol value_;
};

FieldElement Dot(std::span<const FieldElement> u,
                 std::span<const FieldElement> v);

bool IsPrime(std::uint64_t n);

}  // namespace qss

#endif  // QSS_GF_H_
