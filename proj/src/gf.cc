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

#include "qss/gf.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qss/error.h"

namespace qss {
namespace {

// Dense polynomials over F_p, ascending degree, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t ModPow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t ModInv(std::uint32_t a, std::uint32_t p) {
  return ModPow(a, p - 2, p);
}

Poly PolyMod(Poly a, const Poly& f, std::uint32_t p) {
  Trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = ModInv(f.back(), p);
  while (a.size() >= f.size()) {
    const std::size_t shift = a.size() - f.size();
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = factor * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    Trim(a);
  }
  return a;
}

Poly PolyMul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  Trim(r);
  return r;
}

Poly PolyPowMod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = PolyMod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = PolyMod(PolyMul(result, base, p), f, p);
    base = PolyMod(PolyMul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

Poly PolyGcd(Poly a, Poly b, std::uint32_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool HasRoot(const Poly& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

// Ben-Or: f of degree m is irreducible iff gcd(f, x^{p^i} - x) = 1 for
// every i <= m/2.
bool IsIrreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 3 && HasRoot(f, p)) return false;
  Poly x_pow{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    x_pow = PolyPowMod(x_pow, p, f, p);
    Poly diff = x_pow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    Trim(diff);
    if (diff.empty()) return false;
    if (PolyGcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::optional<Poly> DefaultPoly(std::uint32_t p, std::uint32_t m) {
  if (p == 2 && m == 2) return Poly{1, 1, 1};
  if (p == 2 && m == 3) return Poly{1, 1, 0, 1};
  if (p == 3 && m == 2) return Poly{1, 0, 1};
  return std::nullopt;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly poly;
  // Extension fields only: exp_table has 2(q-1) entries so a sum of two logs
  // indexes it without reduction.
  std::vector<Symbol> exp_table;
  std::vector<std::uint32_t> log_table;
  std::vector<Symbol> trace_table;

  Poly Decode(Symbol a) const {
    Poly r(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      r[i] = a % p;
      a /= p;
    }
    Trim(r);
    return r;
  }

  Symbol Encode(const Poly& a) const {
    Symbol v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  }

  Symbol SlowMul(Symbol a, Symbol b) const {
    return Encode(PolyMod(PolyMul(Decode(a), Decode(b), p), poly, p));
  }

  Symbol AddDigits(Symbol a, Symbol b) const {
    if (p == 2) return a ^ b;
    Symbol r = 0;
    Symbol scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  }

  Symbol NegDigits(Symbol a) const {
    if (p == 2) return a;
    Symbol r = 0;
    Symbol scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return r;
  }

  void BuildTables() {
    const std::uint32_t order = q - 1;
    for (Symbol gen = 2; gen < q; ++gen) {
      std::vector<Symbol> powers;
      powers.reserve(order);
      Symbol cur = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i < order; ++i) {
        if (i > 0 && cur == 1) {
          primitive = false;
          break;
        }
        powers.push_back(cur);
        cur = SlowMul(cur, gen);
      }
      if (!primitive || cur != 1) continue;
      exp_table.resize(2 * static_cast<std::size_t>(order));
      log_table.assign(q, 0);
      for (std::uint32_t i = 0; i < order; ++i) {
        exp_table[i] = powers[i];
        exp_table[i + order] = powers[i];
        log_table[powers[i]] = i;
      }
      break;
    }
    trace_table.resize(q);
    for (Symbol a = 0; a < q; ++a) {
      Symbol sum = a;
      Symbol frob = a;
      for (std::uint32_t i = 1; i < m; ++i) {
        frob = PowTable(frob, p);
        sum = AddDigits(sum, frob);
      }
      trace_table[a] = sum;
    }
  }

  Symbol MulTable(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[log_table[a] + log_table[b]];
  }

  Symbol PowTable(Symbol a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = log_table[a] * (e % (q - 1)) % (q - 1);
    return exp_table[l];
  }
};

Field Field::Make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> poly) {
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNonPrimeCharacteristic,
                std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(ErrorCode::kBadEntry, "extension degree must be >= 1");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (m == 1 ? (1ull << 31) : kMaxExtensionFieldSize)) {
      throw Error(ErrorCode::kBadEntry, "field too large");
    }
  }
  impl->q = static_cast<std::uint32_t>(q);

  if (m == 1) {
    if (poly && (poly->size() != 2 || (*poly)[1] != 1 || (*poly)[0] >= p)) {
      throw Error(ErrorCode::kBadEntry,
                  "prime field polynomial must be monic of degree 1");
    }
    impl->poly = {0, 1};
    return Field(std::move(impl));
  }

  if (!poly) poly = DefaultPoly(p, m);
  if (!poly) {
    throw Error(ErrorCode::kMissingPolynomial,
                "GF(" + std::to_string(q) + ") needs an explicit polynomial");
  }
  if (poly->size() != m + 1 || poly->back() != 1) {
    throw Error(ErrorCode::kBadEntry,
                "polynomial must be monic of degree " + std::to_string(m));
  }
  for (auto c : *poly) {
    if (c >= p) throw Error(ErrorCode::kBadEntry, "coefficient outside F_p");
  }
  if (!IsIrreducible(*poly, p)) {
    throw Error(ErrorCode::kReduciblePolynomial,
                "modulus is reducible over F_" + std::to_string(p));
  }
  impl->poly = *poly;
  impl->BuildTables();
  return Field(std::move(impl));
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::m() const { return impl_->m; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::poly() const { return impl_->poly; }

Symbol Field::Add(Symbol a, Symbol b) const {
  if (impl_->m == 1) {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Symbol>(s >= impl_->p ? s - impl_->p : s);
  }
  return impl_->AddDigits(a, b);
}

Symbol Field::Neg(Symbol a) const {
  if (impl_->m == 1) return a == 0 ? 0 : impl_->p - a;
  return impl_->NegDigits(a);
}

Symbol Field::Sub(Symbol a, Symbol b) const { return Add(a, Neg(b)); }

Symbol Field::Mul(Symbol a, Symbol b) const {
  if (impl_->m == 1) {
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % impl_->p);
  }
  return impl_->MulTable(a, b);
}

Symbol Field::Inv(Symbol a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (impl_->m == 1) return ModInv(a, impl_->p);
  const std::uint32_t order = impl_->q - 1;
  return impl_->exp_table[(order - impl_->log_table[a]) % order];
}

Symbol Field::Div(Symbol a, Symbol b) const {
  if (b == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  return Mul(a, Inv(b));
}

Symbol Field::Pow(Symbol a, std::uint64_t e) const {
  if (impl_->m == 1) return ModPow(a, e, impl_->p);
  return impl_->PowTable(a, e);
}

Symbol Field::Trace(Symbol a) const {
  if (impl_->m == 1) return a;
  return impl_->trace_table[a];
}

Symbol Field::Dot(std::span<const Symbol> u, std::span<const Symbol> v) const {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch, "dot product of unequal lengths");
  }
  Symbol acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = Add(acc, Mul(u[i], v[i]));
  return acc;
}

void Field::Axpy(Symbol c, std::span<const Symbol> x,
                 std::span<Symbol> y) const {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, "axpy of unequal lengths");
  }
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = Add(y[i], Mul(c, x[i]));
}

std::string Field::Name() const {
  std::ostringstream os;
  os << "GF(" << impl_->q << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.p() == b.p() && a.m() == b.m() && a.poly() == b.poly();
}

FieldElement::FieldElement(Field field, Symbol value)
    : field_(std::move(field)), value_(value) {
  if (!field_.Contains(value)) {
    throw Error(ErrorCode::kBadEntry,
                std::to_string(value) + " is not an element of " + field_.Name());
  }
}

namespace {
const Field& CommonField(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kFieldMismatch,
                a.field().Name() + " vs " + b.field().Name());
  }
  return a.field();
}
}  // namespace

FieldElement FieldElement::Inverse() const {
  return {field_, field_.Inv(value_)};
}

FieldElement FieldElement::Trace() const {
  return {field_, field_.Trace(value_)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return {f, f.Add(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return {f, f.Sub(a.value(), b.value())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return {f, f.Mul(a.value(), b.value())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = CommonField(a, b);
  return {f, f.Div(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a) {
  return {a.field(), a.field().Neg(a.value())};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field() == b.field() && a.value() == b.value();
}

FieldElement Dot(std::span<const FieldElement> u,
                 std::span<const FieldElement> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch, "dot product of unequal lengths");
  }
  if (u.empty()) {
    throw Error(ErrorCode::kLengthMismatch, "empty dot product has no field");
  }
  FieldElement acc(u[0].field(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i];
  return acc;
}

}  // namespace qss
