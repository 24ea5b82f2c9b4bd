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

#include "qss/qsim.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qss/error.h"

namespace qss {
namespace {

std::uint64_t CheckedDimension(std::uint32_t q, std::size_t num_qudits,
                               std::uint64_t max_amplitudes) {
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < num_qudits; ++i) {
    if (dim > max_amplitudes / q) {
      throw Error(ErrorCode::kDimensionTooLarge,
                  std::to_string(q) + "^" + std::to_string(num_qudits) +
                      " amplitudes exceed cap " + std::to_string(max_amplitudes));
    }
    dim *= q;
  }
  return dim;
}

void CheckSameShape(const StateVector& u, const StateVector& v) {
  if (u.dimension() != v.dimension() || u.num_qudits() != v.num_qudits() ||
      !(u.field() == v.field())) {
    throw Error(ErrorCode::kDimensionMismatch, "state vectors differ in shape");
  }
}

// Walks every basis index in order while keeping its digit string.
template <typename Visit>
void ForEachBasis(std::size_t num_qudits, std::uint32_t q, std::size_t dim,
                  Visit&& visit) {
  std::vector<Symbol> digits(num_qudits, 0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    visit(idx, digits);
    for (std::size_t t = num_qudits; t-- > 0;) {
      if (++digits[t] < q) break;
      digits[t] = 0;
    }
  }
}

// Table of w^t for t in [0, p).
std::vector<Amplitude> PhaseTable(std::uint32_t p) {
  std::vector<Amplitude> w(p);
  for (std::uint32_t t = 0; t < p; ++t) w[t] = RootOfUnity(p, t);
  return w;
}

// tr(b . x) as an exponent in [0, p), and the index of x + a.
struct ShiftPhase {
  std::size_t target;
  Symbol exponent;
};

ShiftPhase Apply(const Field& f, const std::vector<std::size_t>& strides,
                 std::span<const Symbol> digits, std::span<const Symbol> a,
                 std::span<const Symbol> b) {
  std::size_t target = 0;
  std::uint64_t exponent = 0;
  for (std::size_t t = 0; t < digits.size(); ++t) {
    target += f.Add(digits[t], a[t]) * strides[t];
    if (b[t] != 0 && digits[t] != 0) exponent += f.Trace(f.Mul(b[t], digits[t]));
  }
  return {target, static_cast<Symbol>(exponent % f.p())};
}

}  // namespace

Amplitude RootOfUnity(std::uint32_t p, Symbol t) {
  if (t % p == 0) return {1.0, 0.0};
  if (p == 2) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t % p) /
                       static_cast<double>(p);
  return std::polar(1.0, angle);
}

StateVector::StateVector(Field field, std::size_t num_qudits,
                         std::uint64_t max_amplitudes)
    : field_(std::move(field)), num_qudits_(num_qudits) {
  const std::uint64_t dim = CheckedDimension(field_.q(), num_qudits, max_amplitudes);
  strides_.assign(num_qudits, 1);
  for (std::size_t t = num_qudits; t-- > 1;) {
    strides_[t - 1] = strides_[t] * field_.q();
  }
  amplitudes_.assign(static_cast<std::size_t>(dim), Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::Basis(const Field& field, std::span<const Symbol> x,
                               std::uint64_t max_amplitudes) {
  StateVector sv(field, x.size(), max_amplitudes);
  sv.amplitudes_[0] = 0.0;
  sv.amplitudes_[sv.IndexOf(x)] = 1.0;
  return sv;
}

std::size_t StateVector::IndexOf(std::span<const Symbol> x) const {
  if (x.size() != num_qudits_) {
    throw Error(ErrorCode::kLengthMismatch, "basis label has wrong length");
  }
  std::size_t idx = 0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (!field_.Contains(x[t])) {
      throw Error(ErrorCode::kBadEntry, std::to_string(x[t]) +
                                            " is not an element of " +
                                            field_.Name());
    }
    idx += x[t] * strides_[t];
  }
  return idx;
}

Vector StateVector::DigitsOf(std::size_t index) const {
  Vector digits(num_qudits_, 0);
  for (std::size_t t = num_qudits_; t-- > 0;) {
    digits[t] = static_cast<Symbol>(index % field_.q());
    index /= field_.q();
  }
  return digits;
}

double StateVector::Norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::ApplyPauli(const PauliWord& e) {
  if (e.a.size() != num_qudits_ || e.b.size() != num_qudits_) {
    throw Error(ErrorCode::kLengthMismatch, "Pauli word length != qudit count");
  }
  const auto w = PhaseTable(field_.p());
  std::vector<Amplitude> out(amplitudes_.size());
  ForEachBasis(num_qudits_, field_.q(), amplitudes_.size(),
               [&](std::size_t idx, const std::vector<Symbol>& digits) {
                 const auto [target, exponent] =
                     Apply(field_, strides_, digits, e.a, e.b);
                 out[target] = w[exponent] * amplitudes_[idx];
               });
  amplitudes_ = std::move(out);
}

void StateVector::ApplyX(std::span<const Symbol> a) {
  ApplyPauli({Vector(a.begin(), a.end()), Vector(num_qudits_, 0)});
}

void StateVector::ApplyZ(std::span<const Symbol> b) {
  ApplyPauli({Vector(num_qudits_, 0), Vector(b.begin(), b.end())});
}

void StateVector::CheckQudit(std::size_t qudit) const {
  if (qudit >= num_qudits_) {
    throw Error(ErrorCode::kBadEntry, "qudit " + std::to_string(qudit) +
                                          " out of range");
  }
}

void StateVector::ApplyMultiply(std::size_t qudit, Symbol c) {
  CheckQudit(qudit);
  if (c == 0) throw Error(ErrorCode::kZeroMultiplier, "M(0) is not unitary");
  if (!field_.Contains(c)) throw Error(ErrorCode::kBadEntry, "multiplier outside F_q");
  const std::size_t stride = strides_[qudit];
  const std::uint32_t q = field_.q();
  std::vector<Amplitude> out(amplitudes_.size());
  for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
    const Symbol x = static_cast<Symbol>(idx / stride % q);
    const std::size_t target = idx - x * stride + field_.Mul(c, x) * stride;
    out[target] = amplitudes_[idx];
  }
  amplitudes_ = std::move(out);
}

void StateVector::ApplyAdd(std::size_t control, std::size_t target) {
  CheckQudit(control);
  CheckQudit(target);
  if (control == target) {
    throw Error(ErrorCode::kSameWire, "control and target coincide");
  }
  const std::size_t cs = strides_[control];
  const std::size_t ts = strides_[target];
  const std::uint32_t q = field_.q();
  std::vector<Amplitude> out(amplitudes_.size());
  for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
    const Symbol x = static_cast<Symbol>(idx / cs % q);
    const Symbol y = static_cast<Symbol>(idx / ts % q);
    const std::size_t dest = idx - y * ts + field_.Add(x, y) * ts;
    out[dest] = amplitudes_[idx];
  }
  amplitudes_ = std::move(out);
}

StateVector StateVector::WithAncilla(std::uint64_t max_amplitudes) const {
  StateVector out(field_, num_qudits_ + 1, max_amplitudes);
  const std::uint32_t q = field_.q();
  out.amplitudes_[0] = 0.0;
  for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
    out.amplitudes_[idx * q] = amplitudes_[idx];
  }
  return out;
}

Amplitude Inner(const StateVector& u, const StateVector& v) {
  CheckSameShape(u, v);
  Amplitude s{0.0, 0.0};
  auto ua = u.amplitudes();
  auto va = v.amplitudes();
  for (std::size_t i = 0; i < ua.size(); ++i) s += std::conj(ua[i]) * va[i];
  return s;
}

Amplitude MatrixElement(const StateVector& u, const PauliWord& e,
                        const StateVector& v) {
  CheckSameShape(u, v);
  if (e.a.size() != v.num_qudits() || e.b.size() != v.num_qudits()) {
    throw Error(ErrorCode::kDimensionMismatch, "Pauli word length != qudit count");
  }
  const Field& f = v.field();
  const auto w = PhaseTable(f.p());
  std::vector<std::size_t> strides(v.num_qudits(), 1);
  for (std::size_t t = v.num_qudits(); t-- > 1;) strides[t - 1] = strides[t] * f.q();
  auto ua = u.amplitudes();
  auto va = v.amplitudes();
  Amplitude s{0.0, 0.0};
  ForEachBasis(v.num_qudits(), f.q(), va.size(),
               [&](std::size_t idx, const std::vector<Symbol>& digits) {
                 if (va[idx] == Amplitude{0.0, 0.0}) return;
                 const auto [target, exponent] = Apply(f, strides, digits, e.a, e.b);
                 s += std::conj(ua[target]) * w[exponent] * va[idx];
               });
  return s;
}

double Fidelity(const StateVector& u, const StateVector& v) {
  return std::norm(Inner(u, v));
}

StateVector EncodeSecret(const QssScheme& scheme, Symbol secret,
                         std::uint64_t max_amplitudes) {
  const Field& f = scheme.field();
  if (!f.Contains(secret)) {
    throw Error(ErrorCode::kBadEntry, "secret is not an element of " + f.Name());
  }
  StateVector sv(f, scheme.n(), max_amplitudes);
  auto amps = sv.mutable_amplitudes();
  amps[0] = 0.0;
  const double amp =
      1.0 / std::sqrt(static_cast<double>(scheme.dual().NumCodewords()));
  Vector shifted(scheme.n());
  scheme.dual().ForEachCodeword([&](const Vector& x) {
    for (std::size_t t = 0; t < x.size(); ++t) {
      shifted[t] = f.Add(x[t], f.Mul(secret, scheme.g().values[t]));
    }
    amps[sv.IndexOf(shifted)] = amp;
  });
  return sv;
}

Symbol CombineShares(const QssScheme& scheme, std::span<const Symbol> shares,
                     const Codeword& c) {
  const Field& f = scheme.field();
  if (!scheme.IsLogical(c.values)) {
    throw Error(ErrorCode::kNotAuthorizedWitness, "c is not in C \\ C-dual");
  }
  const Symbol alpha_beta = f.Dot(c.values, scheme.g().values);
  return f.Mul(f.Inv(alpha_beta), f.Dot(c.values, shares));
}

Recovery Recover(const QssScheme& scheme, const StateVector& state,
                 const Codeword& c, double eps, std::uint64_t max_amplitudes) {
  const Field& f = scheme.field();
  if (c.size() != scheme.n() || !scheme.IsLogical(c.values)) {
    throw Error(ErrorCode::kNotAuthorizedWitness, "c is not in C \\ C-dual");
  }
  if (state.num_qudits() != scheme.n() || !(state.field() == f)) {
    throw Error(ErrorCode::kDimensionMismatch, "state is not over the scheme's qudits");
  }

  StateVector work = state.WithAncilla(max_amplitudes);
  const std::size_t ancilla = scheme.n();
  for (std::size_t t = 0; t < scheme.n(); ++t) {
    const Symbol cj = c.values[t];
    if (cj == 0) continue;
    work.ApplyMultiply(t, cj);
    work.ApplyAdd(t, ancilla);
    work.ApplyMultiply(t, f.Inv(cj));
  }

  const std::uint32_t q = f.q();
  auto amps = work.amplitudes();
  std::vector<double> mass(q, 0.0);
  double total = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const double m = std::norm(amps[idx]);
    mass[idx % q] += m;
    total += m;
  }
  Symbol readout = 0;
  for (Symbol v = 1; v < q; ++v) {
    if (mass[v] > mass[readout]) readout = v;
  }
  const double point_mass = total > 0.0 ? mass[readout] / total : 0.0;
  if (point_mass < 1.0 - eps) {
    throw Error(ErrorCode::kNonDeterministicAncilla,
                "largest ancilla outcome carries mass " + std::to_string(point_mass));
  }

  const Symbol alpha_beta = f.Dot(c.values, scheme.g().values);
  const Symbol alpha = f.Div(alpha_beta, scheme.beta());

  StateVector post(f, scheme.n(), max_amplitudes);
  auto post_amps = post.mutable_amplitudes();
  const double scale = 1.0 / std::sqrt(mass[readout]);
  for (std::size_t idx = 0; idx < post_amps.size(); ++idx) {
    post_amps[idx] = amps[idx * q + readout] * scale;
  }
  return Recovery{f.Mul(f.Inv(alpha_beta), readout), readout, alpha, point_mass,
                  std::move(post)};
}

}  // namespace qss
