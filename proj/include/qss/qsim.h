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

#ifndef QSS_QSIM_H_
#define QSS_QSIM_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qss/codes.h"
#include "qss/css.h"
#include "qss/gf.h"

namespace qss {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultEps = 1e-9;
inline constexpr std::uint64_t kDefaultMaxAmplitudes = 1ull << 22;

// Dense state of `num_qudits` q-level systems. Basis index is the base-q
// integer of the digit string, leftmost qudit most significant.
class StateVector {
 public:
  // |0...0>. Throws DimensionTooLarge if q^num_qudits > max_amplitudes.
  StateVector(Field field, std::size_t num_qudits,
              std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

  // |x>. Throws BadEntry for entries outside F_q.
  static StateVector Basis(const Field& field, std::span<const Symbol> x,
                           std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

  const Field& field() const { return field_; }
  std::size_t num_qudits() const { return num_qudits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }

  std::size_t IndexOf(std::span<const Symbol> x) const;
  Vector DigitsOf(std::size_t index) const;
  Amplitude At(std::span<const Symbol> x) const { return amplitudes_[IndexOf(x)]; }

  double Norm() const;

  // |x> -> w^{tr(b.x)} |x + a>, i.e. Z(b) first, then X(a).
  void ApplyPauli(const PauliWord& e);
  void ApplyX(std::span<const Symbol> a);
  void ApplyZ(std::span<const Symbol> b);
  // M(c): |x> -> |c x> on one qudit. Throws ZeroMultiplier.
  void ApplyMultiply(std::size_t qudit, Symbol c);
  // A: |x>|y> -> |x>|x + y>. Throws SameWire.
  void ApplyAdd(std::size_t control, std::size_t target);

  // Copy with one extra qudit in |0> appended as the least significant digit.
  StateVector WithAncilla(std::uint64_t max_amplitudes = kDefaultMaxAmplitudes) const;

 private:
  void CheckQudit(std::size_t qudit) const;

  Field field_;
  std::size_t num_qudits_;
  std::vector<std::size_t> strides_;
  std::vector<Amplitude> amplitudes_;
};

// e^{2 pi j t / p}.
Amplitude RootOfUnity(std::uint32_t p, Symbol t);

// <u|v>. Throws DimensionMismatch.
Amplitude Inner(const StateVector& u, const StateVector& v);

// <u| X(a)Z(b) |v>, computed without materializing X(a)Z(b)|v>.
Amplitude MatrixElement(const StateVector& u, const PauliWord& e,
                        const StateVector& v);

// |<u|v>|^2.
double Fidelity(const StateVector& u, const StateVector& v);

// |C-dual|^{-1/2} sum_{x in C-dual} |x + i g>.
StateVector EncodeSecret(const QssScheme& scheme, Symbol secret,
                         std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

// (c . g)^{-1} sum_j c_j s_j on classical share values, where c . g is the
// product alpha * beta for c = alpha g + s_c.
Symbol CombineShares(const QssScheme& scheme, std::span<const Symbol> shares,
                     const Codeword& c);

struct Recovery {
  Symbol secret = 0;
  Symbol ancilla = 0;       // raw ancilla readout, alpha * beta * secret
  Symbol alpha = 0;         // c = alpha g + s_c
  double ancilla_mass = 0;  // probability of the readout
  StateVector post_state;   // input qudits after the ancilla is removed
};

// Runs the ancilla circuit M(c_j), A(j -> ancilla), M(c_j^{-1}) over
// j in supp(c) and reads the ancilla. `c` must lie in C \ C-dual
// (NotAuthorizedWitness). The readout must carry mass >= 1 - eps
// (NonDeterministicAncilla).
Recovery Recover(const QssScheme& scheme, const StateVector& state,
                 const Codeword& c, double eps = kDefaultEps,
                 std::uint64_t max_amplitudes = kDefaultMaxAmplitudes);

}  // namespace qss

#endif  // QSS_QSIM_H_
