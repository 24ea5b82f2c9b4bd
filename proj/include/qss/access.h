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

#ifndef QSS_ACCESS_H_
#define QSS_ACCESS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qss/css.h"
#include "qss/qsim.h"

namespace qss {

// Sorted set of 1-indexed parties drawn from {1, ..., n}, n <= 64.
class PartySet {
 public:
  PartySet() = default;
  // Throws BadPartySet on duplicates or positions outside [1, n].
  static PartySet FromPositions(std::vector<int> positions, std::size_t n);
  static PartySet FromMask(std::uint64_t mask);

  const std::vector<int>& positions() const { return positions_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }

  bool IsSubsetOf(const PartySet& other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  PartySet Complement(std::size_t n) const;

  // "{3,10,11}".
  std::string ToString() const;

  // By size, then lexicographically.
  friend std::strong_ordering operator<=>(const PartySet& a, const PartySet& b);
  friend bool operator==(const PartySet& a, const PartySet& b) {
    return a.mask_ == b.mask_;
  }

 private:
  std::vector<int> positions_;
  std::uint64_t mask_ = 0;
};

enum class StructureSource { kTheorem, kOracle };

struct AccessStructure {
  std::size_t n = 0;
  std::vector<PartySet> gamma_min;  // sorted by (size, lex)
  std::vector<std::size_t> multiplicity;  // parallel to gamma_min
  StructureSource source = StructureSource::kTheorem;

  // T contains some minimal authorized set.
  bool IsAuthorized(const PartySet& t) const;
  bool IsAntichain() const;
};

// Supports of the minimal codewords of C \ C-dual.
AccessStructure GammaFromTheorem(const QssScheme& scheme,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct OracleOptions {
  double eps = kDefaultEps;
  std::uint64_t max_amplitudes = 1ull << 20;
  std::uint64_t max_operators = 1ull << 16;  // 4^8
  bool force = false;
  // 0 picks QSS_THREADS, then the hardware concurrency.
  unsigned threads = 0;
};

struct OracleWitness {
  PauliWord op;
  Symbol i = 0;
  Symbol j = 0;
  Amplitude lhs;  // <psi_i|op|psi_i> or <psi_i|op|psi_j>
  Amplitude rhs;  // <psi_0|op|psi_0> for the unauthorized test, 0 otherwise
};

struct OracleVerdict {
  bool holds = true;
  std::optional<OracleWitness> witness;
};

// Brute-force access test on the encoded states |psi_0>, ..., |psi_{q-1}>,
// scanning the Pauli basis X(a)Z(b) of operators supported within a set.
class GottesmanOracle {
 public:
  // Throws DimensionTooLarge if q^n > max_amplitudes and !force.
  GottesmanOracle(const QssScheme& scheme, const OracleOptions& options = {});

  // <psi_i|F|psi_i> is the same for every i, for all F supported within T.
  OracleVerdict IsUnauthorized(const PartySet& t) const;
  // <psi_i|E|psi_j> = 0 for all i != j, for all E supported within the
  // complement of T.
  OracleVerdict IsAuthorized(const PartySet& t) const;

  const std::vector<StateVector>& states() const { return states_; }
  const OracleOptions& options() const { return options_; }
  std::size_t n() const { return n_; }

  // <psi_i| X(a)Z(b) |psi_j>, summed over the nonzero amplitudes of psi_j.
  Amplitude Element(Symbol i, const PauliWord& e, Symbol j) const;

 private:
  struct Term {
    std::size_t index;
    std::vector<Symbol> digits;
    Amplitude amplitude;
  };

  // Calls visit(word) for every (a|b) with support inside `mask`; stops when
  // visit returns false.
  template <typename Visit>
  void ForEachOperator(std::uint64_t mask, Visit&& visit) const;

  Field field_;
  std::size_t n_;
  OracleOptions options_;
  std::vector<StateVector> states_;
  std::vector<std::vector<Term>> terms_;  // nonzero amplitudes per state
  std::vector<std::size_t> strides_;
  std::vector<Amplitude> phases_;  // w^t, t in [0, p)
};

OracleVerdict IsUnauthorizedOracle(const QssScheme& scheme, const PartySet& t,
                                   const OracleOptions& options = {});
OracleVerdict IsAuthorizedOracle(const QssScheme& scheme, const PartySet& t,
                                 const OracleOptions& options = {});

struct OracleReport {
  AccessStructure structure;
  std::uint64_t subsets_scanned = 0;
  std::vector<PartySet> authorized;  // every authorized subset, sorted
  // Sets that are both or neither authorized and unauthorized.
  std::vector<PartySet> dichotomy_violations;
  // (smaller, larger) pairs differing by one party that break monotonicity.
  std::vector<std::pair<PartySet, PartySet>> monotonicity_violations;
  // T with both T and its complement authorized.
  std::vector<PartySet> complementary_authorized;

  bool ok() const {
    return dichotomy_violations.empty() && monotonicity_violations.empty() &&
           complementary_authorized.empty() && structure.IsAntichain();
  }
};

// Classifies all 2^n subsets with both conditions.
OracleReport FullOracleStructure(const QssScheme& scheme,
                                 const OracleOptions& options = {});

struct StructureDiff {
  std::vector<PartySet> only_in_first;
  std::vector<PartySet> only_in_second;
  bool empty() const { return only_in_first.empty() && only_in_second.empty(); }
};

// Throws SizeMismatch when the party counts differ.
StructureDiff CompareStructures(const AccessStructure& a, const AccessStructure& b);

struct DetectabilityReport {
  bool passed = true;
  std::uint64_t subsets_checked = 0;
  std::uint64_t subsets_skipped = 0;  // larger than the size limit
  std::uint64_t words_checked = 0;
  std::optional<std::pair<PartySet, PauliWord>> witness;
};

// For each minimal codeword c and each proper subset T of supp(c) with
// |T| <= max_subset_size, every nonzero (a|b) supported within T must be
// Detectable.
DetectabilityReport CheckDetectabilityLink(const QssScheme& scheme,
                                           std::size_t max_subset_size);

// Supports of minimum-weight words of C \ C-dual missing from gamma_min.
std::vector<PartySet> MissingMinimumWeightSupports(const QssScheme& scheme,
                                                   const AccessStructure& gamma);

}  // namespace qss

#endif  // QSS_ACCESS_H_
