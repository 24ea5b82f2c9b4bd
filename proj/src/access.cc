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

#include "qss/access.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <thread>

#include "qss/error.h"

namespace qss {
namespace {

std::uint64_t OperatorCount(std::uint32_t q, std::size_t support_size) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < 2 * support_size; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= q;
  }
  return count;
}

void CheckOperatorCap(const OracleOptions& options, std::uint32_t q,
                      std::size_t support_size) {
  const std::uint64_t count = OperatorCount(q, support_size);
  if (!options.force && count > options.max_operators) {
    throw Error(ErrorCode::kOperatorScanTooLarge,
                std::to_string(count) + " operators on " +
                    std::to_string(support_size) + " qudits exceed cap " +
                    std::to_string(options.max_operators));
  }
}

unsigned ResolveThreads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QSS_THREADS")) {
    const unsigned long v = std::strtoul(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t FullMask(std::size_t n) {
  return n == 64 ? ~0ull : (1ull << n) - 1;
}

}  // namespace

PartySet PartySet::FromPositions(std::vector<int> positions, std::size_t n) {
  if (n > 64) throw Error(ErrorCode::kBadPartySet, "at most 64 parties");
  std::sort(positions.begin(), positions.end());
  PartySet s;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int p = positions[i];
    if (p < 1 || static_cast<std::size_t>(p) > n) {
      throw Error(ErrorCode::kBadPartySet,
                  "party " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && positions[i - 1] == p) {
      throw Error(ErrorCode::kBadPartySet, "duplicate party " + std::to_string(p));
    }
    s.mask_ |= 1ull << (p - 1);
  }
  s.positions_ = std::move(positions);
  return s;
}

PartySet PartySet::FromMask(std::uint64_t mask) {
  PartySet s;
  s.mask_ = mask;
  for (int bit = 0; bit < 64; ++bit) {
    if (mask & (1ull << bit)) s.positions_.push_back(bit + 1);
  }
  return s;
}

PartySet PartySet::Complement(std::size_t n) const {
  return FromMask(FullMask(n) & ~mask_);
}

std::string PartySet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(positions_[i]);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const PartySet& a, const PartySet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.positions_ <=> b.positions_;
}

bool AccessStructure::IsAuthorized(const PartySet& t) const {
  return std::any_of(gamma_min.begin(), gamma_min.end(),
                     [&](const PartySet& m) { return m.IsSubsetOf(t); });
}

bool AccessStructure::IsAntichain() const {
  for (std::size_t i = 0; i < gamma_min.size(); ++i) {
    for (std::size_t j = 0; j < gamma_min.size(); ++j) {
      if (i != j && gamma_min[i].IsSubsetOf(gamma_min[j])) return false;
    }
  }
  return true;
}

AccessStructure GammaFromTheorem(const QssScheme& scheme, std::uint64_t cap) {
  AccessStructure gamma;
  gamma.n = scheme.n();
  gamma.source = StructureSource::kTheorem;
  for (const auto& mc : MinimalCodewordsOutsideDual(scheme.code(), cap)) {
    gamma.gamma_min.push_back(PartySet::FromPositions(mc.word.Support(), scheme.n()));
    gamma.multiplicity.push_back(mc.multiplicity);
  }
  if (!gamma.IsAntichain()) {
    throw std::logic_error("minimal codeword supports do not form an antichain");
  }
  return gamma;
}

GottesmanOracle::GottesmanOracle(const QssScheme& scheme,
                                 const OracleOptions& options)
    : field_(scheme.field()), n_(scheme.n()), options_(options) {
  const std::uint64_t cap =
      options.force ? std::numeric_limits<std::uint64_t>::max() : options.max_amplitudes;
  states_.reserve(field_.q());
  for (Symbol i = 0; i < field_.q(); ++i) {
    states_.push_back(EncodeSecret(scheme, i, cap));
    std::vector<Term> terms;
    const auto amps = states_.back().amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      if (amps[idx] == Amplitude{0.0, 0.0}) continue;
      terms.push_back({idx, states_.back().DigitsOf(idx), amps[idx]});
    }
    terms_.push_back(std::move(terms));
  }
  strides_.assign(n_, 1);
  for (std::size_t t = n_; t-- > 1;) strides_[t - 1] = strides_[t] * field_.q();
  for (Symbol t = 0; t < field_.p(); ++t) phases_.push_back(RootOfUnity(field_.p(), t));
}

Amplitude GottesmanOracle::Element(Symbol i, const PauliWord& e, Symbol j) const {
  const auto bra = states_[i].amplitudes();
  Amplitude sum{0.0, 0.0};
  for (const Term& term : terms_[j]) {
    std::size_t target = 0;
    std::uint64_t exponent = 0;
    for (std::size_t t = 0; t < n_; ++t) {
      const Symbol x = term.digits[t];
      target += field_.Add(x, e.a[t]) * strides_[t];
      if (e.b[t] != 0 && x != 0) exponent += field_.Trace(field_.Mul(e.b[t], x));
    }
    sum += std::conj(bra[target]) * phases_[exponent % field_.p()] * term.amplitude;
  }
  return sum;
}

template <typename Visit>
void GottesmanOracle::ForEachOperator(std::uint64_t mask, Visit&& visit) const {
  std::vector<std::size_t> pos;
  for (std::size_t t = 0; t < n_; ++t) {
    if (mask & (1ull << t)) pos.push_back(t);
  }
  const std::uint32_t q = field_.q();
  PauliWord e = PauliWord::Identity(n_);
  // Odometer over (a_t, b_t) for t in pos; b digits run fastest.
  while (true) {
    if (!visit(static_cast<const PauliWord&>(e))) return;
    std::size_t d = 2 * pos.size();
    bool carried_out = true;
    while (d-- > 0) {
      Symbol& digit = d < pos.size() ? e.a[pos[d]] : e.b[pos[d - pos.size()]];
      if (++digit < q) {
        carried_out = false;
        break;
      }
      digit = 0;
    }
    if (carried_out) return;
  }
}

OracleVerdict GottesmanOracle::IsUnauthorized(const PartySet& t) const {
  CheckOperatorCap(options_, field_.q(), t.size());
  OracleVerdict verdict;
  ForEachOperator(t.mask(), [&](const PauliWord& f) {
    const Amplitude ref = Element(0, f, 0);
    for (Symbol i = 1; i < states_.size(); ++i) {
      const Amplitude v = Element(i, f, i);
      if (std::abs(v - ref) >= options_.eps) {
        verdict.holds = false;
        verdict.witness = OracleWitness{f, 0, i, v, ref};
        return false;
      }
    }
    return true;
  });
  return verdict;
}

OracleVerdict GottesmanOracle::IsAuthorized(const PartySet& t) const {
  const PartySet rest = t.Complement(n_);
  CheckOperatorCap(options_, field_.q(), rest.size());
  OracleVerdict verdict;
  ForEachOperator(rest.mask(), [&](const PauliWord& e) {
    for (Symbol i = 0; i < states_.size(); ++i) {
      for (Symbol j = 0; j < states_.size(); ++j) {
        if (i == j) continue;
        const Amplitude v = Element(i, e, j);
        if (std::abs(v) >= options_.eps) {
          verdict.holds = false;
          verdict.witness = OracleWitness{e, i, j, v, Amplitude{0.0, 0.0}};
          return false;
        }
      }
    }
    return true;
  });
  return verdict;
}

OracleVerdict IsUnauthorizedOracle(const QssScheme& scheme, const PartySet& t,
                                   const OracleOptions& options) {
  CheckOperatorCap(options, scheme.q(), t.size());
  return GottesmanOracle(scheme, options).IsUnauthorized(t);
}

OracleVerdict IsAuthorizedOracle(const QssScheme& scheme, const PartySet& t,
                                 const OracleOptions& options) {
  CheckOperatorCap(options, scheme.q(), scheme.n() - t.size());
  return GottesmanOracle(scheme, options).IsAuthorized(t);
}

OracleReport FullOracleStructure(const QssScheme& scheme,
                                 const OracleOptions& options) {
  const std::size_t n = scheme.n();
  // The empty set's complement and the full set both need n-qudit scans.
  CheckOperatorCap(options, scheme.q(), n);
  if (n > 30) {
    throw Error(ErrorCode::kOperatorScanTooLarge, "2^n subsets are out of reach");
  }
  const GottesmanOracle oracle(scheme, options);
  const std::size_t num_subsets = std::size_t{1} << n;
  std::vector<std::uint8_t> authorized(num_subsets, 0);
  std::vector<std::uint8_t> unauthorized(num_subsets, 0);

  const unsigned threads =
      std::min<unsigned>(ResolveThreads(options.threads),
                         static_cast<unsigned>(num_subsets));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t m = w; m < num_subsets; m += threads) {
          const PartySet t = PartySet::FromMask(m);
          authorized[m] = oracle.IsAuthorized(t).holds;
          unauthorized[m] = oracle.IsUnauthorized(t).holds;
        }
      });
    }
  }

  OracleReport report;
  report.subsets_scanned = num_subsets;
  report.structure.n = n;
  report.structure.source = StructureSource::kOracle;
  for (std::size_t m = 0; m < num_subsets; ++m) {
    const PartySet t = PartySet::FromMask(m);
    if (authorized[m] == unauthorized[m]) report.dichotomy_violations.push_back(t);
    if (authorized[m]) {
      report.authorized.push_back(t);
      if (authorized[FullMask(n) & ~m]) report.complementary_authorized.push_back(t);
    }
    bool minimal = authorized[m];
    for (std::size_t bit = 0; bit < n; ++bit) {
      const std::size_t b = std::size_t{1} << bit;
      if (m & b) {
        if (authorized[m ^ b]) minimal = false;
        // Unauthorized sets are closed under removing a party.
        if (unauthorized[m] && !unauthorized[m ^ b]) {
          report.monotonicity_violations.emplace_back(PartySet::FromMask(m ^ b), t);
        }
      } else if (authorized[m] && !authorized[m | b]) {
        report.monotonicity_violations.emplace_back(t, PartySet::FromMask(m | b));
      }
    }
    if (minimal) {
      report.structure.gamma_min.push_back(t);
      report.structure.multiplicity.push_back(1);
    }
  }
  std::sort(report.authorized.begin(), report.authorized.end());
  std::sort(report.dichotomy_violations.begin(), report.dichotomy_violations.end());
  std::sort(report.structure.gamma_min.begin(), report.structure.gamma_min.end());
  return report;
}

StructureDiff CompareStructures(const AccessStructure& a, const AccessStructure& b) {
  if (a.n != b.n) {
    throw Error(ErrorCode::kSizeMismatch, "structures over " + std::to_string(a.n) +
                                              " and " + std::to_string(b.n) + " parties");
  }
  std::vector<PartySet> x = a.gamma_min;
  std::vector<PartySet> y = b.gamma_min;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  StructureDiff diff;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                      std::back_inserter(diff.only_in_first));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(),
                      std::back_inserter(diff.only_in_second));
  return diff;
}

DetectabilityReport CheckDetectabilityLink(const QssScheme& scheme,
                                           std::size_t max_subset_size) {
  DetectabilityReport report;
  const std::size_t n = scheme.n();
  const std::uint32_t q = scheme.q();
  for (const auto& mc : MinimalCodewordsOutsideDual(scheme.code())) {
    const std::uint64_t full = mc.word.SupportMask();
    // Proper submasks of the support, including the empty set.
    for (std::uint64_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
      const PartySet t = PartySet::FromMask(sub);
      if (t.size() > max_subset_size) {
        ++report.subsets_skipped;
      } else {
        ++report.subsets_checked;
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i) {
          if (sub & (1ull << i)) pos.push_back(i);
        }
        PauliWord e = PauliWord::Identity(n);
        const std::uint64_t count = OperatorCount(q, pos.size());
        for (std::uint64_t code = 1; code < count; ++code) {
          std::uint64_t rest = code;
          for (std::size_t d = 0; d < pos.size(); ++d) {
            e.a[pos[d]] = static_cast<Symbol>(rest % q);
            rest /= q;
            e.b[pos[d]] = static_cast<Symbol>(rest % q);
            rest /= q;
          }
          ++report.words_checked;
          if (ClassifyError(scheme, e) != ErrorClass::kDetectable) {
            report.passed = false;
            if (!report.witness) report.witness.emplace(t, e);
          }
        }
      }
      if (sub == 0) break;
    }
  }
  return report;
}

std::vector<PartySet> MissingMinimumWeightSupports(const QssScheme& scheme,
                                                   const AccessStructure& gamma) {
  std::vector<PartySet> missing;
  scheme.code().ForEachCodeword([&](const Vector& v) {
    const Codeword c{v};
    if (c.Weight() != scheme.d() || scheme.code().DualContains(v)) return;
    const PartySet s = PartySet::FromPositions(c.Support(), scheme.n());
    const bool present =
        std::find(gamma.gamma_min.begin(), gamma.gamma_min.end(), s) !=
        gamma.gamma_min.end();
    if (!present && std::find(missing.begin(), missing.end(), s) == missing.end()) {
      missing.push_back(s);
    }
  });
  std::sort(missing.begin(), missing.end());
  return missing;
}

}  // namespace qss
