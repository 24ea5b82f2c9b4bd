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

#ifndef QSS_ERROR_H_
#define QSS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qss {

enum class ErrorCode {
  // Field construction and arithmetic.
  kNonPrimeCharacteristic,
  kReduciblePolynomial,
  kMissingPolynomial,
  kDivisionByZero,
  kFieldMismatch,
  kLengthMismatch,
  // Codes.
  kZeroCode,
  kBadEntry,
  kNotCssPair,
  kWrongDimension,
  kImpureCode,
  kBadG,
  // Simulation.
  kZeroMultiplier,
  kSameWire,
  kNotAuthorizedWitness,
  kNonDeterministicAncilla,
  kDimensionMismatch,
  // Access structures.
  kBadPartySet,
  kSizeMismatch,
  // Resource guards.
  kEnumerationTooLarge,
  kDimensionTooLarge,
  kOperatorScanTooLarge,
  // Input.
  kParseError,
  kIoError,
};

// Coarse grouping used to pick a process exit status.
enum class ErrorCategory { kValidation, kResource, kInput };

std::string_view ErrorCodeName(ErrorCode code);
ErrorCategory CategoryOf(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return CategoryOf(code_); }

 private:
  ErrorCode code_;
};

}  // namespace qss

#endif  // QSS_ERROR_H_
