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

#include "qss/error.h"

namespace qss {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::kMissingPolynomial: return "MissingPolynomial";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kBadEntry: return "BadEntry";
    case ErrorCode::kNotCssPair: return "NotCss";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kImpureCode: return "ImpureCode";
    case ErrorCode::kBadG: return "BadG";
    case ErrorCode::kZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::kSameWire: return "SameWire";
    case ErrorCode::kNotAuthorizedWitness: return "NotAuthorizedWitness";
    case ErrorCode::kNonDeterministicAncilla: return "NonDeterministicAncilla";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBadPartySet: return "BadPartySet";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kOperatorScanTooLarge: return "OperatorScanTooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory CategoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEnumerationTooLarge:
    case ErrorCode::kDimensionTooLarge:
    case ErrorCode::kOperatorScanTooLarge:
      return ErrorCategory::kResource;
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
      return ErrorCategory::kInput;
    default:
      return ErrorCategory::kValidation;
  }
}

}  // namespace qss
