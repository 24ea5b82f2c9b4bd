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

#ifndef QSS_CODE_FILE_H_
#define QSS_CODE_FILE_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "qss/codes.h"

namespace qss {

// Text format:
//
//   field: p=<int> m=<int>
//   poly: c0 c1 ... cm        (optional; needed when m > 1 without a default)
//   rows: k=<int> n=<int>
//   <k lines of n integers in [0, q)>
//
// '#' starts a comment; blank lines are ignored. Malformed input throws
// ParseError naming the line; invalid fields propagate their own errors.
LinearCode ParseCodeText(std::string_view text);
LinearCode ParseCodeFile(const std::filesystem::path& path);

// Writes the generator of `code` in the format above.
std::string FormatCodeFile(const LinearCode& code);

// 64-bit FNV-1a, hex encoded.
std::string Fnv1aHex(std::string_view bytes);

}  // namespace qss

#endif  // QSS_CODE_FILE_H_
