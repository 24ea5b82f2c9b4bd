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

#include "qss/code_file.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "qss/error.h"

namespace qss {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void Fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::uint64_t ParseUint(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    Fail(line, "expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return v;
}

// Parses "<key>=<int>".
std::uint64_t ParseAssignment(const std::string& tok, std::string_view key,
                              std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) {
    Fail(line, "expected " + prefix + "<int>, got '" + tok + "'");
  }
  return ParseUint(std::string_view(tok).substr(prefix.size()), line);
}

}  // namespace

LinearCode ParseCodeText(std::string_view text) {
  const auto lines = Tokenize(text);
  std::size_t at = 0;
  auto expect_header = [&](std::string_view header, std::size_t arity) -> const Line& {
    if (at >= lines.size()) Fail(lines.empty() ? 1 : lines.back().number, "missing '" + std::string(header) + "' line");
    const Line& l = lines[at];
    if (l.tokens[0] != header) {
      Fail(l.number, "expected '" + std::string(header) + "', got '" + l.tokens[0] + "'");
    }
    if (arity > 0 && l.tokens.size() != arity + 1) {
      Fail(l.number, "'" + std::string(header) + "' takes " + std::to_string(arity) + " fields");
    }
    ++at;
    return l;
  };

  const Line& field_line = expect_header("field:", 2);
  const auto p = ParseAssignment(field_line.tokens[1], "p", field_line.number);
  const auto m = ParseAssignment(field_line.tokens[2], "m", field_line.number);
  if (p > UINT32_MAX || m > 64) Fail(field_line.number, "field parameters out of range");

  std::optional<std::vector<std::uint32_t>> poly;
  if (at < lines.size() && lines[at].tokens[0] == "poly:") {
    const Line& l = lines[at++];
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const auto c = ParseUint(l.tokens[i], l.number);
      if (c >= p) Fail(l.number, "polynomial coefficient outside [0, p)");
      coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    poly = std::move(coeffs);
  }
  const Field field = Field::Make(static_cast<std::uint32_t>(p),
                                  static_cast<std::uint32_t>(m), poly);

  const Line& rows_line = expect_header("rows:", 2);
  const auto k = ParseAssignment(rows_line.tokens[1], "k", rows_line.number);
  const auto n = ParseAssignment(rows_line.tokens[2], "n", rows_line.number);
  if (k == 0 || n == 0) Fail(rows_line.number, "k and n must be positive");

  Matrix rows;
  for (std::uint64_t r = 0; r < k; ++r) {
    if (at >= lines.size()) {
      Fail(rows_line.number, "expected " + std::to_string(k) + " rows, found " +
                                 std::to_string(r));
    }
    const Line& l = lines[at++];
    if (l.tokens.size() != n) {
      Fail(l.number, "expected " + std::to_string(n) + " entries, got " +
                         std::to_string(l.tokens.size()));
    }
    Vector row;
    row.reserve(n);
    for (const auto& tok : l.tokens) {
      const auto v = ParseUint(tok, l.number);
      if (v >= field.q()) {
        Fail(l.number, "entry " + tok + " outside [0, " + std::to_string(field.q()) + ")");
      }
      row.push_back(static_cast<Symbol>(v));
    }
    rows.push_back(std::move(row));
  }
  if (at < lines.size()) Fail(lines[at].number, "unexpected trailing content");
  return LinearCode::FromGenerator(field, rows);
}

LinearCode ParseCodeFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseCodeText(ss.str());
}

std::string FormatCodeFile(const LinearCode& code) {
  std::ostringstream os;
  const Field& f = code.field();
  os << "field: p=" << f.p() << " m=" << f.m() << "\n";
  if (f.m() > 1) {
    os << "poly:";
    for (auto c : f.poly()) os << " " << c;
    os << "\n";
  }
  os << "rows: k=" << code.k() << " n=" << code.n() << "\n";
  for (const auto& row : code.generator()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  return os.str();
}

std::string Fnv1aHex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace qss
