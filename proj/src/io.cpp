// Copyright 2026 The ptop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptop/io.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <vector>

#include "ptop/error.hpp"

namespace ptop {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Non-blank lines with comments removed.
std::vector<Line> ContentLines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (!line.empty()) out.push_back({number, Tokens(line)});
  }
  return out;
}

[[noreturn]] void SyntaxError(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ": " + what);
}

template <typename T>
std::optional<T> ParseUnsigned(std::string_view s, int base) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(),
                                         value, base);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

unsigned ParseCount(std::string_view s, std::size_t line) {
  auto v = ParseUnsigned<unsigned>(s, 10);
  if (!v) SyntaxError(line, "expected a non-negative integer, got '" +
                                std::string(s) + "'");
  return *v;
}

// Accepts only `<magic> 1` as the first content line.
void ExpectHeader(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) {
    throw Error(ErrorCode::kSyntaxError,
                "empty document, expected '" + std::string(magic) + " 1'");
  }
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic) {
    SyntaxError(h.number, "expected header '" + std::string(magic) + " 1'");
  }
  const unsigned version = ParseCount(h.tokens[1], h.number);
  if (version != 1) {
    throw Error(ErrorCode::kUnsupportedVersion,
                std::string(magic) + " version " + std::to_string(version));
  }
}

unsigned ExpectKeyword(const std::vector<Line>& lines, std::size_t index,
                       std::string_view key) {
  if (index >= lines.size()) {
    throw Error(ErrorCode::kSyntaxError,
                "missing '" + std::string(key) + " <size>' line");
  }
  const Line& l = lines[index];
  if (l.tokens.size() != 2 || l.tokens[0] != key) {
    SyntaxError(l.number, "expected '" + std::string(key) + " <size>'");
  }
  return ParseCount(l.tokens[1], l.number);
}

}  // namespace

SubsetMask ParseMask(std::string_view text) {
  std::optional<SubsetMask> v;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    v = ParseUnsigned<SubsetMask>(text.substr(2), 2);
  } else if (text.size() > 2 && text[0] == '0' &&
             (text[1] == 'x' || text[1] == 'X')) {
    v = ParseUnsigned<SubsetMask>(text.substr(2), 16);
  } else {
    v = ParseUnsigned<SubsetMask>(text, 10);
  }
  if (!v) {
    throw Error(ErrorCode::kSyntaxError,
                "invalid mask '" + std::string(text) + "'");
  }
  return *v;
}

Probability ParseProbability(std::string_view text) {
  Probability q = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                         q, std::chars_format::general);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kSyntaxError,
                "invalid probability '" + std::string(text) + "'");
  }
  CheckProbability(q);
  return q;
}

std::string FormatProbability(Probability q) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), q);
  return std::string(buf.data(), ptr);
}

WeightTable ParsePSpace(std::string_view text) {
  const std::vector<Line> lines = ContentLines(text);
  ExpectHeader(lines, "ptop");
  const GroundSize n = ExpectKeyword(lines, 1, "n");
  CheckGroundSize(n);
  std::vector<Entry> entries;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) SyntaxError(l.number, "expected '<mask> <p>'");
    try {
      entries.push_back({ParseMask(l.tokens[0]), ParseProbability(l.tokens[1])});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSyntaxError) throw;
      SyntaxError(l.number, e.detail());
    }
  }
  return WeightTable::Build(n, entries);
}

std::string SerializePSpace(const WeightTable& w) {
  const GroundSize n = w.ground_size();
  std::string out = "ptop 1\nn " + std::to_string(n) + "\n";
  const auto t = w.values();
  for (SubsetMask a = 0; a < t.size(); ++a) {
    if (t[a] == DefaultValue(a, n)) continue;
    out += std::to_string(a);
    out += ' ';
    out += FormatProbability(t[a]);
    out += '\n';
  }
  return out;
}

PointMap ParsePMap(std::string_view text) {
  const std::vector<Line> lines = ContentLines(text);
  ExpectHeader(lines, "pmap");
  const GroundSize dom = ExpectKeyword(lines, 1, "dom");
  const GroundSize cod = ExpectKeyword(lines, 2, "cod");
  CheckGroundSize(dom);
  CheckGroundSize(cod);
  std::vector<std::optional<GroundSize>> image(dom);
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) SyntaxError(l.number, "expected '<x> <f(x)>'");
    const unsigned x = ParseCount(l.tokens[0], l.number);
    const unsigned fx = ParseCount(l.tokens[1], l.number);
    if (x >= dom) {
      throw Error(ErrorCode::kRangeError,
                  "line " + std::to_string(l.number) + ": point " +
                      std::to_string(x) + " outside domain");
    }
    if (fx >= cod) {
      throw Error(ErrorCode::kRangeError,
                  "line " + std::to_string(l.number) + ": image " +
                      std::to_string(fx) + " outside codomain");
    }
    if (image[x]) {
      SyntaxError(l.number, "point " + std::to_string(x) + " mapped twice");
    }
    image[x] = fx;
  }
  std::vector<GroundSize> values(dom);
  for (GroundSize x = 0; x < dom; ++x) {
    if (!image[x]) {
      throw Error(ErrorCode::kSyntaxError,
                  "no image given for point " + std::to_string(x));
    }
    values[x] = *image[x];
  }
  return PointMap(dom, cod, std::move(values));
}

std::string SerializePMap(const PointMap& f) {
  std::string out = "pmap 1\ndom " + std::to_string(f.domain_size()) +
                    "\ncod " + std::to_string(f.codomain_size()) + "\n";
  for (GroundSize x = 0; x < f.domain_size(); ++x) {
    out += std::to_string(x) + " " + std::to_string(f(x)) + "\n";
  }
  return out;
}

std::string FormatReport(const ViolationReport& r) {
  std::string out(ViolationKindName(r.kind));
  out += ' ';
  out += std::to_string(r.a);
  if (r.kind == ViolationKind::kUnion ||
      r.kind == ViolationKind::kIntersection) {
    out += ' ';
    out += std::to_string(r.b);
    if (r.family != 0) out += " family " + std::to_string(r.family);
  }
  out += " required " + FormatProbability(r.required);
  out += " actual " + FormatProbability(r.actual);
  return out;
}

}  // namespace ptop
