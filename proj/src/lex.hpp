// Copyright 2026 The unirow Authors
//
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

// Tokenizer helpers shared by the text formats.

#ifndef UNIROW_SRC_LEX_HPP_
#define UNIROW_SRC_LEX_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "unirow/ring.hpp"

namespace unirow::lex {

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

inline bool peek(std::string_view s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  return pos < s.size() && s[pos] == c;
}

inline Int parse_int(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected integer", start);
  std::string tok(s.substr(start, pos - start));
  if (tok[0] == '+') tok.erase(0, 1);
  return Int(tok);
}

inline std::string parse_ident(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
    ++pos;
  return std::string(s.substr(start, pos - start));
}

}  // namespace unirow::lex

#endif  // UNIROW_SRC_LEX_HPP_
