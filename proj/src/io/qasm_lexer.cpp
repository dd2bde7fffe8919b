// Copyright 2026 The qinst Authors
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

#include <cctype>
#include <string>

#include "qinst/error.hpp"
#include "qinst/io/qasm.hpp"

namespace qinst::io {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int start_line = line;
    const int start_column = column;
    const std::size_t start = i;

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      advance(j - i);
      tokens.push_back({TokenKind::identifier, std::string(text.substr(start, i - start)),
                        start_line, start_column});
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t j = i;
      bool real = false;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j < text.size() && text[j] == '.') {
        real = true;
        ++j;
        while (j < text.size() && is_digit(text[j])) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && is_digit(text[k])) {
          real = true;
          j = k;
          while (j < text.size() && is_digit(text[j])) ++j;
        }
      }
      advance(j - i);
      tokens.push_back({real ? TokenKind::real : TokenKind::integer,
                        std::string(text.substr(start, i - start)), start_line,
                        start_column});
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') {
        throw ParseError("unterminated string", start_line, start_column);
      }
      advance(j + 1 - i);
      tokens.push_back({TokenKind::string, std::string(text.substr(start + 1, j - start - 1)),
                        start_line, start_column});
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance(2);
      tokens.push_back({TokenKind::symbol, "->", start_line, start_column});
      continue;
    }
    if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
      advance(2);
      tokens.push_back({TokenKind::symbol, "==", start_line, start_column});
      continue;
    }
    static constexpr std::string_view kSymbols = ";,()[]{}+-*/^";
    if (kSymbols.find(c) != std::string_view::npos) {
      advance(1);
      tokens.push_back({TokenKind::symbol, std::string(1, c), start_line, start_column});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start_line,
                     start_column);
  }
  tokens.push_back({TokenKind::end, "", line, column});
  return tokens;
}

}  // namespace qinst::io
