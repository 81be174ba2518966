//  Copyright 2026 The wordalign Authors. All Rights Reserved.
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "wordalign/text_pipeline.hpp"

#include <cstdint>
#include <stdexcept>

#include <fmt/format.h>

namespace wordalign {

namespace {

// Byte length of the whitespace character starting at `i`, or 0.
std::size_t whitespace_length(std::string_view s, std::size_t i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char b0 = byte(i);
  if (b0 == ' ' || (b0 >= 0x09 && b0 <= 0x0D)) return 1;
  if (b0 == 0xC2 && i + 1 < s.size()) {
    const unsigned char b1 = byte(i + 1);
    return (b1 == 0x85 || b1 == 0xA0) ? 2 : 0;  // NEL, NBSP
  }
  if ((b0 == 0xE1 || b0 == 0xE2 || b0 == 0xE3) && i + 2 < s.size()) {
    const unsigned char b1 = byte(i + 1);
    const unsigned char b2 = byte(i + 2);
    if ((b1 & 0xC0) != 0x80 || (b2 & 0xC0) != 0x80) return 0;
    const std::uint32_t cp = ((b0 & 0x0Fu) << 12) | ((b1 & 0x3Fu) << 6) | (b2 & 0x3Fu);
    const bool ws = cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
                    cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
    return ws ? 3 : 0;
  }
  return 0;
}

bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

template <typename Fn>
void for_each_word(std::string_view text, Fn&& fn) {
  std::size_t i = 0;
  std::size_t start = 0;
  bool in_word = false;
  while (i < text.size()) {
    const std::size_t ws = whitespace_length(text, i);
    if (ws > 0) {
      if (in_word) fn(text.substr(start, i - start));
      in_word = false;
      i += ws;
    } else {
      if (!in_word) start = i;
      in_word = true;
      ++i;
    }
  }
  if (in_word) fn(text.substr(start));
}

void push_punct_split(std::string_view word, std::vector<std::string>& out) {
  std::size_t lead = 0;
  while (lead < word.size() && is_ascii_punct(word[lead])) ++lead;
  if (lead == word.size()) {
    for (char c : word) out.emplace_back(1, c);
    return;
  }
  std::size_t trail = word.size();
  while (trail > lead && is_ascii_punct(word[trail - 1])) --trail;

  for (std::size_t k = 0; k < lead; ++k) out.emplace_back(1, word[k]);
  out.emplace_back(word.substr(lead, trail - lead));
  for (std::size_t k = trail; k < word.size(); ++k) out.emplace_back(1, word[k]);
}

}  // namespace

TokenizerPolicy parse_tokenizer_policy(std::string_view name) {
  if (name == "whitespace") return TokenizerPolicy::whitespace;
  if (name == "punct") return TokenizerPolicy::punct;
  throw std::invalid_argument(fmt::format("unknown tokenizer '{}'", name));
}

std::string_view to_string(TokenizerPolicy policy) {
  return policy == TokenizerPolicy::whitespace ? "whitespace" : "punct";
}

Segment tokenize(std::string_view text, TokenizerPolicy policy) {
  Segment segment;
  segment.source_text = std::string(text);
  for_each_word(text, [&](std::string_view word) {
    if (policy == TokenizerPolicy::punct) {
      push_punct_split(word, segment.tokens);
    } else {
      segment.tokens.emplace_back(word);
    }
  });
  return segment;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  for_each_word(text, [&](std::string_view word) {
    if (!out.empty()) out.push_back(' ');
    out.append(word);
  });
  return out;
}

}  // namespace wordalign
