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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wordalign {

enum class TokenizerPolicy {
  whitespace,  // split on Unicode whitespace runs
  punct,       // whitespace, then peel leading/trailing ASCII punctuation
};

TokenizerPolicy parse_tokenizer_policy(std::string_view name);
std::string_view to_string(TokenizerPolicy policy);

/// One hypothesis or reference sentence. `tokens` never holds empty strings.
struct Segment {
  std::vector<std::string> tokens;
  std::string source_text;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

/// Input is treated as UTF-8; invalid bytes are kept as token content.
Segment tokenize(std::string_view text, TokenizerPolicy policy = TokenizerPolicy::punct);

/// Collapses whitespace runs to one ASCII space and trims both ends.
std::string normalize_whitespace(std::string_view text);

}  // namespace wordalign
