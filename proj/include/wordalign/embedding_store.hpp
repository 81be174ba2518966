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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wordalign {

/// Raised by the embedding loaders. The message names the offending line
/// (text format) or record index (binary format).
class EmbeddingFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-owning view of one embedding row. Valid while the owning table lives.
struct WordVector {
  std::span<const double> components;
  double norm = 0.0;
};

/// Token -> dense vector map. Rows are stored contiguously in 64-bit
/// precision with their Euclidean norms cached at insertion.
///
/// Not synchronized: populate it from one thread, then share it as const.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  /// Adds a row. Returns false (and counts a duplicate) if the token is
  /// already present; the first occurrence is kept.
  bool insert(std::string token, std::span<const double> components);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  std::size_t duplicates() const { return duplicates_; }

  std::optional<std::size_t> index_of(std::string_view token) const;
  WordVector row(std::size_t index) const;
  const std::string& token(std::size_t index) const { return tokens_[index]; }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::size_t dimension_;
  std::vector<std::string> tokens_;
  std::vector<double> values_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
  std::size_t duplicates_ = 0;
};

using Vocabulary = std::unordered_set<std::string>;

struct LoadOptions {
  /// When set, only tokens in this set are stored. Filtered-out rows are
  /// still validated.
  const Vocabulary* restrict_to = nullptr;
};

enum class EmbeddingFormat { text, binary, automatic };

EmbeddingFormat parse_embedding_format(std::string_view name);

/// word2vec text format: optional "V D" header, then "token v1 ... vD" rows.
EmbeddingTable load_text_format(std::istream& in, const LoadOptions& options = {});

/// word2vec binary format: "V D\n" header, then V records of
/// "token" ' ' D little-endian float32, each optionally followed by '\n'.
EmbeddingTable load_binary_format(std::istream& in, const LoadOptions& options = {});

/// Opens `path` and dispatches on `format`; `automatic` picks binary for a
/// `.bin` extension and text otherwise.
EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               EmbeddingFormat format,
                               const LoadOptions& options = {});

/// Writes the table in word2vec binary format. Components are narrowed to
/// float32.
void write_binary_format(const EmbeddingTable& table, std::ostream& out);

/// Writes the table in word2vec text format with a "V D" header.
void write_text_format(const EmbeddingTable& table, std::ostream& out);

/// Looks up `token`, then its ASCII-lowercased form when
/// `fallback_lowercase` is set.
std::optional<WordVector> lookup(const EmbeddingTable& table, std::string_view token,
                                 bool fallback_lowercase);

/// Same resolution rule as lookup(), returning the row index.
std::optional<std::size_t> resolve(const EmbeddingTable& table, std::string_view token,
                                   bool fallback_lowercase);

/// Cosine similarity clamped to [-1, 1]; 0 when either vector has zero norm.
double cosine(const WordVector& u, const WordVector& v);

std::string ascii_lowercase(std::string_view s);

}  // namespace wordalign
