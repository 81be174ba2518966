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

#include "wordalign/embedding_store.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

namespace wordalign {

namespace {

// Scaled so that tiny nonzero vectors never report a zero norm.
double euclidean_norm(std::span<const double> v) {
  double largest = 0.0;
  for (double c : v) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : v) {
    const double s = c / largest;
    sum += s * s;
  }
  return largest * std::sqrt(sum);
}

bool is_field_separator(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_field_separator(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_field_separator(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool parse_exact(std::string_view field, T& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool wanted(const LoadOptions& options, const std::string& token) {
  return options.restrict_to == nullptr || options.restrict_to->contains(token);
}

}  // namespace

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw std::invalid_argument("embedding dimension must be positive");
}

bool EmbeddingTable::insert(std::string token, std::span<const double> components) {
  if (components.size() != dimension_) {
    throw std::invalid_argument(fmt::format("vector for '{}' has {} components, expected {}",
                                            token, components.size(), dimension_));
  }
  if (index_.contains(token)) {
    ++duplicates_;
    return false;
  }
  index_.emplace(token, tokens_.size());
  tokens_.push_back(std::move(token));
  values_.insert(values_.end(), components.begin(), components.end());
  norms_.push_back(euclidean_norm(components));
  return true;
}

std::optional<std::size_t> EmbeddingTable::index_of(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WordVector EmbeddingTable::row(std::size_t index) const {
  return WordVector{std::span<const double>(values_).subspan(index * dimension_, dimension_),
                    norms_[index]};
}

EmbeddingFormat parse_embedding_format(std::string_view name) {
  if (name == "text" || name == "txt") return EmbeddingFormat::text;
  if (name == "bin" || name == "binary") return EmbeddingFormat::binary;
  if (name == "auto") return EmbeddingFormat::automatic;
  throw std::invalid_argument(fmt::format("unknown embedding format '{}'", name));
}

EmbeddingTable load_text_format(std::istream& in, const LoadOptions& options) {
  std::optional<EmbeddingTable> table;
  std::vector<double> row;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!seen_content) {
      seen_content = true;
      std::uint64_t count = 0;
      std::uint64_t dim = 0;
      if (fields.size() == 2 && parse_exact(fields[0], count) && parse_exact(fields[1], dim)) {
        if (dim == 0) {
          throw EmbeddingFormatError(fmt::format("line {}: header dimension must be positive",
                                                 line_no));
        }
        table.emplace(dim);
        continue;
      }
    }

    if (fields.size() < 2) {
      throw EmbeddingFormatError(fmt::format("line {}: row has no vector components", line_no));
    }
    const std::size_t found = fields.size() - 1;
    if (!table) table.emplace(found);
    if (found != table->dimension()) {
      throw EmbeddingFormatError(fmt::format("line {}: expected {} components, found {}",
                                             line_no, table->dimension(), found));
    }

    row.resize(found);
    for (std::size_t k = 0; k < found; ++k) {
      if (!parse_exact(fields[k + 1], row[k])) {
        throw EmbeddingFormatError(fmt::format("line {}: component {} is not a number: '{}'",
                                               line_no, k + 1, fields[k + 1]));
      }
      if (!std::isfinite(row[k])) {
        throw EmbeddingFormatError(fmt::format("line {}: component {} is not finite",
                                               line_no, k + 1));
      }
    }

    std::string token(fields[0]);
    if (wanted(options, token)) table->insert(std::move(token), row);
  }

  if (!seen_content) throw EmbeddingFormatError("empty embedding stream");
  return std::move(*table);
}

EmbeddingTable load_binary_format(std::istream& in, const LoadOptions& options) {
  std::string header;
  for (char c; header.size() < 256 && in.get(c) && c != '\n';) header.push_back(c);
  if (header.empty() && in.eof()) throw EmbeddingFormatError("empty embedding stream");
  if (!header.empty() && header.back() == '\r') header.pop_back();

  const auto fields = split_fields(header);
  std::uint64_t count = 0;
  std::uint64_t dim = 0;
  if (fields.size() != 2 || !parse_exact(fields[0], count) || !parse_exact(fields[1], dim)) {
    throw EmbeddingFormatError(fmt::format("binary header is not \"<count> <dimension>\": '{}'",
                                           header));
  }
  if (dim == 0) throw EmbeddingFormatError("binary header dimension must be positive");

  EmbeddingTable table(dim);
  std::vector<unsigned char> raw(dim * 4);
  std::vector<double> row(dim);

  for (std::uint64_t record = 0; record < count; ++record) {
    std::string token;
    char c;
    if (in.peek() == '\n') in.get(c);
    while (true) {
      if (!in.get(c)) {
        throw EmbeddingFormatError(fmt::format("record {}: stream truncated inside token",
                                               record));
      }
      if (c == ' ') break;
      token.push_back(c);
    }
    if (token.empty()) throw EmbeddingFormatError(fmt::format("record {}: empty token", record));

    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
      throw EmbeddingFormatError(fmt::format("record {} ('{}'): stream truncated inside vector",
                                             record, token));
    }
    for (std::size_t k = 0; k < dim; ++k) {
      const unsigned char* b = raw.data() + 4 * k;
      const std::uint32_t bits = std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) |
                                 (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
      const float value = std::bit_cast<float>(bits);
      if (!std::isfinite(value)) {
        throw EmbeddingFormatError(fmt::format("record {} ('{}'): component {} is not finite",
                                               record, token, k + 1));
      }
      row[k] = value;
    }

    if (wanted(options, token)) table.insert(std::move(token), row);
  }
  return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path, EmbeddingFormat format,
                               const LoadOptions& options) {
  if (format == EmbeddingFormat::automatic) {
    format = path.extension() == ".bin" ? EmbeddingFormat::binary : EmbeddingFormat::text;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open embeddings '{}'", path.string()));
  return format == EmbeddingFormat::binary ? load_binary_format(in, options)
                                           : load_text_format(in, options);
}

void write_binary_format(const EmbeddingTable& table, std::ostream& out) {
  out << table.size() << ' ' << table.dimension() << '\n';
  std::vector<char> raw(table.dimension() * 4);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string& token = table.token(i);
    if (token.find_first_of(" \n") != std::string::npos) {
      throw std::invalid_argument(
          fmt::format("token '{}' cannot be written in binary format", token));
    }
    const WordVector v = table.row(i);
    for (std::size_t k = 0; k < v.components.size(); ++k) {
      const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v.components[k]));
      for (int b = 0; b < 4; ++b) raw[4 * k + b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
    }
    out << token << ' ';
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    out << '\n';
  }
}

void write_text_format(const EmbeddingTable& table, std::ostream& out) {
  out << table.size() << ' ' << table.dimension() << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.token(i);
    for (double c : table.row(i).components) out << ' ' << fmt::format("{}", c);
    out << '\n';
  }
}

std::string ascii_lowercase(std::string_view s) {
  std::string lowered(s);
  for (char& c : lowered) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return lowered;
}

std::optional<std::size_t> resolve(const EmbeddingTable& table, std::string_view token,
                                   bool fallback_lowercase) {
  if (auto index = table.index_of(token)) return index;
  if (fallback_lowercase) return table.index_of(ascii_lowercase(token));
  return std::nullopt;
}

std::optional<WordVector> lookup(const EmbeddingTable& table, std::string_view token,
                                 bool fallback_lowercase) {
  if (auto index = resolve(table, token, fallback_lowercase)) return table.row(*index);
  return std::nullopt;
}

double cosine(const WordVector& u, const WordVector& v) {
  if (u.components.size() != v.components.size()) {
    throw std::invalid_argument("cosine of vectors with different dimensions");
  }
  if (u.norm == 0.0 || v.norm == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t k = 0; k < u.components.size(); ++k) dot += u.components[k] * v.components[k];
  return std::clamp(dot / (u.norm * v.norm), -1.0, 1.0);
}

}  // namespace wordalign
