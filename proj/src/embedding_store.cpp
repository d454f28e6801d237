// Copyright 2026 The fairvec Authors.
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

#include "fairvec/embedding_store.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fairvec/diagnostics.hpp"
#include "fairvec/error.hpp"

namespace fairvec {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_size(std::string_view tok, std::size_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

bool parse_double(std::string_view tok, double& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size() && std::isfinite(out);
}

std::string where(std::string_view source, std::size_t line_no) {
  std::ostringstream os;
  os << source << ":" << line_no;
  return os.str();
}

}  // namespace

VocabLimit::VocabLimit(std::size_t n) : max_words(n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "vocabulary limit must be >= 1");
  }
}

EmbeddingSet::EmbeddingSet(std::vector<std::string> vocab,
                           std::vector<double> values, std::size_t dim)
    : vocab_(std::move(vocab)), values_(std::move(values)), dim_(dim) {
  if (vocab_.empty()) {
    throw Error(ErrorCode::kEmptyEmbedding, "embedding has no words");
  }
  if (dim_ == 0 || values_.size() != vocab_.size() * dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix size does not match vocabulary size times dimension");
  }
  if (!all_finite()) {
    throw Error(ErrorCode::kParse, "embedding contains non-finite values");
  }
  index_.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    if (!index_.emplace(vocab_[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate word in vocabulary: " + vocab_[i]);
    }
  }
}

std::optional<std::size_t> EmbeddingSet::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t EmbeddingSet::index_of(std::string_view word) const {
  if (auto i = find(word)) return *i;
  throw Error(ErrorCode::kMissingWord,
              "word not in vocabulary: " + std::string(word));
}

bool EmbeddingSet::all_finite() const noexcept {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

EmbeddingSet load_vec(std::istream& in, VocabLimit limit,
                      std::string_view source) {
  std::vector<std::string> vocab;
  std::vector<double> values;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t dim = 0;
  std::size_t header_dim = 0;
  bool first_content_line = true;
  std::size_t duplicates = 0;

  std::string line;
  std::size_t line_no = 0;
  while (vocab.size() < limit.max_words && std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (first_content_line) {
      first_content_line = false;
      std::size_t n = 0;
      std::size_t d = 0;
      if (tokens.size() == 2 && parse_size(tokens[0], n) &&
          parse_size(tokens[1], d)) {
        header_dim = d;
        continue;
      }
    }

    if (tokens.size() < 2) {
      throw Error(ErrorCode::kParse,
                  where(source, line_no) + ": expected a word followed by values");
    }
    const std::size_t row_dim = tokens.size() - 1;
    if (dim == 0) {
      dim = row_dim;
      if (header_dim != 0 && header_dim != dim) {
        throw Error(ErrorCode::kDimensionMismatch,
                    where(source, line_no) + ": header declares dimension " +
                        std::to_string(header_dim) + " but row has " +
                        std::to_string(dim));
      }
    } else if (row_dim != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  where(source, line_no) + ": expected " + std::to_string(dim) +
                      " values, found " + std::to_string(row_dim));
    }

    const std::size_t start = values.size();
    values.resize(start + dim);
    bool all_zero = true;
    for (std::size_t j = 0; j < dim; ++j) {
      double v = 0.0;
      if (!parse_double(tokens[j + 1], v)) {
        throw Error(ErrorCode::kParse,
                    where(source, line_no) + ": malformed value '" +
                        std::string(tokens[j + 1]) + "'");
      }
      values[start + j] = v;
      if (v != 0.0) all_zero = false;
    }

    std::string word(tokens[0]);
    if (all_zero) {
      values.resize(start);
      warn(where(source, line_no) + ": skipping all-zero vector for '" + word +
           "'");
      continue;
    }
    if (seen.count(word) != 0) {
      values.resize(start);
      ++duplicates;
      warn(where(source, line_no) + ": duplicate word '" + word +
           "', keeping first occurrence");
      continue;
    }
    seen.emplace(word, vocab.size());
    vocab.push_back(std::move(word));
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIo, std::string(source) + ": read failure");
  }
  if (vocab.empty()) {
    throw Error(ErrorCode::kEmptyEmbedding,
                std::string(source) + ": no usable embedding rows");
  }
  return EmbeddingSet(std::move(vocab), std::move(values), dim);
}

EmbeddingSet load_vec_file(const std::filesystem::path& path, VocabLimit limit) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return load_vec(in, limit, path.string());
}

void save_vec(const EmbeddingSet& emb, std::ostream& out) {
  out << emb.size() << ' ' << emb.dim() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < emb.size(); ++i) {
    out << emb.word(i);
    for (double v : emb.row(i)) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(p - buf));
    }
    out << '\n';
  }
}

void save_vec_file(const EmbeddingSet& emb, const std::filesystem::path& path) {
  if (path.empty()) {
    throw Error(ErrorCode::kIo, "cannot save embedding: empty path");
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  save_vec(emb, out);
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, "write failure on " + path.string());
  }
}

EmbeddingSet snapshot(const EmbeddingSet& emb) { return emb; }

}  // namespace fairvec
