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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fairvec {

struct VocabLimit {
  std::size_t max_words = 22000;

  VocabLimit() = default;
  explicit VocabLimit(std::size_t n);
};

// Vocabulary plus a dense row-major n x d matrix of word vectors. Vectors are
// kept exactly as loaded (unnormalized). Reads are safe from any number of
// threads; writers must own their copy.
class EmbeddingSet {
 public:
  EmbeddingSet() = default;

  // Validates every invariant: unique words, finite values, rows * dim match.
  EmbeddingSet(std::vector<std::string> vocab, std::vector<double> values,
               std::size_t dim);

  std::size_t size() const noexcept { return vocab_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return vocab_.empty(); }

  const std::vector<std::string>& vocab() const noexcept { return vocab_; }
  const std::string& word(std::size_t index) const { return vocab_.at(index); }

  std::optional<std::size_t> find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word).has_value(); }
  // Throws Error(kMissingWord).
  std::size_t index_of(std::string_view word) const;

  std::span<const double> row(std::size_t index) const {
    return {values_.data() + index * dim_, dim_};
  }
  std::span<double> row(std::size_t index) {
    return {values_.data() + index * dim_, dim_};
  }
  std::span<const double> values() const noexcept { return values_; }

  bool all_finite() const noexcept;

  friend bool operator==(const EmbeddingSet& a, const EmbeddingSet& b) {
    return a.dim_ == b.dim_ && a.vocab_ == b.vocab_ && a.values_ == b.values_;
  }

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> values_;
  std::size_t dim_ = 0;
};

// Parses the `.vec` text format: optional "n d" header, then one
// "word v1 ... vd" line per word. Keeps the first `limit.max_words` distinct
// words in file order. Duplicate words keep their first occurrence; all-zero
// rows are skipped. Both emit a warning.
EmbeddingSet load_vec(std::istream& in, VocabLimit limit = {},
                      std::string_view source = "<stream>");
EmbeddingSet load_vec_file(const std::filesystem::path& path,
                           VocabLimit limit = {});

// Writes a header line and shortest round-trip decimal values.
void save_vec(const EmbeddingSet& emb, std::ostream& out);
void save_vec_file(const EmbeddingSet& emb, const std::filesystem::path& path);

// Deep copy; the trainer's immutable record of its starting point.
EmbeddingSet snapshot(const EmbeddingSet& emb);

}  // namespace fairvec
