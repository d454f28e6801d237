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

#include "fairvec/gender_pairs.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "fairvec/diagnostics.hpp"
#include "fairvec/embedding_store.hpp"
#include "fairvec/error.hpp"

namespace fairvec {

std::vector<std::string> GenderPairSet::words() const {
  std::vector<std::string> out;
  out.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

void GenderPairSet::validate() const {
  if (pairs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "gender pair set is empty");
  }
  std::set<std::string> seen;
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw Error(ErrorCode::kInvalidArgument, "gender pair repeats word: " + a);
    }
    for (const std::string* w : {&a, &b}) {
      if (!seen.insert(*w).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "word appears in two gender pairs: " + *w);
      }
    }
  }
}

GenderPairSet parse_gender_pairs(std::istream& in, std::string_view source) {
  GenderPairSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParse, std::string(source) + ":" +
                                         std::to_string(line_no) +
                                         ": expected exactly two words");
    }
    out.pairs.emplace_back(tokens[0], tokens[1]);
  }
  out.validate();
  return out;
}

GenderPairSet load_gender_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return parse_gender_pairs(in, path.string());
}

GenderPairSet resolve_pairs(const GenderPairSet& pairs, const EmbeddingSet& emb) {
  GenderPairSet out;
  for (const auto& [a, b] : pairs.pairs) {
    if (emb.contains(a) && emb.contains(b)) {
      out.pairs.emplace_back(a, b);
    } else {
      warn("dropping gender pair (" + a + ", " + b + "): not in vocabulary");
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::kMissingWord, "no gender pair resolves in the embedding");
  }
  return out;
}

}  // namespace fairvec
