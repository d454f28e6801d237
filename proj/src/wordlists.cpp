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

#include "fairvec/wordlists.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fairvec/error.hpp"

namespace fairvec {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::ifstream open_in(const std::filesystem::path& dir, const char* name) {
  const auto path = dir / name;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "missing bundle file: " + path.string());
  return in;
}

void append_unique(std::vector<std::string>& out, std::unordered_set<std::string>& seen,
                   const std::vector<std::string>& words) {
  for (const auto& w : words) {
    if (seen.insert(w).second) out.push_back(w);
  }
}

}  // namespace

std::vector<WeatTest> parse_weat_tests(std::istream& in, std::string_view source) {
  std::vector<WeatTest> tests;
  std::string line;
  std::size_t line_no = 0;
  std::size_t block_line = 0;
  auto fail = [&](std::size_t at, const std::string& msg) {
    throw Error(ErrorCode::kParse, std::string(source) + ":" + std::to_string(at) + ": " + msg);
  };
  auto finish = [&]() {
    if (tests.empty()) return;
    const WeatTest& t = tests.back();
    if (t.x.empty() || t.y.empty() || t.a.empty() || t.b.empty()) {
      fail(block_line, "test '" + t.name + "' must define non-empty X, Y, A and B");
    }
    if (t.kind != "baseline" && t.kind != "gender") {
      fail(block_line, "test '" + t.name + "' has unknown kind '" + t.kind + "'");
    }
    if (t.kind == "gender" && t.gendered_sets != "XY" && t.gendered_sets != "AB") {
      fail(block_line, "gender test '" + t.name + "' needs 'gendered: XY' or 'gendered: AB'");
    }
    auto disjoint = [](const std::vector<std::string>& l, const std::vector<std::string>& r) {
      std::set<std::string> s(l.begin(), l.end());
      for (const auto& w : r) {
        if (s.count(w)) return false;
      }
      return true;
    };
    if (!disjoint(t.x, t.y) || !disjoint(t.a, t.b)) {
      fail(block_line, "test '" + t.name + "' has overlapping X/Y or A/B lists");
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3) fail(line_no, "malformed test header");
      finish();
      tests.emplace_back();
      tests.back().name = trim(std::string_view(s).substr(1, s.size() - 2));
      block_line = line_no;
      continue;
    }
    if (tests.empty()) fail(line_no, "content before the first [test] header");
    const auto colon = s.find(':');
    if (colon == std::string::npos) fail(line_no, "expected 'key: value'");
    const std::string key = trim(std::string_view(s).substr(0, colon));
    const std::string value = trim(std::string_view(s).substr(colon + 1));
    WeatTest& t = tests.back();
    if (key == "kind") {
      t.kind = value;
    } else if (key == "gendered") {
      t.gendered_sets = value;
    } else if (key == "X" || key == "Y" || key == "A" || key == "B") {
      auto& dst = key == "X" ? t.x : key == "Y" ? t.y : key == "A" ? t.a : t.b;
      if (!dst.empty()) fail(line_no, "list " + key + " defined twice");
      dst = split_words(value);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  finish();
  return tests;
}

std::vector<std::string> parse_word_list(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (auto& w : split_words(line)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> WordListBundle::gender_attribute_words() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const WeatTest& t : weat_tests) {
    if (t.kind != "gender") continue;
    if (t.gendered_sets == "XY") {
      append_unique(out, seen, t.x);
      append_unique(out, seen, t.y);
    } else {
      append_unique(out, seen, t.a);
      append_unique(out, seen, t.b);
    }
  }
  return out;
}

std::vector<std::string> WordListBundle::definitional_words() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  append_unique(out, seen, gender_pairs.words());
  append_unique(out, seen, gender_attribute_words());
  return out;
}

std::vector<std::string> build_candidates(const WordListBundle& bundle,
                                          bool include_baseline_targets) {
  std::vector<std::string> raw;
  std::unordered_set<std::string> seen;
  for (const WeatTest& t : bundle.weat_tests) {
    if (t.kind == "gender") {
      if (t.gendered_sets == "XY") {
        append_unique(raw, seen, t.a);
        append_unique(raw, seen, t.b);
      } else {
        append_unique(raw, seen, t.x);
        append_unique(raw, seen, t.y);
      }
    } else if (include_baseline_targets) {
      append_unique(raw, seen, t.x);
      append_unique(raw, seen, t.y);
    }
  }
  append_unique(raw, seen, bundle.professions);

  std::unordered_set<std::string> excluded;
  for (const auto& w : bundle.definitional_words()) excluded.insert(w);
  for (const auto& w : bundle.gendered_words) excluded.insert(w);
  std::vector<std::string> out;
  for (auto& w : raw) {
    if (excluded.count(w) == 0) out.push_back(std::move(w));
  }
  return out;
}

WordListBundle load_bundle(const std::filesystem::path& directory,
                           bool include_baseline_targets) {
  WordListBundle b;
  {
    auto in = open_in(directory, kGenderPairsFile);
    b.gender_pairs = parse_gender_pairs(in, (directory / kGenderPairsFile).string());
  }
  {
    auto in = open_in(directory, kWeatTestsFile);
    b.weat_tests = parse_weat_tests(in, (directory / kWeatTestsFile).string());
  }
  if (b.weat_tests.empty()) {
    throw Error(ErrorCode::kParse, (directory / kWeatTestsFile).string() + ": no tests");
  }
  {
    auto in = open_in(directory, kProfessionsFile);
    b.professions = parse_word_list(in);
  }
  {
    auto in = open_in(directory, kGenderedWordsFile);
    b.gendered_words = parse_word_list(in);
  }
  b.candidates = build_candidates(b, include_baseline_targets);
  return b;
}

}  // namespace fairvec
