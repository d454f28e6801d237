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

#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fairvec/error.hpp"
#include "fairvec/wordlists.hpp"
#include "test_util.hpp"

using namespace fairvec;

namespace {

bool has(const std::vector<std::string>& v, const std::string& w) {
  return std::find(v.begin(), v.end(), w) != v.end();
}

constexpr const char* kTwoTests =
    "# comment\n"
    "[Base]\nkind: baseline\nX: rose tulip\nY: ant flea\nA: love peace\nB: hate war\n"
    "\n[Jobs / Gender]\nkind: gender\ngendered: AB\nX: engineer math\nY: nurse art\n"
    "A: he man\nB: she woman\n";

}  // namespace

TEST_CASE("weat block parsing") {
  std::istringstream in(kTwoTests);
  const auto tests = parse_weat_tests(in);
  REQUIRE(tests.size() == 2);
  CHECK(tests[0].name == "Base");
  CHECK(tests[0].kind == "baseline");
  CHECK(tests[0].y == std::vector<std::string>{"ant", "flea"});
  CHECK(tests[1].kind == "gender");
  CHECK(tests[1].gendered_sets == "AB");
  CHECK(tests[1].b == std::vector<std::string>{"she", "woman"});
}

TEST_CASE("malformed weat blocks name the offending line") {
  auto parse_error = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      parse_weat_tests(in, "t.txt");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
      return e.what();
    }
    FAIL("expected a parse error");
    return {};
  };
  CHECK(parse_error("X: a b\n").find("t.txt:1") != std::string::npos);
  CHECK(parse_error("[T]\nX: a\nY: b\nA: c\n").find("t.txt:1") != std::string::npos);
  CHECK(parse_error("[T]\nkind: weird\nX: a\nY: b\nA: c\nB: d\n").find("unknown kind") !=
        std::string::npos);
  CHECK(parse_error("[T]\nkind: gender\nX: a\nY: b\nA: c\nB: d\n").find("gendered") !=
        std::string::npos);
  CHECK(parse_error("[T]\nX: a\nX: b\n").find("t.txt:3") != std::string::npos);
  CHECK(parse_error("[T]\nfoo: a\n").find("t.txt:2") != std::string::npos);
  CHECK(parse_error("[T]\nnot a pair\n").find("t.txt:2") != std::string::npos);
  CHECK(parse_error("[T]\nX: a b\nY: b\nA: c\nB: d\n").find("overlapping") != std::string::npos);
  CHECK(parse_error("[T\n").find("header") != std::string::npos);
}

TEST_CASE("word lists ignore comments and blanks") {
  std::istringstream in("# header\nnurse\n\nengineer  # inline\n  doctor \n");
  CHECK(parse_word_list(in) == std::vector<std::string>{"nurse", "engineer", "doctor"});
}

TEST_CASE("candidate construction") {
  std::istringstream in(kTwoTests);
  WordListBundle b;
  b.gender_pairs = GenderPairSet{{{"he", "she"}, {"king", "queen"}}};
  b.weat_tests = parse_weat_tests(in);
  b.professions = {"engineer", "nurse", "doctor", "actress", "king", "woman"};
  b.gendered_words = {"actress"};

  CHECK(b.gender_attribute_words() == std::vector<std::string>{"he", "man", "she", "woman"});
  CHECK(b.definitional_words() ==
        std::vector<std::string>{"he", "she", "king", "queen", "man", "woman"});
  // Gender-test targets first, then professions, deduplicated, minus gendered words.
  CHECK(build_candidates(b, false) ==
        std::vector<std::string>{"engineer", "math", "nurse", "art", "doctor"});
  const auto with_base = build_candidates(b, true);
  CHECK(has(with_base, "rose"));
  CHECK(has(with_base, "flea"));
  CHECK_FALSE(has(with_base, "love"));
}

TEST_CASE("XY-gendered tests contribute their attribute lists") {
  std::istringstream in(
      "[MF]\nkind: gender\ngendered: XY\nX: he man\nY: she woman\nA: career office\n"
      "B: home family\n");
  WordListBundle b;
  b.gender_pairs = GenderPairSet{{{"he", "she"}}};
  b.weat_tests = parse_weat_tests(in);
  CHECK(build_candidates(b, false) ==
        std::vector<std::string>{"career", "office", "home", "family"});
}

TEST_CASE("shipped bundle loads and is self-consistent") {
  const auto b = load_bundle(FAIRVEC_DATA_DIR);
  CHECK(b.gender_pairs.size() == 10);
  CHECK(b.gender_pairs.pairs.front() == std::make_pair(std::string("he"), std::string("she")));
  CHECK_NOTHROW(b.gender_pairs.validate());
  CHECK(b.weat_tests.size() >= 5);
  std::size_t gender_tests = 0;
  for (const auto& t : b.weat_tests) gender_tests += t.kind == "gender";
  CHECK(gender_tests >= 3);
  CHECK(b.professions.size() == 221);
  CHECK(b.professions.front() == "accountant");
  CHECK(b.professions.back() == "writer");
  CHECK(b.weat_tests.front().name == "Flowers vs Insects / Pleasant vs Unpleasant");
  CHECK_FALSE(b.candidates.empty());

  const std::set<std::string> cands(b.candidates.begin(), b.candidates.end());
  CHECK(cands.size() == b.candidates.size());
  for (const auto& w : b.definitional_words()) CHECK(cands.count(w) == 0);
  for (const auto& w : b.gendered_words) CHECK(cands.count(w) == 0);
  CHECK(cands.count("actress") == 0);
  CHECK(cands.count("actor") == 0);
  CHECK(cands.count("nurse") == 1);
  CHECK(cands.count("math") == 1);
  CHECK(cands.count("aster") == 0);
  CHECK(load_bundle(FAIRVEC_DATA_DIR, true).candidates.size() > b.candidates.size());
}

TEST_CASE("missing bundle files raise IO errors") {
  testing::TempDir dir("bundle");
  try {
    load_bundle(dir.path());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
    CHECK(std::string(e.what()).find(kGenderPairsFile) != std::string::npos);
  }
  std::ofstream(dir / kGenderPairsFile) << "he she\n";
  std::ofstream(dir / kWeatTestsFile) << "# nothing\n";
  std::ofstream(dir / kProfessionsFile) << "nurse\n";
  std::ofstream(dir / kGenderedWordsFile) << "\n";
  try {
    load_bundle(dir.path());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}
