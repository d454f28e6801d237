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

#include "synthetic.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include "fairvec/linalg.hpp"

namespace fairvec::testing {

namespace {

// Random vector of norm `scale` supported on coordinates [begin, end).
Vector random_content(std::mt19937_64& rng, std::size_t dim, double scale, std::size_t begin,
                      std::size_t end) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim, 0.0);
  for (std::size_t i = begin; i < end; ++i) v[i] = normal(rng);
  const double n = norm(v);
  for (auto& x : v) x *= scale / n;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

SyntheticSuite make_synthetic_suite(const SyntheticSpec& spec) {
  const std::size_t used = 2 * spec.pairs + 2 * spec.biased_per_side + spec.targets;
  if (used > spec.vocab || spec.dim < 3 || spec.topics == 0) {
    throw std::invalid_argument("synthetic settings do not fit the vocabulary size");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  // Coordinate 0 is the bias direction; topical words live in [1, split) and
  // fillers in [split, dim).
  const std::size_t split = spec.shared_filler_space ? spec.dim : 1 + (spec.dim - 1) / 2;
  auto topical = [&](double scale) { return random_content(rng, spec.dim, scale, 1, split); };
  auto filler = [&](double scale) {
    return spec.shared_filler_space ? random_content(rng, spec.dim, scale, 1, spec.dim)
                                    : random_content(rng, spec.dim, scale, split, spec.dim);
  };
  std::vector<Vector> centers;
  for (std::size_t t = 0; t < spec.topics; ++t) centers.push_back(topical(1.0));

  std::vector<std::string> vocab;
  std::vector<Vector> content;
  std::vector<double> side;
  auto push = [&](std::string word, Vector c, double s) {
    vocab.push_back(std::move(word));
    content.push_back(std::move(c));
    side.push_back(s);
  };

  SyntheticSuite suite;
  // Fillers come first so the rank-based negative sampler treats them as the
  // most frequent words.
  const std::size_t fillers = spec.vocab - used;
  for (std::size_t i = 0; i < fillers; ++i) {
    push("w" + std::to_string(i), filler(1.0), 0.0);
  }
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    const Vector c = topical(1.0);
    const std::string m = "he" + std::to_string(i);
    const std::string f = "she" + std::to_string(i);
    push(m, c, spec.pair_strength);
    push(f, c, -spec.pair_strength);
    suite.bundle.gender_pairs.pairs.emplace_back(m, f);
  }
  for (std::size_t i = 0; i < spec.biased_per_side; ++i) {
    const Vector& center = centers[i % spec.topics];
    const Vector noise = topical(spec.noise);
    const std::string m = "mb" + std::to_string(i);
    const std::string f = "fb" + std::to_string(i);
    push(m, add(center, noise), spec.biased_strength);
    // Mirror image: same content, opposite side.
    push(f, add(center, noise), -spec.biased_strength);
    suite.male_biased.push_back(m);
    suite.female_biased.push_back(f);
  }
  for (std::size_t i = 0; i < spec.targets; ++i) {
    const Vector& center = centers[i % spec.topics];
    const std::string w = "job" + std::to_string(i);
    push(w, add(center, topical(spec.noise)), spec.target_strength);
    suite.targets.push_back(w);
  }
  std::vector<double> values;
  values.reserve(vocab.size() * spec.dim);
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    Vector v = content[r];
    v[0] = side[r];
    values.insert(values.end(), v.begin(), v.end());
  }
  suite.embedding = EmbeddingSet(vocab, std::move(values), spec.dim);

  suite.bundle.professions = suite.targets;
  suite.bundle.gendered_words = {};
  WeatTest career{"Jobs A vs Jobs B / Male vs Female", {}, {}, {}, {}, "gender", "AB"};
  for (std::size_t i = 0; i < 8 && 2 * i + 1 < spec.targets; ++i) {
    career.x.push_back(suite.targets[2 * i]);
    career.y.push_back(suite.targets[2 * i + 1]);
  }
  for (const auto& [m, f] : suite.bundle.gender_pairs.pairs) {
    career.a.push_back(m);
    career.b.push_back(f);
  }
  suite.bundle.weat_tests.push_back(career);
  suite.bundle.candidates = build_candidates(suite.bundle, false);

  // Similarity rows over target words, scored by content cosine.
  std::vector<std::size_t> eligible;
  for (std::size_t r = vocab.size() - spec.targets; r < vocab.size(); ++r) eligible.push_back(r);
  std::uniform_int_distribution<std::size_t> pick_slot(0, eligible.size() - 1);
  auto pick = [&](std::mt19937_64& g) { return eligible[pick_slot(g)]; };
  suite.similarity.name = "synthetic-sim";
  while (suite.similarity.rows.size() < spec.similarity_rows) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    if (a == b) continue;
    suite.similarity.rows.push_back({vocab[a], vocab[b], cosine(content[a], content[b])});
  }
  return suite;
}

void write_synthetic_suite(const SyntheticSuite& suite, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw std::runtime_error("cannot write synthetic file");
    return out;
  };
  {
    auto out = open(kGenderPairsFile);
    for (const auto& [m, f] : suite.bundle.gender_pairs.pairs) out << m << ' ' << f << '\n';
  }
  {
    auto out = open(kWeatTestsFile);
    for (const auto& t : suite.bundle.weat_tests) {
      out << '[' << t.name << "]\nkind: " << t.kind << '\n';
      if (!t.gendered_sets.empty()) out << "gendered: " << t.gendered_sets << '\n';
      auto line = [&](const char* key, const std::vector<std::string>& ws) {
        out << key << ':';
        for (const auto& w : ws) out << ' ' << w;
        out << '\n';
      };
      line("X", t.x);
      line("Y", t.y);
      line("A", t.a);
      line("B", t.b);
      out << '\n';
    }
  }
  {
    auto out = open(kProfessionsFile);
    for (const auto& w : suite.bundle.professions) out << w << '\n';
  }
  {
    auto out = open(kGenderedWordsFile);
    for (const auto& w : suite.bundle.gendered_words) out << w << '\n';
  }
  {
    auto out = open("similarity.txt");
    out.precision(17);
    for (const auto& r : suite.similarity.rows) {
      out << r.word1 << ' ' << r.word2 << ' ' << r.score << '\n';
    }
  }
  save_vec_file(suite.embedding, dir / "embedding.vec");
}

}  // namespace fairvec::testing
