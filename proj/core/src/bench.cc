// Copyright 2026 The Discner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discner/bench.h"

#include <algorithm>
#include <chrono>
#include <random>

namespace discner {

namespace {

constexpr const char *kVocabulary[] = {
    "pain",   "in",      "arms",  "and",     "shoulders", "the",   "muscle",
    "aches",  "severe",  "legs",  "joint",   "swelling",  "of",    "knees",
    "i",      "had",     "some",  "cramps",  "back",      "neck",  "stiff",
    "after",  "taking",  "this",  "drug",    "feet",      "hands", "numb",
    "mild",   "rash",    "on",    "chest",   "face",      "was",   "very",
    "tired",  "nausea",  "with",  "dizzy",   "spells",
};

}  // namespace

std::vector<std::vector<std::string>> SyntheticSentences(int count, int length,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, std::size(kVocabulary) - 1);
  std::vector<std::vector<std::string>> out(count);
  for (auto &sentence : out) {
    sentence.reserve(length);
    for (int i = 0; i < length; ++i) sentence.emplace_back(kVocabulary[pick(rng)]);
  }
  return out;
}

LinearScorer RandomScorer(std::size_t dim, TagMode mode, std::uint64_t seed,
                          double scale) {
  LinearScorer scorer(dim, mode);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-scale, scale);
  for (std::size_t f = 0; f < dim; ++f) {
    for (int t = 0; t < kNumTags; ++t) scorer.set_param(f, t, draw(rng));
  }
  return scorer;
}

ScalingReport MeasureScaling(const Tagger &tagger, const LinearScorer &scorer,
                             std::span<const int> lengths, int sentences,
                             int runs, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::vector<std::vector<std::string>>> batches;
  for (int length : lengths) batches.push_back(SyntheticSentences(sentences, length, seed + length));
  size_t sink = 0;
  auto time_batch = [&](const std::vector<std::vector<std::string>> &batch) {
    auto start = Clock::now();
    for (const auto &sentence : batch) sink += tagger.Predict(scorer, sentence).size();
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  // One untimed pass, then the runs round-robin over the lengths so that
  // drift in machine load affects every length alike.
  for (const auto &batch : batches) time_batch(batch);
  std::vector<std::vector<double>> times(batches.size());
  for (int r = 0; r < runs; ++r) {
    for (size_t k = 0; k < batches.size(); ++k) times[k].push_back(time_batch(batches[k]));
  }
  ScalingReport report;
  for (size_t k = 0; k < batches.size(); ++k) {
    auto &t = times[k];
    std::nth_element(t.begin(), t.begin() + t.size() / 2, t.end());
    ScalingPoint point;
    point.length = lengths[k];
    point.median_seconds = t[t.size() / 2];
    point.sentences_per_second =
        point.median_seconds > 0 ? sentences / point.median_seconds : 0.0;
    report.points.push_back(point);
  }
  // Keeps the predictions observable so the loop is not optimized away.
  if (sink == static_cast<size_t>(-1) && !report.points.empty()) report.points[0].length = -1;
  for (size_t k = 1; k < report.points.size(); ++k) {
    report.ratios.push_back(report.points[k].median_seconds /
                            report.points[k - 1].median_seconds);
  }
  return report;
}

}  // namespace discner
