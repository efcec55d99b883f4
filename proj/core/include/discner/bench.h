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

#ifndef DISCNER_BENCH_H_
#define DISCNER_BENCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "discner/model.h"

namespace discner {

// Random sentences over a small synthetic vocabulary.
std::vector<std::vector<std::string>> SyntheticSentences(int count, int length,
                                                         std::uint64_t seed);

// Scorer with parameters drawn uniformly from [-scale, scale].
LinearScorer RandomScorer(std::size_t dim, TagMode mode, std::uint64_t seed,
                          double scale = 1.0);

struct ScalingPoint {
  int length = 0;
  double median_seconds = 0.0;  // time to predict the whole batch
  double sentences_per_second = 0.0;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  // points[k + 1].median_seconds / points[k].median_seconds
  std::vector<double> ratios;
};

// Times Predict over `sentences` synthetic sentences for every length,
// taking the median over `runs` repetitions.
ScalingReport MeasureScaling(const Tagger &tagger, const LinearScorer &scorer,
                             std::span<const int> lengths, int sentences,
                             int runs, std::uint64_t seed);

}  // namespace discner

#endif  // DISCNER_BENCH_H_
