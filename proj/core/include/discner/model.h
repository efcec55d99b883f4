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

#ifndef DISCNER_MODEL_H_
#define DISCNER_MODEL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discner/automaton.h"
#include "discner/lattice.h"
#include "discner/losses.h"
#include "discner/mention.h"
#include "discner/tag_matrix.h"
#include "discner/tags.h"

namespace discner {

// 64-bit FNV-1a.
std::uint64_t Fnv1a(std::string_view bytes);

// Hashed feature indices of every word: bias, lowercased word, lowercased
// previous and next words, 3-byte prefix and suffix. Indices may repeat
// within a position when features collide; repeats count twice.
std::vector<std::vector<std::uint32_t>> ExtractFeatures(
    std::span<const std::string> tokens, std::size_t dim);

// Linear scorer w(i, t) = sum over features f of word i of theta(f, t).
//
// Parameters are stored as scale * values so that L2 decay is a scalar
// multiplication.
class LinearScorer {
 public:
  static constexpr std::size_t kDefaultDim = std::size_t{1} << 18;

  explicit LinearScorer(std::size_t dim = kDefaultDim, TagMode mode = TagMode::kSemantic);

  std::size_t dim() const { return dim_; }
  TagMode mode() const { return mode_; }

  double param(std::size_t feature, int tag) const {
    return scale_ * values_[feature * kNumTags + tag];
  }
  void set_param(std::size_t feature, int tag, double value) {
    values_[feature * kNumTags + tag] = value / scale_;
  }
  void AddToParam(std::size_t feature, int tag, double delta) {
    values_[feature * kNumTags + tag] += delta / scale_;
  }
  // Multiplies every parameter by `factor` > 0.
  void Decay(double factor);
  // Folds the scale into the stored values.
  void Normalize();

  WeightMatrix Score(std::span<const std::string> tokens) const;
  WeightMatrix ScoreFeatures(
      const std::vector<std::vector<std::uint32_t>> &features) const;

  // Text format:
  //   discner-linear-model 1
  //   dim <D>
  //   mode semantic|structural
  //   tags CB CI O DB-Bx DB-By DI-Bx DI-By DI-Ix DI-Iy DI-O
  //   nonzero <K>
  //   <feature> <tag index> <value>     K lines, %.17g values
  void Save(std::ostream &out) const;
  // Throws ParseError on malformed input.
  static LinearScorer Load(std::istream &in);

 private:
  std::size_t dim_;
  TagMode mode_;
  double scale_ = 1.0;
  std::vector<double> values_;
};

// Builds the grammar of a mode once and predicts with it.
class Tagger {
 public:
  explicit Tagger(TagMode mode);

  TagMode mode() const { return mode_; }
  const Automaton &grammar() const { return grammar_; }
  Lattice LatticeFor(int length) const { return Intersect(grammar_, length); }

  // Best well-formed tag sequence under the scorer.
  TagSequence BestTags(const LinearScorer &scorer,
                       std::span<const std::string> tokens) const;
  // Mentions of the best tag sequence; never fails to decode.
  MentionSet Predict(const LinearScorer &scorer, std::span<const std::string> tokens) const;
  // Predicts every sentence, spreading the work over `threads` threads.
  // Output order follows input order.
  std::vector<MentionSet> PredictAll(const LinearScorer &scorer,
                                     const std::vector<std::vector<std::string>> &sentences,
                                     int threads = 1) const;

 private:
  TagMode mode_;
  Automaton grammar_;
};

enum class LossKind { kNll, kPartial, kHardEm };

std::string_view LossName(LossKind loss);
std::optional<LossKind> ParseLoss(std::string_view name);

struct TrainConfig {
  LossKind loss = LossKind::kNll;
  TagMode mode = TagMode::kSemantic;
  int epochs = 20;
  double learning_rate = 0.1;
  double l2 = 0.0;
  std::uint64_t seed = 1;
  std::size_t dim = LinearScorer::kDefaultDim;

  // Throws ConfigError.
  void Validate() const;
};

// A training sentence: its tokens and the tag sequences compatible with its
// gold mentions. The NLL loss trains on the first member.
struct TrainingExample {
  std::vector<std::string> tokens;
  PartialLabelSet labels;
};

struct TrainLog {
  std::vector<double> epoch_mean_loss;
};

// Plain SGD over the examples, visiting them in an order shuffled per epoch
// from `config.seed`.
LinearScorer Train(const std::vector<TrainingExample> &examples,
                   const TrainConfig &config, TrainLog *log = nullptr);

// Loss and gradient of one example with respect to the scorer output.
LossResult ExampleLoss(const Lattice &lattice, const WeightMatrix &weights,
                       const TrainingExample &example, LossKind loss);

}  // namespace discner

#endif  // DISCNER_MODEL_H_
