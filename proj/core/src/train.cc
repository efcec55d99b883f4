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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "discner/errors.h"
#include "discner/grammar.h"
#include "discner/model.h"

namespace discner {

std::string_view LossName(LossKind loss) {
  switch (loss) {
    case LossKind::kNll: return "nll";
    case LossKind::kPartial: return "partial";
    case LossKind::kHardEm: return "hard-em";
  }
  return "unknown";
}

std::optional<LossKind> ParseLoss(std::string_view name) {
  if (name == "nll") return LossKind::kNll;
  if (name == "partial") return LossKind::kPartial;
  if (name == "hard-em") return LossKind::kHardEm;
  return std::nullopt;
}

void TrainConfig::Validate() const {
  if (epochs < 1) throw ConfigError("epochs must be at least 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning rate must be positive");
  }
  if (!(l2 >= 0.0) || learning_rate * l2 >= 1.0) {
    throw ConfigError("l2 must be non-negative and below 1 / learning rate");
  }
  if (dim == 0 || dim > (std::size_t{1} << 32)) {
    throw ConfigError("feature dimension must be in [1, 2^32]");
  }
}

LossResult ExampleLoss(const Lattice &lattice, const WeightMatrix &weights,
                       const TrainingExample &example, LossKind loss) {
  switch (loss) {
    case LossKind::kNll:
      return Nll(lattice, weights, example.labels.members().front());
    case LossKind::kPartial:
      return PartialNll(lattice, weights, example.labels);
    case LossKind::kHardEm:
      return HardEmStep(lattice, weights, example.labels).loss;
  }
  throw ConfigError("unknown loss");
}

LinearScorer Train(const std::vector<TrainingExample> &examples,
                   const TrainConfig &config, TrainLog *log) {
  config.Validate();
  const Automaton grammar = GrammarAutomaton(config.mode);
  LinearScorer scorer(config.dim, config.mode);

  std::vector<std::vector<std::vector<std::uint32_t>>> features;
  features.reserve(examples.size());
  for (const TrainingExample &ex : examples) {
    features.push_back(ExtractFeatures(ex.tokens, config.dim));
  }

  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double total = 0.0;
    for (size_t k : order) {
      const TrainingExample &ex = examples[k];
      if (ex.tokens.empty()) continue;
      WeightMatrix w = scorer.ScoreFeatures(features[k]);
      Lattice lattice = Intersect(grammar, w.length());
      LossResult step = ExampleLoss(lattice, w, ex, config.loss);
      total += step.loss;

      if (config.l2 > 0.0) scorer.Decay(1.0 - config.learning_rate * config.l2);
      for (int i = 0; i < w.length(); ++i) {
        auto grad = step.gradient.row(i);
        for (std::uint32_t f : features[k][i]) {
          for (int t = 0; t < kNumTags; ++t) {
            if (grad[t] != 0.0) scorer.AddToParam(f, t, -config.learning_rate * grad[t]);
          }
        }
      }
    }
    if (log != nullptr) {
      log->epoch_mean_loss.push_back(examples.empty() ? 0.0 : total / examples.size());
    }
  }
  scorer.Normalize();
  return scorer;
}

}  // namespace discner
