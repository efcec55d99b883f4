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

#include "discner/model.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "discner/bench.h"
#include "discner/errors.h"
#include "discner/inference.h"
#include "discner/losses.h"
#include "discner/scheme.h"
#include "oracle.h"
#include "toy_corpus.h"

namespace discner {
namespace {

const std::vector<std::string> kSentence = {"Pain", "in", "arms", "and", "shoulders"};

TEST(HashTest, Fnv1aReferenceValues) {
  EXPECT_EQ(Fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a("foobar"), 0x85944171f73967e8ULL);
}

TEST(FeatureTest, TraceOfTheFirstTwoWords) {
  const std::size_t dim = 1 << 20;
  auto h = [dim](std::string_view s) { return static_cast<std::uint32_t>(Fnv1a(s) % dim); };
  auto features = ExtractFeatures(std::span(kSentence).first(2), dim);
  ASSERT_EQ(features.size(), 2u);
  EXPECT_EQ(features[0], (std::vector<std::uint32_t>{h("bias"), h("w=pain"), h("p=<s>"),
                                                     h("n=in"), h("pre3=pai"),
                                                     h("suf3=ain")}));
  EXPECT_EQ(features[1], (std::vector<std::uint32_t>{h("bias"), h("w=in"), h("p=pain"),
                                                     h("n=</s>"), h("pre3=in"),
                                                     h("suf3=in")}));
}

TEST(ScorerTest, ScoreIsTheSumOfFeatureParameters) {
  LinearScorer scorer = RandomScorer(97, TagMode::kSemantic, 5);
  WeightMatrix w = scorer.Score(kSentence);
  auto features = ExtractFeatures(kSentence, 97);
  for (int i = 0; i < w.length(); ++i) {
    for (int t = 0; t < kNumTags; ++t) {
      double expected = 0.0;
      for (std::uint32_t f : features[i]) expected += scorer.param(f, t);
      EXPECT_NEAR(w.at(i, t), expected, 1e-12);
    }
  }
  EXPECT_EQ(scorer.Score(kSentence), w);
}

TEST(ScorerTest, DecayScalesEveryParameter) {
  LinearScorer scorer = RandomScorer(16, TagMode::kSemantic, 2);
  const double before = scorer.param(3, 4);
  WeightMatrix w = scorer.Score(kSentence);
  scorer.Decay(0.5);
  EXPECT_DOUBLE_EQ(scorer.param(3, 4), 0.5 * before);
  WeightMatrix halved = scorer.Score(kSentence);
  for (size_t k = 0; k < w.values().size(); ++k) {
    EXPECT_NEAR(halved.values()[k], 0.5 * w.values()[k], 1e-12);
  }
  scorer.Normalize();
  EXPECT_DOUBLE_EQ(scorer.param(3, 4), 0.5 * before);
  scorer.AddToParam(3, 4, 1.0);
  EXPECT_DOUBLE_EQ(scorer.param(3, 4), 0.5 * before + 1.0);
}

// Chain rule through the scorer: d loss / d theta(f, t) is the sum of the
// loss gradient over the positions where feature f fires.
TEST(ScorerTest, ParameterGradientMatchesFiniteDifferences) {
  const std::size_t dim = 64;
  LinearScorer scorer = RandomScorer(dim, TagMode::kSemantic, 8, 0.5);
  Tagger tagger(TagMode::kSemantic);
  Lattice lattice = tagger.LatticeFor(static_cast<int>(kSentence.size()));
  TagSequence gold = Encode(ToTwoLayer(
      {Mention{{0, 2}}, Mention{{0, 1}, {4, 4}}}, static_cast<int>(kSentence.size())));
  auto loss = [&](const LinearScorer &s) { return Nll(lattice, s.Score(kSentence), gold).loss; };

  LossResult r = Nll(lattice, scorer.Score(kSentence), gold);
  auto features = ExtractFeatures(kSentence, dim);
  std::vector<double> analytic(dim * kNumTags, 0.0);
  for (int i = 0; i < r.gradient.length(); ++i) {
    for (std::uint32_t f : features[i]) {
      for (int t = 0; t < kNumTags; ++t) analytic[f * kNumTags + t] += r.gradient.at(i, t);
    }
  }
  const double eps = 1e-3;
  double worst = 0.0;
  for (std::size_t f = 0; f < dim; ++f) {
    for (int t = 0; t < kNumTags; ++t) {
      LinearScorer up = scorer, down = scorer;
      up.AddToParam(f, t, eps);
      down.AddToParam(f, t, -eps);
      const double numeric = (loss(up) - loss(down)) / (2 * eps);
      worst = std::max(worst, std::abs(numeric - analytic[f * kNumTags + t]) /
                                  std::max(1.0, std::abs(numeric)));
    }
  }
  EXPECT_LE(worst, 1e-3);
}

TEST(ScorerTest, SaveLoadRoundTrip) {
  LinearScorer scorer = RandomScorer(128, TagMode::kStructural, 3);
  scorer.Decay(0.3);
  std::stringstream text;
  scorer.Save(text);
  LinearScorer loaded = LinearScorer::Load(text);
  EXPECT_EQ(loaded.dim(), 128u);
  EXPECT_EQ(loaded.mode(), TagMode::kStructural);
  for (std::size_t f = 0; f < 128; ++f) {
    for (int t = 0; t < kNumTags; ++t) EXPECT_EQ(loaded.param(f, t), scorer.param(f, t));
  }
  std::stringstream again;
  loaded.Save(again);
  EXPECT_EQ(again.str(), text.str());
}

TEST(ScorerTest, LoadReportsTheBadLine) {
  std::istringstream bad(
      "discner-linear-model 1\ndim 8\nmode semantic\n"
      "tags CB CI O DB-Bx DB-By DI-Bx DI-By DI-Ix DI-Iy DI-O\nnonzero 1\n9 0 1.5\n");
  try {
    LinearScorer::Load(bad);
    FAIL() << "expected a parse error";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 6);
  }
  std::istringstream wrong_magic("something else\n");
  EXPECT_THROW(LinearScorer::Load(wrong_magic), ParseError);
}

TEST(TaggerTest, PredictionsDecodeAndThreadsAgree) {
  Tagger tagger(TagMode::kSemantic);
  LinearScorer scorer = RandomScorer(256, TagMode::kSemantic, 4, 3.0);
  auto sentences = SyntheticSentences(40, 25, 6);
  std::vector<MentionSet> serial = tagger.PredictAll(scorer, sentences, 1);
  EXPECT_EQ(tagger.PredictAll(scorer, sentences, 4), serial);
  for (size_t k = 0; k < sentences.size(); ++k) {
    TagSequence tags = tagger.BestTags(scorer, sentences[k]);
    EXPECT_TRUE(IsWellFormed(tags));
    EXPECT_EQ(Decode(tags), serial[k]);
  }
  EXPECT_TRUE(tagger.Predict(scorer, std::vector<std::string>{}).empty());
}

TEST(TrainTest, ConfigValidation) {
  TrainConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.epochs = 0;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = TrainConfig{};
  config.learning_rate = 0.0;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = TrainConfig{};
  config.l2 = -1.0;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = TrainConfig{};
  config.dim = 0;
  EXPECT_THROW(config.Validate(), ConfigError);
}

TEST(TrainTest, LossNamesRoundTrip) {
  for (LossKind loss : {LossKind::kNll, LossKind::kPartial, LossKind::kHardEm}) {
    EXPECT_EQ(ParseLoss(LossName(loss)), loss);
  }
  EXPECT_FALSE(ParseLoss("crf").has_value());
}

TEST(TrainTest, SameSeedSameModel) {
  auto examples = testing::ToyExamples(testing::ToyCorpus(3, 12), false);
  TrainConfig config;
  config.loss = LossKind::kPartial;
  config.epochs = 3;
  config.dim = 1 << 12;
  config.l2 = 1e-3;
  TrainLog log;
  LinearScorer a = Train(examples, config, &log);
  LinearScorer b = Train(examples, config);
  for (std::size_t f = 0; f < config.dim; ++f) {
    for (int t = 0; t < kNumTags; ++t) ASSERT_EQ(a.param(f, t), b.param(f, t));
  }
  ASSERT_EQ(log.epoch_mean_loss.size(), 3u);
  EXPECT_LT(log.epoch_mean_loss.back(), log.epoch_mean_loss.front());
}

TEST(TrainTest, ToyCorpusIsLearned) {
  testing::ToyOutcome nll = testing::RunToyTraining(LossKind::kNll);
  EXPECT_EQ(nll.tag_exact_match, 1.0);
  testing::ToyOutcome partial = testing::RunToyTraining(LossKind::kPartial);
  EXPECT_EQ(partial.mention_f1, 1.0);
  testing::ToyOutcome hard = testing::RunToyTraining(LossKind::kHardEm);
  EXPECT_EQ(hard.mention_f1, 1.0);
}

}  // namespace
}  // namespace discner
