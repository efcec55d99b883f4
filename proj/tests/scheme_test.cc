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

#include "discner/scheme.h"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "discner/errors.h"
#include "oracle.h"

namespace discner {
namespace {

TagSequence Tags(std::string_view line) {
  auto tags = ParseTags(line);
  EXPECT_TRUE(tags.has_value()) << line;
  return tags.value_or(TagSequence{});
}

// "pain in arms and shoulders": {pain in arms, pain in shoulders}.
MentionSet PainExample() {
  return {Mention{{0, 1}, {2, 2}}, Mention{{0, 1}, {4, 4}}};
}

TEST(TagTest, AlphabetIsABijectionOntoIndices) {
  std::set<std::string_view> names;
  for (int i = 0; i < kNumTags; ++i) {
    Tag t = TagFromIndex(i);
    EXPECT_EQ(TagIndex(t), i);
    EXPECT_EQ(ParseTag(TagName(t)), t);
    names.insert(TagName(t));
  }
  EXPECT_EQ(names.size(), 10u);
  for (std::string_view excluded : {"DB-Ix", "DB-Iy", "DB-O", "IB-O"}) {
    EXPECT_FALSE(ParseTag(excluded).has_value()) << excluded;
  }
}

TEST(MentionTest, AdjacentFragmentsMerge) {
  Mention m{{2, 2}, {0, 1}, {4, 5}};
  ASSERT_EQ(m.fragments().size(), 2u);
  EXPECT_EQ(m.fragments()[0], (Interval{0, 2}));
  EXPECT_EQ(m.ToString(), "0-2;4-5");
  EXPECT_EQ(m, Mention::FromWords({0, 1, 2, 4, 5}));
  EXPECT_TRUE((Mention{{3, 3}}.IsContinuous()));
}

TEST(ToTwoLayerTest, CoordinationBecomesOneSet) {
  SentenceAnnotation ann = ToTwoLayer(PainExample(), 5);
  EXPECT_TRUE(ann.continuous.empty());
  ASSERT_EQ(ann.sets.size(), 1u);
  const TwoLayerSet &set = ann.sets[0];
  EXPECT_EQ(set.span, (Interval{0, 4}));
  ASSERT_EQ(set.components.size(), 3u);
  EXPECT_EQ(set.components[0], (Component{{0, 1}, ComponentType::kX}));
  EXPECT_EQ(set.components[1], (Component{{2, 2}, ComponentType::kY}));
  EXPECT_EQ(set.components[2], (Component{{4, 4}, ComponentType::kY}));
  EXPECT_EQ(set.Gaps(), std::vector<int>{3});
  EXPECT_FALSE(set.resolved);
}

TEST(ToTwoLayerTest, StandaloneContinuousMentionPassesThrough) {
  SentenceAnnotation ann = ToTwoLayer({Mention{{1, 2}}}, 4);
  EXPECT_TRUE(ann.sets.empty());
  ASSERT_EQ(ann.continuous.size(), 1u);
  EXPECT_EQ(ann.continuous[0], (Mention{{1, 2}}));
}

TEST(ToTwoLayerTest, TyperFixesOrientation) {
  ComponentTyper body_parts = [](const Interval &span) -> std::optional<ComponentType> {
    if (span == Interval{2, 2} || span == Interval{4, 4}) return ComponentType::kX;
    return std::nullopt;
  };
  SentenceAnnotation ann = ToTwoLayer(PainExample(), 5, body_parts);
  ASSERT_EQ(ann.sets.size(), 1u);
  EXPECT_TRUE(ann.sets[0].resolved);
  EXPECT_EQ(ann.sets[0].components[0].type, ComponentType::kY);
  EXPECT_EQ(ann.sets[0].components[1].type, ComponentType::kX);
  EXPECT_EQ(Encode(ann), Tags("DB-By DI-Iy DI-Bx DI-O DI-Bx"));
}

IncompatibleReason ReasonOf(const MentionSet &mentions, int length) {
  try {
    ToTwoLayer(mentions, length);
  } catch (const IncompatibleError &e) {
    return e.reason();
  }
  ADD_FAILURE() << "expected an incompatible annotation";
  return IncompatibleReason::kSpanConflict;
}

TEST(ToTwoLayerTest, ThreeComponentMentionsAreIncompatible) {
  // muscle and joint aches in knees and elbows
  //   0     1    2    3    4   5    6     7
  MentionSet coordination = {
      Mention{{0, 0}, {3, 5}},
      Mention{{0, 0}, {3, 4}, {7, 7}},
      Mention{{2, 5}},
      Mention{{2, 4}, {7, 7}},
  };
  EXPECT_EQ(ReasonOf(coordination, 8), IncompatibleReason::kThreeWaySplit);
  EXPECT_EQ(ReasonOf({Mention{{0, 0}, {2, 2}, {4, 4}}}, 5),
            IncompatibleReason::kThreeWaySplit);
}

TEST(ToTwoLayerTest, PartiallySharedComponentsAreIncompatible) {
  // One mention is a single component of another.
  EXPECT_EQ(ReasonOf({Mention{{0, 1}}, Mention{{0, 1}, {3, 3}}}, 4),
            IncompatibleReason::kPartialOverlap);
  // Product is incomplete: a-c, a-d, b-c but not b-d.
  EXPECT_EQ(ReasonOf({Mention{{0, 0}, {3, 3}}, Mention{{0, 0}, {5, 5}},
                      Mention{{1, 1}, {3, 3}}},
                     6),
            IncompatibleReason::kPartialOverlap);
}

TEST(ToTwoLayerTest, MentionInsideASetGapIsASpanConflict) {
  EXPECT_EQ(ReasonOf({Mention{{0, 0}, {2, 2}}, Mention{{1, 1}}}, 3),
            IncompatibleReason::kSpanConflict);
  EXPECT_EQ(ReasonOf({Mention{{0, 0}, {3, 3}}, Mention{{1, 1}, {5, 5}}}, 6),
            IncompatibleReason::kSpanConflict);
}

TEST(ToTwoLayerTest, OutOfRangeMentionThrows) {
  EXPECT_THROW(ToTwoLayer({Mention{{2, 4}}}, 4), std::invalid_argument);
}

TEST(FromTwoLayerTest, CartesianProduct) {
  SentenceAnnotation ann;
  ann.length = 5;
  ann.sets.push_back({{0, 4},
                      {{{0, 1}, ComponentType::kX},
                       {{2, 2}, ComponentType::kY},
                       {{4, 4}, ComponentType::kY}},
                      false});
  EXPECT_EQ(FromTwoLayer(ann), PainExample());

  SentenceAnnotation single;
  single.length = 3;
  single.sets.push_back(
      {{0, 2}, {{{0, 0}, ComponentType::kX}, {{2, 2}, ComponentType::kY}}, false});
  EXPECT_EQ(FromTwoLayer(single), (MentionSet{Mention{{0, 0}, {2, 2}}}));
}

TEST(EncodeTest, Examples) {
  EXPECT_EQ(Encode(ToTwoLayer(PainExample(), 5)),
            Tags("DB-Bx DI-Ix DI-By DI-O DI-By"));
  EXPECT_EQ(Encode(ToTwoLayer({}, 3)), Tags("O O O"));
  EXPECT_EQ(Encode(ToTwoLayer({Mention{{1, 2}}}, 4)), Tags("O CB CI O"));
}

TEST(EncodeTest, RejectsSetWithOneComponentType) {
  SentenceAnnotation ann;
  ann.length = 3;
  ann.sets.push_back(
      {{0, 2}, {{{0, 0}, ComponentType::kX}, {{2, 2}, ComponentType::kX}}, true});
  EXPECT_THROW(Encode(ann), EncodingViolation);
}

TEST(EncodeTest, RejectsRuleFiveSet) {
  SentenceAnnotation ann;
  ann.length = 2;
  ann.sets.push_back(
      {{0, 1}, {{{0, 0}, ComponentType::kX}, {{1, 1}, ComponentType::kY}}, true});
  EXPECT_THROW(Encode(ann), EncodingViolation);
}

TEST(DecodeTest, Examples) {
  EXPECT_EQ(Decode(Tags("DB-Bx DI-Ix DI-By DI-O DI-By")),
            (MentionSet{Mention{{0, 1}, {2, 2}}, Mention{{0, 1}, {4, 4}}}));
  EXPECT_TRUE(Decode(Tags("O O O")).empty());
  EXPECT_THROW(Decode(Tags("O CI")), IllFormedError);
}

TEST(IsWellFormedTest, RuleExamples) {
  EXPECT_FALSE(IsWellFormed(Tags("DB-Bx DI-By")));        // rule 5
  EXPECT_FALSE(IsWellFormed(Tags("O CI")));               // rule 1
  EXPECT_TRUE(IsWellFormed(Tags("DB-Bx DI-O DI-By")));
  EXPECT_FALSE(IsWellFormed(Tags("DB-Bx DI-By DI-O")));   // rule 6
  EXPECT_FALSE(IsWellFormed(Tags("O DI-Bx")));            // rule 2
  EXPECT_FALSE(IsWellFormed(Tags("DB-Bx DI-Iy DI-By")));  // rule 3
  EXPECT_FALSE(IsWellFormed(Tags("DB-Bx DI-O DI-Bx")));   // rule 4
  EXPECT_TRUE(IsWellFormed(Tags("DB-Bx DI-By DI-By")));   // two mentions
  EXPECT_TRUE(IsWellFormed(Tags("")));
}

// Every well-formed sequence decodes, and a mention set has exactly 2^k
// encodings (k sets) in semantic mode and one in structural mode.
TEST(SchemePropertyTest, DecodeIsABijectionUpToTypeFlips) {
  for (int n = 1; n <= 6; ++n) {
    std::map<MentionSet, std::vector<TagSequence>> semantic;
    std::map<MentionSet, int> structural;
    for (const TagSequence &t : testing::CachedWellFormed(n)) {
      MentionSet decoded = Decode(t);
      if (IsStructurallyWellFormed(t)) ++structural[decoded];
      semantic[decoded].push_back(t);
    }
    for (const auto &[mentions, encodings] : semantic) {
      const size_t k = static_cast<size_t>(CountSets(encodings.front()));
      EXPECT_EQ(encodings.size(), size_t{1} << k)
          << "n=" << n << " " << FormatTags(encodings.front());
      EXPECT_EQ(structural[mentions], 1) << FormatTags(encodings.front());
    }
  }
}

TEST(SchemePropertyTest, StructuralEncodeInvertsDecode) {
  for (int n = 1; n <= 6; ++n) {
    for (const TagSequence &t : testing::CachedWellFormed(n, TagMode::kStructural)) {
      EXPECT_EQ(Encode(ToTwoLayer(Decode(t), n)), t) << FormatTags(t);
    }
  }
}

// Round trip on every compatible mention set: all subsets of mentions for
// n <= 4, sets of up to 3 mentions for n = 5, 6.
TEST(SchemePropertyTest, CompatibleMentionSetsRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Mention> all;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> words;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) words.push_back(i);
      }
      all.push_back(Mention::FromWords(words));
    }
    const int max_size = n <= 4 ? static_cast<int>(all.size()) : 3;
    int compatible = 0;
    std::function<void(size_t, MentionSet &)> grow = [&](size_t start, MentionSet &ms) {
      try {
        SentenceAnnotation ann = ToTwoLayer(ms, n);
        ++compatible;
        EXPECT_EQ(FromTwoLayer(ann), ms);
        TagSequence tags = Encode(ann);
        EXPECT_TRUE(IsWellFormed(tags));
        EXPECT_EQ(Decode(tags), ms);
      } catch (const IncompatibleError &) {
      }
      if (static_cast<int>(ms.size()) == max_size) return;
      for (size_t k = start; k < all.size(); ++k) {
        ms.insert(all[k]);
        grow(k + 1, ms);
        ms.erase(all[k]);
      }
    };
    MentionSet empty;
    grow(0, empty);
    EXPECT_GT(compatible, 0);
  }
}

}  // namespace
}  // namespace discner
