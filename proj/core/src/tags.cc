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

#include "discner/tags.h"

#include <cmath>
#include <sstream>

#include "discner/errors.h"
#include "discner/tag_matrix.h"

namespace discner {

namespace {

constexpr std::array<std::string_view, kNumTags> kTagNames = {
    "CB", "CI", "O", "DB-Bx", "DB-By", "DI-Bx", "DI-By", "DI-Ix", "DI-Iy", "DI-O",
};

}  // namespace

std::string_view ReasonName(IncompatibleReason reason) {
  switch (reason) {
    case IncompatibleReason::kPartialOverlap: return "partial-overlap";
    case IncompatibleReason::kThreeWaySplit: return "three-way-split";
    case IncompatibleReason::kSpanConflict: return "span-conflict";
  }
  return "unknown";
}

std::string_view TagName(Tag tag) { return kTagNames[TagIndex(tag)]; }

std::optional<Tag> ParseTag(std::string_view name) {
  for (int i = 0; i < kNumTags; ++i) {
    if (kTagNames[i] == name) return TagFromIndex(i);
  }
  return std::nullopt;
}

std::string FormatTags(const TagSequence &tags) {
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ' ';
    out += TagName(tags[i]);
  }
  return out;
}

std::optional<TagSequence> ParseTags(std::string_view line) {
  TagSequence tags;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    auto tag = ParseTag(token);
    if (!tag) return std::nullopt;
    tags.push_back(*tag);
  }
  return tags;
}

std::string_view ModeName(TagMode mode) {
  return mode == TagMode::kSemantic ? "semantic" : "structural";
}

std::optional<TagMode> ParseMode(std::string_view name) {
  if (name == "semantic") return TagMode::kSemantic;
  if (name == "structural") return TagMode::kStructural;
  return std::nullopt;
}

bool TagMatrix::AllFinite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

TagMatrix OneHot(const TagSequence &tags) {
  TagMatrix m(static_cast<int>(tags.size()));
  for (size_t i = 0; i < tags.size(); ++i) m(static_cast<int>(i), tags[i]) = 1.0;
  return m;
}

double SequenceScore(const WeightMatrix &weights, const TagSequence &tags) {
  assert(static_cast<int>(tags.size()) == weights.length());
  double score = 0.0;
  for (size_t i = 0; i < tags.size(); ++i) {
    score += weights(static_cast<int>(i), tags[i]);
  }
  return score;
}

}  // namespace discner
