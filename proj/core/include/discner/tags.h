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

#ifndef DISCNER_TAGS_H_
#define DISCNER_TAGS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace discner {

// The tag alphabet. Enumerator values are the canonical tag indices.
//
// CB/CI/O behave like BIO tags for continuous mentions. The DB-*/DI-* tags
// mark the span of a set of discontinuous mentions: the left half tells
// whether the word opens the span (DB) or continues it (DI), the right half
// marks the typed component the word belongs to (B/I with type x or y) or a
// gap word inside the span (O). DB cannot combine with I or O.
enum class Tag : std::uint8_t {
  kCB = 0,
  kCI = 1,
  kO = 2,
  kDBBx = 3,
  kDBBy = 4,
  kDIBx = 5,
  kDIBy = 6,
  kDIIx = 7,
  kDIIy = 8,
  kDIO = 9,
};

inline constexpr int kNumTags = 10;

inline constexpr std::array<Tag, kNumTags> kAllTags = {
    Tag::kCB,   Tag::kCI,   Tag::kO,    Tag::kDBBx, Tag::kDBBy,
    Tag::kDIBx, Tag::kDIBy, Tag::kDIIx, Tag::kDIIy, Tag::kDIO,
};

constexpr int TagIndex(Tag tag) { return static_cast<int>(tag); }
constexpr Tag TagFromIndex(int index) { return static_cast<Tag>(index); }

// Canonical spelling, e.g. "DB-Bx" or "DI-O".
std::string_view TagName(Tag tag);
std::optional<Tag> ParseTag(std::string_view name);

constexpr bool IsSetBegin(Tag t) { return t == Tag::kDBBx || t == Tag::kDBBy; }
constexpr bool IsSetInside(Tag t) {
  return t == Tag::kDIBx || t == Tag::kDIBy || t == Tag::kDIIx ||
         t == Tag::kDIIy || t == Tag::kDIO;
}
constexpr bool IsSetTag(Tag t) { return IsSetBegin(t) || IsSetInside(t); }
constexpr bool BeginsX(Tag t) { return t == Tag::kDBBx || t == Tag::kDIBx; }
constexpr bool BeginsY(Tag t) { return t == Tag::kDBBy || t == Tag::kDIBy; }
constexpr bool InsideX(Tag t) { return t == Tag::kDIIx; }
constexpr bool InsideY(Tag t) { return t == Tag::kDIIy; }

// Swaps the component type of a set tag (Bx <-> By, Ix <-> Iy).
constexpr Tag FlipType(Tag t) {
  switch (t) {
    case Tag::kDBBx: return Tag::kDBBy;
    case Tag::kDBBy: return Tag::kDBBx;
    case Tag::kDIBx: return Tag::kDIBy;
    case Tag::kDIBy: return Tag::kDIBx;
    case Tag::kDIIx: return Tag::kDIIy;
    case Tag::kDIIy: return Tag::kDIIx;
    default: return t;
  }
}

// One tag per word of a sentence.
using TagSequence = std::vector<Tag>;

std::string FormatTags(const TagSequence &tags);
// Parses a whitespace-separated tag line. Returns nullopt on unknown tags.
std::optional<TagSequence> ParseTags(std::string_view line);

// Whether the component types of set mentions carry meaning (semantic) or
// only record agreement with the leftmost component (structural).
enum class TagMode { kSemantic, kStructural };

std::string_view ModeName(TagMode mode);
std::optional<TagMode> ParseMode(std::string_view name);

}  // namespace discner

#endif  // DISCNER_TAGS_H_
