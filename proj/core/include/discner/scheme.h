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

#ifndef DISCNER_SCHEME_H_
#define DISCNER_SCHEME_H_

#include <functional>
#include <optional>
#include <vector>

#include "discner/mention.h"
#include "discner/tags.h"

namespace discner {

enum class ComponentType { kX, kY };

constexpr ComponentType Flip(ComponentType t) {
  return t == ComponentType::kX ? ComponentType::kY : ComponentType::kX;
}

// A maximal word run inside a set of mentions.
struct Component {
  Interval span;
  ComponentType type = ComponentType::kX;

  friend bool operator==(const Component &, const Component &) = default;
};

// A set of mentions sharing words, stored as its typed components. The
// mentions of the set are the Cartesian product of x and y components.
struct TwoLayerSet {
  Interval span;
  std::vector<Component> components;  // sorted, disjoint, inside `span`
  // True when the component types are known to be meaningful (gold or silver
  // typing). Unresolved sets keep the structural orientation (leftmost
  // component typed x) and are the ones enumerated as partial labels.
  bool resolved = false;

  // Positions inside the span covered by no component.
  std::vector<int> Gaps() const;
  void FlipTypes();
  // Mentions obtained from the product of x and y components.
  MentionSet Mentions() const;

  friend bool operator==(const TwoLayerSet &, const TwoLayerSet &) = default;
};

// Two-layer view of all the mentions of one sentence.
struct SentenceAnnotation {
  int length = 0;
  std::vector<Mention> continuous;  // standalone continuous mentions
  std::vector<TwoLayerSet> sets;    // sorted by span

  friend bool operator==(const SentenceAnnotation &,
                         const SentenceAnnotation &) = default;
};

// Optionally assigns a meaningful type to a component.
using ComponentTyper = std::function<std::optional<ComponentType>(const Interval &)>;

// Groups overlapping mentions into typed sets. Mentions that share no word
// with any other mention and are continuous pass through unchanged.
//
// Without a typer the leftmost component of every set is typed x and the
// set is left unresolved. With a typer, the first component (from the left)
// for which it returns a type fixes the orientation of the whole set, which
// is then marked resolved.
//
// Throws IncompatibleError when the mentions cannot be represented, and
// std::invalid_argument when a mention lies outside [0, length).
SentenceAnnotation ToTwoLayer(const MentionSet &mentions, int length,
                              const ComponentTyper &typer = {});

MentionSet FromTwoLayer(const SentenceAnnotation &annotation);

// Throws EncodingViolation if the annotation is malformed or its encoding
// breaks a well-formedness rule.
TagSequence Encode(const SentenceAnnotation &annotation);

// Parses a well-formed tag sequence back into its two-layer form. Every
// set comes out resolved with the types spelled by the tags. Throws
// IllFormedError when the sequence is not well-formed.
SentenceAnnotation AnnotationFromTags(const TagSequence &tags);

// Decode = FromTwoLayer(AnnotationFromTags(tags)).
MentionSet Decode(const TagSequence &tags);

// Checks the six well-formedness rules:
//  1. CI follows CB or CI.
//  2. DI-* follows DB-* or DI-*.
//  3. *-Ix follows *-Bx or *-Ix (same for y).
//  4. every set contains at least one x and one y component.
//  5. a set must not reconstruct to a single continuous mention.
//  6. a set cannot end with DI-O.
bool IsWellFormed(const TagSequence &tags);

// Language of the structural mode: well-formed, and the leftmost component
// of every set is typed x.
bool IsStructurallyWellFormed(const TagSequence &tags);

// Number of sets (maximal DB/DI runs) in a tag sequence.
int CountSets(const TagSequence &tags);

}  // namespace discner

#endif  // DISCNER_SCHEME_H_
