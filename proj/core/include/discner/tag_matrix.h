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

#ifndef DISCNER_TAG_MATRIX_H_
#define DISCNER_TAG_MATRIX_H_

#include <cassert>
#include <span>
#include <vector>

#include "discner/tags.h"

namespace discner {

// Dense n x |T| matrix with one row per word and one column per tag.
//
// Used for tag weights (the scorer output), for gradients with respect to
// those weights, and for posterior tag marginals.
class TagMatrix {
 public:
  TagMatrix() = default;
  explicit TagMatrix(int length, double fill = 0.0)
      : length_(length), values_(static_cast<size_t>(length) * kNumTags, fill) {}

  int length() const { return length_; }

  double &operator()(int position, Tag tag) {
    return values_[Offset(position, TagIndex(tag))];
  }
  double operator()(int position, Tag tag) const {
    return values_[Offset(position, TagIndex(tag))];
  }
  double &at(int position, int tag) { return values_[Offset(position, tag)]; }
  double at(int position, int tag) const {
    return values_[Offset(position, tag)];
  }

  std::span<double> row(int position) {
    return {values_.data() + Offset(position, 0), kNumTags};
  }
  std::span<const double> row(int position) const {
    return {values_.data() + Offset(position, 0), kNumTags};
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool AllFinite() const;

  friend bool operator==(const TagMatrix &, const TagMatrix &) = default;

 private:
  size_t Offset(int position, int tag) const {
    assert(position >= 0 && position < length_);
    return static_cast<size_t>(position) * kNumTags + tag;
  }

  int length_ = 0;
  std::vector<double> values_;
};

// w(i, t): the weight of tagging word i with tag t.
using WeightMatrix = TagMatrix;
// Posterior probability that word i carries tag t.
using MarginalTable = TagMatrix;

// The binary (n x |T|) view of a tag sequence.
TagMatrix OneHot(const TagSequence &tags);

// <y, w>, summed left to right.
double SequenceScore(const WeightMatrix &weights, const TagSequence &tags);

}  // namespace discner

#endif  // DISCNER_TAG_MATRIX_H_
