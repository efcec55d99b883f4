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

#ifndef DISCNER_MENTION_H_
#define DISCNER_MENTION_H_

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace discner {

// Closed interval [begin, end] of 0-based word positions.
struct Interval {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin + 1; }
  bool Contains(int position) const {
    return position >= begin && position <= end;
  }

  friend auto operator<=>(const Interval &, const Interval &) = default;
};

// A possibly discontinuous mention: sorted, disjoint, non-adjacent
// fragments. The constructor canonicalizes its input (sorting and merging
// overlapping or adjacent fragments) so equal word sets compare equal.
class Mention {
 public:
  Mention() = default;
  explicit Mention(std::vector<Interval> fragments);
  Mention(std::initializer_list<Interval> fragments)
      : Mention(std::vector<Interval>(fragments)) {}

  // Builds a mention from a set of word positions.
  static Mention FromWords(const std::vector<int> &words);

  const std::vector<Interval> &fragments() const { return fragments_; }
  bool empty() const { return fragments_.empty(); }
  bool IsContinuous() const { return fragments_.size() == 1; }
  bool IsDiscontinuous() const { return fragments_.size() > 1; }
  int first() const { return fragments_.front().begin; }
  int last() const { return fragments_.back().end; }
  bool Covers(int position) const;
  std::vector<int> Words() const;

  // Union of the word sets of two mentions.
  static Mention Concat(const Mention &a, const Mention &b);

  // "b-e" fragments joined by ';', e.g. "0-1;4-4".
  std::string ToString() const;

  friend auto operator<=>(const Mention &, const Mention &) = default;

 private:
  std::vector<Interval> fragments_;
};

using MentionSet = std::set<Mention>;

}  // namespace discner

#endif  // DISCNER_MENTION_H_
