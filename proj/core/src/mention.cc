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

#include "discner/mention.h"

#include <algorithm>

namespace discner {

Mention::Mention(std::vector<Interval> fragments) {
  std::sort(fragments.begin(), fragments.end());
  for (const Interval &f : fragments) {
    if (!fragments_.empty() && f.begin <= fragments_.back().end + 1) {
      fragments_.back().end = std::max(fragments_.back().end, f.end);
    } else {
      fragments_.push_back(f);
    }
  }
}

Mention Mention::FromWords(const std::vector<int> &words) {
  std::vector<Interval> fragments;
  fragments.reserve(words.size());
  for (int w : words) fragments.push_back({w, w});
  return Mention(std::move(fragments));
}

bool Mention::Covers(int position) const {
  for (const Interval &f : fragments_) {
    if (f.Contains(position)) return true;
  }
  return false;
}

std::vector<int> Mention::Words() const {
  std::vector<int> words;
  for (const Interval &f : fragments_) {
    for (int i = f.begin; i <= f.end; ++i) words.push_back(i);
  }
  return words;
}

Mention Mention::Concat(const Mention &a, const Mention &b) {
  std::vector<Interval> fragments = a.fragments_;
  fragments.insert(fragments.end(), b.fragments_.begin(), b.fragments_.end());
  return Mention(std::move(fragments));
}

std::string Mention::ToString() const {
  std::string out;
  for (size_t i = 0; i < fragments_.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(fragments_[i].begin);
    out += '-';
    out += std::to_string(fragments_[i].end);
  }
  return out;
}

}  // namespace discner
