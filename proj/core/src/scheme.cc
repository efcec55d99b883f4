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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "discner/errors.h"

namespace discner {

namespace {

// A maximal DB/DI run, as [begin, end] positions.
std::vector<Interval> SetRuns(const TagSequence &tags) {
  std::vector<Interval> runs;
  const int n = static_cast<int>(tags.size());
  for (int i = 0; i < n;) {
    if (!IsSetBegin(tags[i])) {
      ++i;
      continue;
    }
    int j = i + 1;
    while (j < n && IsSetInside(tags[j])) ++j;
    runs.push_back({i, j - 1});
    i = j;
  }
  return runs;
}

// Typed components of one run. Assumes rules 1-3 hold.
std::vector<Component> RunComponents(const TagSequence &tags, Interval run) {
  std::vector<Component> components;
  for (int i = run.begin; i <= run.end; ++i) {
    Tag t = tags[i];
    if (BeginsX(t) || BeginsY(t)) {
      components.push_back(
          {{i, i}, BeginsX(t) ? ComponentType::kX : ComponentType::kY});
    } else if (InsideX(t) || InsideY(t)) {
      components.back().span.end = i;
    }
  }
  return components;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Union(int a, int b) { parent[Find(a)] = Find(b); }
  std::vector<int> parent;
};

[[noreturn]] void Incompatible(IncompatibleReason reason,
                               const std::string &detail) {
  throw IncompatibleError(reason, detail);
}

// Builds the typed set for a group of mutually overlapping mentions.
TwoLayerSet BuildSet(const std::vector<const Mention *> &group, int length,
                     const ComponentTyper &typer) {
  // Covering-mention subset of every word.
  std::vector<std::vector<int>> cover(length);
  for (int m = 0; m < static_cast<int>(group.size()); ++m) {
    for (int w : group[m]->Words()) cover[w].push_back(m);
  }

  // Components: maximal contiguous runs with a constant covering subset.
  std::vector<Interval> spans;
  std::vector<int> component_of(length, -1);
  for (int w = 0; w < length; ++w) {
    if (cover[w].empty()) continue;
    if (!spans.empty() && spans.back().end == w - 1 &&
        cover[w] == cover[w - 1]) {
      spans.back().end = w;
    } else {
      spans.push_back({w, w});
    }
    component_of[w] = static_cast<int>(spans.size()) - 1;
  }

  // Each mention must be exactly one pair of components.
  std::vector<std::pair<int, int>> edges;
  for (const Mention *mention : group) {
    std::vector<int> parts;
    for (int w : mention->Words()) {
      if (parts.empty() || parts.back() != component_of[w]) {
        parts.push_back(component_of[w]);
      }
    }
    if (parts.size() >= 3) {
      Incompatible(IncompatibleReason::kThreeWaySplit,
                   "mention " + mention->ToString() + " spans " +
                       std::to_string(parts.size()) + " components");
    }
    if (parts.size() == 1) {
      Incompatible(IncompatibleReason::kPartialOverlap,
                   "mention " + mention->ToString() +
                       " is a single component of a set");
    }
    edges.emplace_back(parts[0], parts[1]);
  }

  // Two-color the components; mentions must link opposite sides.
  const int num_components = static_cast<int>(spans.size());
  std::vector<int> side(num_components, -1);
  side[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : edges) {
      if (side[a] >= 0 && side[b] < 0) {
        side[b] = 1 - side[a];
        changed = true;
      } else if (side[b] >= 0 && side[a] < 0) {
        side[a] = 1 - side[b];
        changed = true;
      } else if (side[a] >= 0 && side[a] == side[b]) {
        Incompatible(IncompatibleReason::kPartialOverlap,
                     "mentions do not split into two component types");
      }
    }
  }
  const auto left_count = std::count(side.begin(), side.end(), 0);
  const auto right_count = std::count(side.begin(), side.end(), 1);
  if (left_count + right_count != num_components ||
      static_cast<size_t>(left_count * right_count) != edges.size()) {
    Incompatible(IncompatibleReason::kPartialOverlap,
                 "mentions are not the product of two component types");
  }

  // side 0 holds the leftmost component; it is typed x unless the typer
  // says otherwise.
  bool flip = false;
  bool resolved = false;
  if (typer) {
    for (int c = 0; c < num_components; ++c) {
      if (auto type = typer(spans[c])) {
        ComponentType left_type = side[c] == 0 ? *type : Flip(*type);
        flip = left_type == ComponentType::kY;
        resolved = true;
        break;
      }
    }
  }

  TwoLayerSet set;
  set.span = {spans.front().begin, spans.back().end};
  set.resolved = resolved;
  for (int c = 0; c < num_components; ++c) {
    bool is_x = (side[c] == 0) != flip;
    set.components.push_back(
        {spans[c], is_x ? ComponentType::kX : ComponentType::kY});
  }
  return set;
}

void CheckAnnotation(const SentenceAnnotation &ann) {
  std::vector<Interval> spans;
  for (const Mention &m : ann.continuous) {
    if (!m.IsContinuous()) {
      throw EncodingViolation("continuous mention " + m.ToString() +
                              " has several fragments");
    }
    spans.push_back(m.fragments().front());
  }
  for (const TwoLayerSet &set : ann.sets) {
    if (set.components.empty()) throw EncodingViolation("set without components");
    if (set.components.front().span.begin != set.span.begin ||
        set.components.back().span.end != set.span.end) {
      throw EncodingViolation("set span does not match its components");
    }
    bool has_x = false, has_y = false;
    for (size_t c = 0; c < set.components.size(); ++c) {
      const Interval &s = set.components[c].span;
      if (s.begin > s.end) throw EncodingViolation("empty component");
      if (c > 0 && s.begin <= set.components[c - 1].span.end) {
        throw EncodingViolation("components overlap or are unsorted");
      }
      has_x |= set.components[c].type == ComponentType::kX;
      has_y |= set.components[c].type == ComponentType::kY;
    }
    if (!has_x || !has_y) {
      throw EncodingViolation("set needs one x and one y component");
    }
    spans.push_back(set.span);
  }
  std::sort(spans.begin(), spans.end());
  for (size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].begin < 0 || spans[i].end >= ann.length) {
      throw EncodingViolation("span outside the sentence");
    }
    if (i > 0 && spans[i].begin <= spans[i - 1].end) {
      throw EncodingViolation("overlapping mentions or sets");
    }
  }
}

}  // namespace

std::vector<int> TwoLayerSet::Gaps() const {
  std::vector<int> gaps;
  size_t c = 0;
  for (int i = span.begin; i <= span.end; ++i) {
    while (c < components.size() && components[c].span.end < i) ++c;
    if (c == components.size() || !components[c].span.Contains(i)) {
      gaps.push_back(i);
    }
  }
  return gaps;
}

void TwoLayerSet::FlipTypes() {
  for (Component &c : components) c.type = Flip(c.type);
}

MentionSet TwoLayerSet::Mentions() const {
  MentionSet out;
  for (const Component &x : components) {
    if (x.type != ComponentType::kX) continue;
    for (const Component &y : components) {
      if (y.type != ComponentType::kY) continue;
      out.insert(Mention{x.span, y.span});
    }
  }
  return out;
}

SentenceAnnotation ToTwoLayer(const MentionSet &mentions, int length,
                              const ComponentTyper &typer) {
  std::vector<const Mention *> list;
  for (const Mention &m : mentions) {
    if (m.empty() || m.first() < 0 || m.last() >= length) {
      throw std::invalid_argument("mention " + m.ToString() +
                                  " outside a sentence of length " +
                                  std::to_string(length));
    }
    list.push_back(&m);
  }

  // Group mentions sharing at least one word.
  DisjointSets groups(static_cast<int>(list.size()));
  std::vector<int> owner(length, -1);
  for (int m = 0; m < static_cast<int>(list.size()); ++m) {
    for (int w : list[m]->Words()) {
      if (owner[w] >= 0) groups.Union(m, owner[w]);
      owner[w] = m;
    }
  }
  std::vector<std::vector<const Mention *>> members(list.size());
  for (int m = 0; m < static_cast<int>(list.size()); ++m) {
    members[groups.Find(m)].push_back(list[m]);
  }

  SentenceAnnotation ann;
  ann.length = length;
  for (const auto &group : members) {
    if (group.empty()) continue;
    if (group.size() == 1 && group.front()->IsContinuous()) {
      ann.continuous.push_back(*group.front());
    } else {
      ann.sets.push_back(BuildSet(group, length, typer));
    }
  }
  std::sort(ann.continuous.begin(), ann.continuous.end());
  std::sort(ann.sets.begin(), ann.sets.end(),
            [](const TwoLayerSet &a, const TwoLayerSet &b) {
              return a.span < b.span;
            });

  // Set spans must not contain another mention or set.
  std::vector<Interval> spans;
  for (const Mention &m : ann.continuous) spans.push_back(m.fragments().front());
  for (const TwoLayerSet &s : ann.sets) spans.push_back(s.span);
  std::sort(spans.begin(), spans.end());
  for (size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].begin <= spans[i - 1].end) {
      Incompatible(IncompatibleReason::kSpanConflict,
                   "words " + std::to_string(spans[i].begin) + "-" +
                       std::to_string(spans[i].end) +
                       " lie inside the span of a set");
    }
  }

  try {
    Encode(ann);
  } catch (const EncodingViolation &e) {
    Incompatible(IncompatibleReason::kSpanConflict, e.what());
  }
  return ann;
}

MentionSet FromTwoLayer(const SentenceAnnotation &annotation) {
  MentionSet out(annotation.continuous.begin(), annotation.continuous.end());
  for (const TwoLayerSet &set : annotation.sets) out.merge(set.Mentions());
  return out;
}

TagSequence Encode(const SentenceAnnotation &annotation) {
  CheckAnnotation(annotation);
  TagSequence tags(annotation.length, Tag::kO);
  for (const Mention &m : annotation.continuous) {
    const Interval &f = m.fragments().front();
    tags[f.begin] = Tag::kCB;
    for (int i = f.begin + 1; i <= f.end; ++i) tags[i] = Tag::kCI;
  }
  for (const TwoLayerSet &set : annotation.sets) {
    for (int i = set.span.begin; i <= set.span.end; ++i) tags[i] = Tag::kDIO;
    for (const Component &c : set.components) {
      const bool x = c.type == ComponentType::kX;
      if (c.span.begin == set.span.begin) {
        tags[c.span.begin] = x ? Tag::kDBBx : Tag::kDBBy;
      } else {
        tags[c.span.begin] = x ? Tag::kDIBx : Tag::kDIBy;
      }
      for (int i = c.span.begin + 1; i <= c.span.end; ++i) {
        tags[i] = x ? Tag::kDIIx : Tag::kDIIy;
      }
    }
  }
  if (!IsWellFormed(tags)) {
    throw EncodingViolation("encoding is not well-formed: " + FormatTags(tags));
  }
  return tags;
}

SentenceAnnotation AnnotationFromTags(const TagSequence &tags) {
  if (!IsWellFormed(tags)) {
    throw IllFormedError("ill-formed tag sequence: " + FormatTags(tags));
  }
  SentenceAnnotation ann;
  ann.length = static_cast<int>(tags.size());
  for (int i = 0; i < ann.length; ++i) {
    if (tags[i] != Tag::kCB) continue;
    int j = i;
    while (j + 1 < ann.length && tags[j + 1] == Tag::kCI) ++j;
    ann.continuous.push_back(Mention{Interval{i, j}});
  }
  for (Interval run : SetRuns(tags)) {
    ann.sets.push_back({run, RunComponents(tags, run), true});
  }
  return ann;
}

MentionSet Decode(const TagSequence &tags) {
  return FromTwoLayer(AnnotationFromTags(tags));
}

bool IsWellFormed(const TagSequence &tags) {
  for (size_t i = 0; i < tags.size(); ++i) {
    const Tag t = tags[i];
    const bool has_prev = i > 0;
    const Tag prev = has_prev ? tags[i - 1] : Tag::kO;
    // Rule 1.
    if (t == Tag::kCI && !(has_prev && (prev == Tag::kCB || prev == Tag::kCI))) {
      return false;
    }
    // Rule 2.
    if (IsSetInside(t) && !(has_prev && IsSetTag(prev))) return false;
    // Rule 3.
    if (InsideX(t) && !(has_prev && (BeginsX(prev) || InsideX(prev)))) {
      return false;
    }
    if (InsideY(t) && !(has_prev && (BeginsY(prev) || InsideY(prev)))) {
      return false;
    }
  }
  for (Interval run : SetRuns(tags)) {
    std::vector<Component> components = RunComponents(tags, run);
    TwoLayerSet set{run, components, true};
    // Rule 4.
    const bool has_x = std::any_of(components.begin(), components.end(),
                                   [](const Component &c) {
                                     return c.type == ComponentType::kX;
                                   });
    const bool has_y = std::any_of(components.begin(), components.end(),
                                   [](const Component &c) {
                                     return c.type == ComponentType::kY;
                                   });
    if (!has_x || !has_y) return false;
    // Rule 5.
    MentionSet rebuilt = set.Mentions();
    if (rebuilt.size() == 1 && rebuilt.begin()->IsContinuous()) return false;
    // Rule 6.
    if (tags[run.end] == Tag::kDIO) return false;
  }
  return true;
}

bool IsStructurallyWellFormed(const TagSequence &tags) {
  for (Tag t : tags) {
    if (t == Tag::kDBBy) return false;
  }
  return IsWellFormed(tags);
}

int CountSets(const TagSequence &tags) {
  return static_cast<int>(SetRuns(tags).size());
}

}  // namespace discner
