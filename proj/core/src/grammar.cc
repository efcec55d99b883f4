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

#include "discner/grammar.h"

namespace discner {

namespace {

// Tags of one orientation: "a" is the type of the leftmost component.
struct SideTags {
  Tag db_a;  // DB-Ba
  Tag di_ba, di_bb, di_ia, di_ib;
};

constexpr SideTags kLeftX = {Tag::kDBBx, Tag::kDIBx, Tag::kDIBy, Tag::kDIIx,
                             Tag::kDIIy};
constexpr SideTags kLeftY = {Tag::kDBBy, Tag::kDIBy, Tag::kDIBx, Tag::kDIIy,
                             Tag::kDIIx};

// Adds the states recognizing one orientation of a set, entered from
// `outside` with DB-Ba.
void AddSetSide(Automaton &g, int outside, const SideTags &t) {
  const int first = g.AddState();     // inside the leftmost component
  const int adjacent = g.AddState();  // b component right after the first
  const int pre_gap = g.AddState();   // only a so far, after a gap
  const int pre_a = g.AddState();     // only a so far, in a later component
  const int post_a = g.AddState();    // both types seen, in an a component
  const int post_b = g.AddState();    // both types seen, in a b component
  const int post_gap = g.AddState();  // both types seen, in a gap

  g.AddArc(outside, t.db_a, first);
  g.AddArc(first, t.di_ia, first);

  // First component directly followed by a b component: another component
  // is still required before the set may end.
  g.AddArc(first, t.di_bb, adjacent);
  g.AddArc(adjacent, t.di_ib, adjacent);
  g.AddArc(adjacent, kEpsilon, post_gap);

  // More a components or gaps before the first b component.
  g.AddArc(first, Tag::kDIO, pre_gap);
  g.AddArc(first, t.di_ba, pre_a);
  g.AddArc(pre_gap, Tag::kDIO, pre_gap);
  g.AddArc(pre_gap, t.di_ba, pre_a);
  g.AddArc(pre_a, t.di_ia, pre_a);
  g.AddArc(pre_a, t.di_ba, pre_a);
  g.AddArc(pre_a, Tag::kDIO, pre_gap);
  g.AddArc(pre_gap, t.di_bb, post_b);
  g.AddArc(pre_a, t.di_bb, post_b);

  // Extra components of either type once the set is valid.
  g.AddArc(post_a, t.di_ia, post_a);
  g.AddArc(post_a, t.di_ba, post_a);
  g.AddArc(post_a, t.di_bb, post_b);
  g.AddArc(post_a, Tag::kDIO, post_gap);
  g.AddArc(post_b, t.di_ib, post_b);
  g.AddArc(post_b, t.di_bb, post_b);
  g.AddArc(post_b, t.di_ba, post_a);
  g.AddArc(post_b, Tag::kDIO, post_gap);
  g.AddArc(post_gap, Tag::kDIO, post_gap);
  g.AddArc(post_gap, t.di_ba, post_a);
  g.AddArc(post_gap, t.di_bb, post_b);

  // A set ends after a component.
  g.AddArc(post_a, kEpsilon, outside);
  g.AddArc(post_b, kEpsilon, outside);
}

}  // namespace

Automaton GrammarAutomatonWithEpsilon(TagMode mode) {
  Automaton g;
  const int outside = g.AddState();
  const int continuous = g.AddState();
  g.SetInitial(outside);
  g.SetFinal(outside);

  g.AddArc(outside, Tag::kO, outside);
  g.AddArc(outside, Tag::kCB, continuous);
  g.AddArc(continuous, Tag::kCI, continuous);
  g.AddArc(continuous, kEpsilon, outside);

  AddSetSide(g, outside, kLeftX);
  if (mode == TagMode::kSemantic) AddSetSide(g, outside, kLeftY);
  return g;
}

Automaton GrammarAutomaton(TagMode mode) {
  return Determinize(RemoveEpsilon(GrammarAutomatonWithEpsilon(mode)));
}

}  // namespace discner
