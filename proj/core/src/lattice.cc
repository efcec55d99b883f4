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

#include "discner/lattice.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "discner/errors.h"

namespace discner {

Lattice::Lattice(const Automaton &grammar, int length)
    : length_(length), table_(grammar) {
  if (length < 0) throw std::invalid_argument("negative sentence length");
  for (int s = 0; s < table_.num_states(); ++s) {
    for (Tag t : kAllTags) {
      int q = table_.next(s, t);
      if (q >= 0) arcs_.push_back({s, t, q});
    }
  }
}

void Lattice::ForEachTransition(
    const std::function<void(const LatticeTransition &)> &fn) const {
  for (int i = 0; i < length_; ++i) {
    for (const GrammarArc &a : arcs_) fn({i, a.source, a.tag, a.target});
  }
}

Lattice Intersect(const Automaton &grammar, int length) {
  if (!grammar.IsDeterministic()) {
    throw std::invalid_argument(
        "intersection requires an epsilon-free deterministic grammar");
  }
  Lattice lattice(grammar, length);
  std::vector<bool> reached(lattice.num_grammar_states(), false);
  reached[lattice.initial()] = true;
  for (int i = 0; i < length; ++i) {
    std::vector<bool> next(reached.size(), false);
    for (const GrammarArc &a : lattice.arcs()) {
      if (reached[a.source]) next[a.target] = true;
    }
    reached = std::move(next);
  }
  bool any_final = false;
  for (int s = 0; s < lattice.num_grammar_states(); ++s) {
    any_final |= reached[s] && lattice.is_final(s);
  }
  if (!any_final) {
    throw EmptyLanguageError("no well-formed tag sequence of length " +
                             std::to_string(length));
  }
  return lattice;
}

Lattice Intersect(const Automaton &grammar, const WeightMatrix &weights) {
  return Intersect(grammar, weights.length());
}

std::vector<TagSequence> AcceptingPaths(const Lattice &lattice) {
  std::vector<TagSequence> out;
  TagSequence prefix;
  std::function<void(int)> walk = [&](int state) {
    if (static_cast<int>(prefix.size()) == lattice.length()) {
      if (lattice.is_final(state)) out.push_back(prefix);
      return;
    }
    for (Tag t : kAllTags) {
      int q = lattice.next(state, t);
      if (q < 0) continue;
      prefix.push_back(t);
      walk(q);
      prefix.pop_back();
    }
  };
  walk(lattice.initial());
  return out;
}

}  // namespace discner
