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

#ifndef DISCNER_LATTICE_H_
#define DISCNER_LATTICE_H_

#include <cstddef>
#include <functional>
#include <vector>

#include "discner/automaton.h"
#include "discner/tag_matrix.h"
#include "discner/tags.h"

namespace discner {

// Transition of the grammar automaton, repeated at every position of the
// lattice.
struct GrammarArc {
  int source;
  Tag tag;
  int target;
};

// One lattice transition ((position, source), tag, w(position, tag),
// (position + 1, target)). The weight is referenced, not stored.
struct LatticeTransition {
  int position;
  int source;
  Tag tag;
  int target;
};

// Intersection of a deterministic grammar automaton with the sentence
// automaton of an n-word sentence. States are (position, grammar state)
// pairs for position in [0, n]; every transition moves one position to the
// right, so position order is a topological order. The structure is the
// same at every position and is stored once; weights are looked up in a
// WeightMatrix by the dynamic programs.
class Lattice {
 public:
  Lattice(const Automaton &grammar, int length);

  int length() const { return length_; }
  int num_grammar_states() const { return table_.num_states(); }
  int initial() const { return table_.initial(); }
  bool is_final(int state) const { return table_.is_final(state); }
  int next(int state, Tag tag) const { return table_.next(state, tag); }
  // Grammar arcs grouped by source state.
  const std::vector<GrammarArc> &arcs() const { return arcs_; }

  // (n + 1) * |Q| lattice states.
  size_t num_states() const {
    return static_cast<size_t>(length_ + 1) * table_.num_states();
  }
  // n * |E| transitions.
  size_t num_transitions() const {
    return static_cast<size_t>(length_) * arcs_.size();
  }
  void ForEachTransition(const std::function<void(const LatticeTransition &)> &fn) const;

 private:
  int length_;
  TransitionTable table_;
  std::vector<GrammarArc> arcs_;
};

// Builds G ∩ S for a sentence of `length` words. The grammar must be
// epsilon-free and deterministic (std::invalid_argument otherwise). Throws
// EmptyLanguageError if no final state is reachable at position n.
Lattice Intersect(const Automaton &grammar, int length);
// Same, taking the sentence length from the weight matrix.
Lattice Intersect(const Automaton &grammar, const WeightMatrix &weights);

// Every tag sequence spelled by an accepting path, in lexicographic tag
// order. Exponential in n; meant for small lattices.
std::vector<TagSequence> AcceptingPaths(const Lattice &lattice);

}  // namespace discner

#endif  // DISCNER_LATTICE_H_
