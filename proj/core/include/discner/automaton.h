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

#ifndef DISCNER_AUTOMATON_H_
#define DISCNER_AUTOMATON_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "discner/tags.h"

namespace discner {

// Label of transitions that emit nothing.
inline constexpr int kEpsilon = -1;

struct Arc {
  int source = 0;
  int label = kEpsilon;  // tag index, or kEpsilon
  double weight = 0.0;
  int target = 0;

  friend bool operator==(const Arc &, const Arc &) = default;
};

// Weighted finite-state automaton over the tag alphabet, with one initial
// state and a set of final states. States are dense integers.
class Automaton {
 public:
  Automaton() = default;

  int AddState();
  void SetInitial(int state);
  void SetFinal(int state, bool is_final = true);
  void AddArc(int source, int label, int target, double weight = 0.0);
  void AddArc(int source, Tag label, int target, double weight = 0.0) {
    AddArc(source, TagIndex(label), target, weight);
  }

  int num_states() const { return static_cast<int>(final_.size()); }
  int initial() const { return initial_; }
  bool is_final(int state) const { return final_[state]; }
  std::vector<int> finals() const;
  const std::vector<Arc> &arcs() const { return arcs_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  bool IsEpsilonFree() const;
  // Epsilon-free with at most one outgoing arc per label and state.
  bool IsDeterministic() const;

  // Whether the tag sequence belongs to the language.
  bool Accepts(std::span<const Tag> tags) const;

  // Line-based text export:
  //   initial <state>
  //   finals <state> <state> ...
  //   <src> <label> <weight> <dst>     one line per arc, label "<eps>" for ε
  std::string ToText() const;

 private:
  std::vector<int> EpsilonClosure(std::vector<int> states) const;

  int initial_ = 0;
  std::vector<bool> final_;
  std::vector<Arc> arcs_;
};

// Returns an equivalent automaton without epsilon arcs. Weights are
// ignored on epsilon paths (only unweighted automata are supported).
Automaton RemoveEpsilon(const Automaton &automaton);

// Subset construction. Requires an epsilon-free input; the output keeps
// only states reachable from the initial state.
Automaton Determinize(const Automaton &automaton);

// Minimal deterministic automaton of the same language, without a sink
// state and without unreachable or dead states. Requires a deterministic
// input.
Automaton Minimize(const Automaton &automaton);

// Dense transition table of a deterministic automaton: next(state, tag) is
// the target state or -1.
class TransitionTable {
 public:
  explicit TransitionTable(const Automaton &deterministic);

  int num_states() const { return num_states_; }
  int initial() const { return initial_; }
  bool is_final(int state) const { return final_[state]; }
  int next(int state, Tag tag) const {
    return next_[static_cast<size_t>(state) * kNumTags + TagIndex(tag)];
  }

 private:
  int num_states_;
  int initial_;
  std::vector<bool> final_;
  std::vector<int> next_;
};

}  // namespace discner

#endif  // DISCNER_AUTOMATON_H_
