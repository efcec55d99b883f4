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

#include "discner/automaton.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace discner {

int Automaton::AddState() {
  final_.push_back(false);
  return num_states() - 1;
}

void Automaton::SetInitial(int state) {
  assert(state >= 0 && state < num_states());
  initial_ = state;
}

void Automaton::SetFinal(int state, bool is_final) { final_[state] = is_final; }

void Automaton::AddArc(int source, int label, int target, double weight) {
  assert(source >= 0 && source < num_states());
  assert(target >= 0 && target < num_states());
  assert(label == kEpsilon || (label >= 0 && label < kNumTags));
  arcs_.push_back({source, label, weight, target});
}

std::vector<int> Automaton::finals() const {
  std::vector<int> out;
  for (int s = 0; s < num_states(); ++s) {
    if (final_[s]) out.push_back(s);
  }
  return out;
}

bool Automaton::IsEpsilonFree() const {
  return std::none_of(arcs_.begin(), arcs_.end(),
                      [](const Arc &a) { return a.label == kEpsilon; });
}

bool Automaton::IsDeterministic() const {
  if (!IsEpsilonFree()) return false;
  std::vector<bool> seen(static_cast<size_t>(num_states()) * kNumTags, false);
  for (const Arc &a : arcs_) {
    auto slot = static_cast<size_t>(a.source) * kNumTags + a.label;
    if (seen[slot]) return false;
    seen[slot] = true;
  }
  return true;
}

std::vector<int> Automaton::EpsilonClosure(std::vector<int> states) const {
  std::vector<bool> in(num_states(), false);
  for (int s : states) in[s] = true;
  for (size_t k = 0; k < states.size(); ++k) {
    for (const Arc &a : arcs_) {
      if (a.source == states[k] && a.label == kEpsilon && !in[a.target]) {
        in[a.target] = true;
        states.push_back(a.target);
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

bool Automaton::Accepts(std::span<const Tag> tags) const {
  if (num_states() == 0) return false;
  std::vector<int> current = EpsilonClosure({initial_});
  for (Tag tag : tags) {
    std::vector<int> next;
    for (const Arc &a : arcs_) {
      if (a.label == TagIndex(tag) &&
          std::binary_search(current.begin(), current.end(), a.source)) {
        next.push_back(a.target);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = EpsilonClosure(std::move(next));
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(),
                     [this](int s) { return final_[s]; });
}

std::string Automaton::ToText() const {
  std::ostringstream out;
  out << "initial " << initial_ << "\n";
  out << "finals";
  for (int s : finals()) out << ' ' << s;
  out << "\n";
  for (const Arc &a : arcs_) {
    out << a.source << ' '
        << (a.label == kEpsilon ? std::string("<eps>")
                                : std::string(TagName(TagFromIndex(a.label))))
        << ' ' << a.weight << ' ' << a.target << "\n";
  }
  return out.str();
}

namespace {

// Keeps the states reachable from the initial state, renumbered in
// breadth-first order.
Automaton Connect(const Automaton &a) {
  std::vector<int> order{a.initial()};
  std::vector<int> id(a.num_states(), -1);
  id[a.initial()] = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    for (const Arc &arc : a.arcs()) {
      if (arc.source == order[k] && id[arc.target] < 0) {
        id[arc.target] = static_cast<int>(order.size());
        order.push_back(arc.target);
      }
    }
  }
  Automaton out;
  for (int s : order) out.SetFinal(out.AddState(), a.is_final(s));
  out.SetInitial(0);
  for (const Arc &arc : a.arcs()) {
    if (id[arc.source] >= 0) {
      out.AddArc(id[arc.source], arc.label, id[arc.target], arc.weight);
    }
  }
  return out;
}

}  // namespace

Automaton RemoveEpsilon(const Automaton &automaton) {
  if (automaton.IsEpsilonFree()) return automaton;
  const int n = automaton.num_states();
  std::vector<std::vector<int>> closure(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> c{s};
    std::vector<bool> in(n, false);
    in[s] = true;
    for (size_t k = 0; k < c.size(); ++k) {
      for (const Arc &a : automaton.arcs()) {
        if (a.source == c[k] && a.label == kEpsilon && !in[a.target]) {
          in[a.target] = true;
          c.push_back(a.target);
        }
      }
    }
    closure[s] = std::move(c);
  }

  Automaton out;
  for (int s = 0; s < n; ++s) out.AddState();
  out.SetInitial(automaton.initial());
  for (int s = 0; s < n; ++s) {
    std::vector<Arc> arcs;
    bool is_final = false;
    for (int c : closure[s]) {
      is_final |= automaton.is_final(c);
      for (const Arc &a : automaton.arcs()) {
        if (a.source != c || a.label == kEpsilon) continue;
        Arc copy{s, a.label, a.weight, a.target};
        if (std::find(arcs.begin(), arcs.end(), copy) == arcs.end()) {
          arcs.push_back(copy);
        }
      }
    }
    out.SetFinal(s, is_final);
    for (const Arc &a : arcs) out.AddArc(a.source, a.label, a.target, a.weight);
  }
  return Connect(out);
}

Automaton Determinize(const Automaton &automaton) {
  if (!automaton.IsEpsilonFree()) {
    throw std::invalid_argument("Determinize requires an epsilon-free automaton");
  }
  Automaton out;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    auto [it, inserted] = ids.emplace(subset, static_cast<int>(subsets.size()));
    if (inserted) {
      int s = out.AddState();
      out.SetFinal(s, std::any_of(subset.begin(), subset.end(), [&](int q) {
                     return automaton.is_final(q);
                   }));
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  out.SetInitial(intern({automaton.initial()}));
  for (size_t k = 0; k < subsets.size(); ++k) {
    for (int label = 0; label < kNumTags; ++label) {
      std::vector<int> next;
      for (const Arc &a : automaton.arcs()) {
        if (a.label == label &&
            std::binary_search(subsets[k].begin(), subsets[k].end(), a.source)) {
          next.push_back(a.target);
        }
      }
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      int target = intern(std::move(next));
      out.AddArc(static_cast<int>(k), label, target);
    }
  }
  return out;
}

Automaton Minimize(const Automaton &automaton) {
  if (!automaton.IsDeterministic()) {
    throw std::invalid_argument("Minimize requires a deterministic automaton");
  }
  Automaton connected = Connect(automaton);
  TransitionTable table(connected);
  const int n = table.num_states();

  // Drop states that cannot reach a final state.
  std::vector<bool> live(n, false);
  for (int s = 0; s < n; ++s) live[s] = table.is_final(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Arc &a : connected.arcs()) {
      if (live[a.target] && !live[a.source]) {
        live[a.source] = changed = true;
      }
    }
  }
  if (!live[table.initial()]) {
    Automaton empty;
    empty.SetInitial(empty.AddState());
    return empty;
  }
  auto next = [&](int s, int label) {
    int t = table.next(s, TagFromIndex(label));
    return (t >= 0 && live[t]) ? t : -1;
  };

  // Moore partition refinement; the implicit sink is class -1.
  std::vector<int> block(n, -1);
  for (int s = 0; s < n; ++s) {
    if (live[s]) block[s] = table.is_final(s) ? 1 : 0;
  }
  int num_blocks = 0;
  for (;;) {
    std::map<std::vector<int>, int> signatures;
    std::vector<int> refined(n, -1);
    for (int s = 0; s < n; ++s) {
      if (!live[s]) continue;
      std::vector<int> sig{block[s]};
      for (int label = 0; label < kNumTags; ++label) {
        int t = next(s, label);
        sig.push_back(t < 0 ? -1 : block[t]);
      }
      auto it = signatures.emplace(sig, static_cast<int>(signatures.size())).first;
      refined[s] = it->second;
    }
    const int count = static_cast<int>(signatures.size());
    block = std::move(refined);
    if (count == num_blocks) break;
    num_blocks = count;
  }

  // Number blocks in breadth-first order from the initial state.
  Automaton out;
  std::vector<int> id(num_blocks, -1);
  std::vector<int> representative;
  auto visit = [&](int s) {
    if (id[block[s]] < 0) {
      id[block[s]] = out.AddState();
      out.SetFinal(id[block[s]], table.is_final(s));
      representative.push_back(s);
    }
    return id[block[s]];
  };
  out.SetInitial(visit(table.initial()));
  for (size_t k = 0; k < representative.size(); ++k) {
    const int s = representative[k];
    for (int label = 0; label < kNumTags; ++label) {
      int t = next(s, label);
      if (t >= 0) out.AddArc(static_cast<int>(k), label, visit(t));
    }
  }
  return out;
}

TransitionTable::TransitionTable(const Automaton &deterministic)
    : num_states_(deterministic.num_states()),
      initial_(deterministic.initial()),
      final_(num_states_),
      next_(static_cast<size_t>(num_states_) * kNumTags, -1) {
  if (!deterministic.IsDeterministic()) {
    throw std::invalid_argument("TransitionTable requires a deterministic automaton");
  }
  for (int s = 0; s < num_states_; ++s) final_[s] = deterministic.is_final(s);
  for (const Arc &a : deterministic.arcs()) {
    next_[static_cast<size_t>(a.source) * kNumTags + a.label] = a.target;
  }
}

}  // namespace discner
