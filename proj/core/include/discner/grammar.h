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

#ifndef DISCNER_GRAMMAR_H_
#define DISCNER_GRAMMAR_H_

#include "discner/automaton.h"
#include "discner/tags.h"

namespace discner {

// Grammar automaton with epsilon transitions, as designed by hand: two
// states for CB/CI/O runs, and for each orientation of a set (leftmost
// component typed x, or typed y) seven states tracking the inner structure
// of the set. The structural mode has no set starting with DB-By.
Automaton GrammarAutomatonWithEpsilon(TagMode mode);

// Epsilon-free deterministic grammar automaton, all weights zero. Its
// language is exactly the set of well-formed tag sequences (of the mode).
Automaton GrammarAutomaton(TagMode mode);

}  // namespace discner

#endif  // DISCNER_GRAMMAR_H_
