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

#include <benchmark/benchmark.h>

#include <random>

#include "discner/bench.h"
#include "discner/grammar.h"
#include "discner/inference.h"
#include "discner/lattice.h"
#include "discner/model.h"

namespace discner {
namespace {

WeightMatrix RandomMatrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> draw(0.0, 2.0);
  WeightMatrix w(n);
  for (double &v : w.values()) v = draw(rng);
  return w;
}

const Automaton &Grammar() {
  static const Automaton g = GrammarAutomaton(TagMode::kSemantic);
  return g;
}

void BM_Viterbi(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lattice = Intersect(Grammar(), n);
  WeightMatrix w = RandomMatrix(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Viterbi(lattice, w));
  state.SetItemsProcessed(state.iterations() * n);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Viterbi)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oN);

void BM_Forward(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lattice = Intersect(Grammar(), n);
  WeightMatrix w = RandomMatrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Forward(lattice, w));
  state.SetItemsProcessed(state.iterations() * n);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Forward)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oN);

void BM_ForwardBackward(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lattice = Intersect(Grammar(), n);
  WeightMatrix w = RandomMatrix(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ForwardBackward(lattice, w));
  state.SetItemsProcessed(state.iterations() * n);
  state.SetComplexityN(n);
}
BENCHMARK(BM_ForwardBackward)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oN);

void BM_Intersect(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Intersect(Grammar(), n));
}
BENCHMARK(BM_Intersect)->Arg(64)->Arg(1024);

void BM_GrammarConstruction(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(Minimize(GrammarAutomaton(TagMode::kSemantic)));
}
BENCHMARK(BM_GrammarConstruction);

// Feature extraction, scoring and decoding of one sentence.
void BM_Predict(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Tagger tagger(TagMode::kSemantic);
  LinearScorer scorer = RandomScorer(std::size_t{1} << 16, TagMode::kSemantic, 4);
  auto sentence = SyntheticSentences(1, n, 5)[0];
  for (auto _ : state) benchmark::DoNotOptimize(tagger.Predict(scorer, sentence));
  state.SetItemsProcessed(state.iterations() * n);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Predict)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oN);

}  // namespace
}  // namespace discner

BENCHMARK_MAIN();
