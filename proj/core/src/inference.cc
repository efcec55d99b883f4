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

#include "discner/inference.h"

#include <stdexcept>

#include "discner/errors.h"

namespace discner {

namespace {

void CheckShape(const Lattice &lattice, const WeightMatrix &weights) {
  if (weights.length() != lattice.length()) {
    throw std::invalid_argument("weight matrix has " +
                                std::to_string(weights.length()) +
                                " rows, lattice has " +
                                std::to_string(lattice.length()) + " positions");
  }
}

}  // namespace

ViterbiResult Viterbi(const Lattice &lattice, const WeightMatrix &weights) {
  CheckShape(lattice, weights);
  const int n = lattice.length();
  const int q = lattice.num_grammar_states();
  const double kZero = TropicalSemiring::Zero();
  std::vector<double> alpha = ForwardDistances<TropicalSemiring>(lattice, weights);
  auto a = [&](int i, int s) { return alpha[static_cast<size_t>(i) * q + s]; };

  double best = kZero;
  for (int s = 0; s < q; ++s) {
    if (lattice.is_final(s)) best = std::max(best, a(n, s));
  }
  if (best == kZero) throw EmptyLanguageError("lattice has no accepting path");

  // Mark the states lying on some optimal path. An arc is tight when it
  // realizes the forward maximum of its target; alpha(i + 1, q) is computed
  // with the very same additions, so equality tests are exact.
  std::vector<bool> optimal(lattice.num_states(), false);
  auto opt = [&](int i, int s) { return optimal[static_cast<size_t>(i) * q + s]; };
  for (int s = 0; s < q; ++s) {
    optimal[static_cast<size_t>(n) * q + s] = lattice.is_final(s) && a(n, s) == best;
  }
  for (int i = n - 1; i >= 0; --i) {
    for (const GrammarArc &arc : lattice.arcs()) {
      if (a(i, arc.source) == kZero || !opt(i + 1, arc.target)) continue;
      if (a(i, arc.source) + weights(i, arc.tag) == a(i + 1, arc.target)) {
        optimal[static_cast<size_t>(i) * q + arc.source] = true;
      }
    }
  }

  // Walk left to right taking the smallest tag on a tight arc.
  ViterbiResult result;
  result.score = best;
  result.tags.reserve(n);
  int state = lattice.initial();
  for (int i = 0; i < n; ++i) {
    bool moved = false;
    for (Tag t : kAllTags) {
      int next = lattice.next(state, t);
      if (next < 0 || !opt(i + 1, next)) continue;
      if (a(i, state) + weights(i, t) == a(i + 1, next)) {
        result.tags.push_back(t);
        state = next;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("viterbi backtrace lost the optimal path");
  }
  return result;
}

double Forward(const Lattice &lattice, const WeightMatrix &weights) {
  CheckShape(lattice, weights);
  double total = ShortestDistance<LogSemiring>(lattice, weights);
  if (total == LogSemiring::Zero()) {
    throw EmptyLanguageError("lattice has no accepting path");
  }
  return total;
}

ForwardBackwardResult ForwardBackward(const Lattice &lattice,
                                      const WeightMatrix &weights) {
  CheckShape(lattice, weights);
  const int n = lattice.length();
  const int q = lattice.num_grammar_states();
  std::vector<double> alpha = ForwardDistances<LogSemiring>(lattice, weights);
  std::vector<double> beta = BackwardDistances<LogSemiring>(lattice, weights);

  ForwardBackwardResult result;
  result.log_partition = beta[lattice.initial()];
  if (result.log_partition == LogSemiring::Zero()) {
    throw EmptyLanguageError("lattice has no accepting path");
  }
  result.marginals = MarginalTable(n);
  for (int i = 0; i < n; ++i) {
    const double *from = alpha.data() + static_cast<size_t>(i) * q;
    const double *to = beta.data() + static_cast<size_t>(i + 1) * q;
    for (const GrammarArc &arc : lattice.arcs()) {
      if (from[arc.source] == LogSemiring::Zero() ||
          to[arc.target] == LogSemiring::Zero()) {
        continue;
      }
      result.marginals(i, arc.tag) += std::exp(
          from[arc.source] + weights(i, arc.tag) + to[arc.target] -
          result.log_partition);
    }
  }
  return result;
}

MarginalTable Marginals(const Lattice &lattice, const WeightMatrix &weights) {
  return ForwardBackward(lattice, weights).marginals;
}

}  // namespace discner
