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

#ifndef DISCNER_INFERENCE_H_
#define DISCNER_INFERENCE_H_

#include <cmath>
#include <limits>
#include <vector>

#include "discner/lattice.h"
#include "discner/tag_matrix.h"
#include "discner/tags.h"

namespace discner {

// (max, +) semiring used for MAP inference.
struct TropicalSemiring {
  static double Zero() { return -std::numeric_limits<double>::infinity(); }
  static double One() { return 0.0; }
  static double Plus(double a, double b) { return a < b ? b : a; }
  static double Times(double a, double b) { return a + b; }
};

// (log-add-exp, +) semiring used for marginal inference. Plus shifts by the
// larger argument before exponentiating.
struct LogSemiring {
  static double Zero() { return -std::numeric_limits<double>::infinity(); }
  static double One() { return 0.0; }
  static double Plus(double a, double b) {
    if (a == Zero()) return b;
    if (b == Zero()) return a;
    return a < b ? b + std::log1p(std::exp(a - b))
                 : a + std::log1p(std::exp(b - a));
  }
  static double Times(double a, double b) { return a + b; }
};

// Forward distances alpha(i, q): semiring sum over all paths from the
// initial state to (i, q). Stored row-major as (n + 1) x |Q|.
template <typename Semiring>
std::vector<double> ForwardDistances(const Lattice &lattice,
                                     const WeightMatrix &weights) {
  const int q = lattice.num_grammar_states();
  std::vector<double> alpha(lattice.num_states(), Semiring::Zero());
  alpha[lattice.initial()] = Semiring::One();
  for (int i = 0; i < lattice.length(); ++i) {
    const double *from = alpha.data() + static_cast<size_t>(i) * q;
    double *to = alpha.data() + static_cast<size_t>(i + 1) * q;
    for (const GrammarArc &a : lattice.arcs()) {
      if (from[a.source] == Semiring::Zero()) continue;
      to[a.target] = Semiring::Plus(
          to[a.target], Semiring::Times(from[a.source], weights(i, a.tag)));
    }
  }
  return alpha;
}

// Backward distances beta(i, q): semiring sum over all paths from (i, q)
// to a final state at position n.
template <typename Semiring>
std::vector<double> BackwardDistances(const Lattice &lattice,
                                      const WeightMatrix &weights) {
  const int q = lattice.num_grammar_states();
  const int n = lattice.length();
  std::vector<double> beta(lattice.num_states(), Semiring::Zero());
  for (int s = 0; s < q; ++s) {
    if (lattice.is_final(s)) beta[static_cast<size_t>(n) * q + s] = Semiring::One();
  }
  for (int i = n - 1; i >= 0; --i) {
    double *from = beta.data() + static_cast<size_t>(i) * q;
    const double *to = beta.data() + static_cast<size_t>(i + 1) * q;
    for (const GrammarArc &a : lattice.arcs()) {
      if (to[a.target] == Semiring::Zero()) continue;
      from[a.source] = Semiring::Plus(
          from[a.source], Semiring::Times(weights(i, a.tag), to[a.target]));
    }
  }
  return beta;
}

// Semiring sum over all accepting paths.
template <typename Semiring>
double ShortestDistance(const Lattice &lattice, const WeightMatrix &weights) {
  std::vector<double> alpha = ForwardDistances<Semiring>(lattice, weights);
  const int q = lattice.num_grammar_states();
  double total = Semiring::Zero();
  for (int s = 0; s < q; ++s) {
    if (lattice.is_final(s)) {
      total = Semiring::Plus(total,
                             alpha[static_cast<size_t>(lattice.length()) * q + s]);
    }
  }
  return total;
}

struct ViterbiResult {
  double score = 0.0;
  TagSequence tags;
};

// Highest scoring well-formed tag sequence. Among equally scoring
// sequences the lexicographically smallest one (in tag index order) is
// returned, so the all-zero weight matrix yields CB CB ... CB.
ViterbiResult Viterbi(const Lattice &lattice, const WeightMatrix &weights);

// Log-partition A(w) = log sum over well-formed y of exp <y, w>.
double Forward(const Lattice &lattice, const WeightMatrix &weights);

struct ForwardBackwardResult {
  double log_partition = 0.0;
  MarginalTable marginals;
};

// Log-partition and tag marginals (the gradient of the log-partition).
ForwardBackwardResult ForwardBackward(const Lattice &lattice,
                                      const WeightMatrix &weights);

MarginalTable Marginals(const Lattice &lattice, const WeightMatrix &weights);

}  // namespace discner

#endif  // DISCNER_INFERENCE_H_
