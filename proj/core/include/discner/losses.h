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

#ifndef DISCNER_LOSSES_H_
#define DISCNER_LOSSES_H_

#include <vector>

#include "discner/lattice.h"
#include "discner/scheme.h"
#include "discner/tag_matrix.h"
#include "discner/tags.h"

namespace discner {

// The tag sequences that reproduce a gold mention set when the component
// types of k sets are unknown: every combination of x/y orientation of the
// unresolved sets, 2^k members.
//
// Member j flips the i-th unresolved set (left to right) iff bit i of j is
// set, so member 0 is the base annotation as given.
class PartialLabelSet {
 public:
  // In structural mode orientations are fixed and the set has one member.
  PartialLabelSet(SentenceAnnotation base, TagMode mode);

  const SentenceAnnotation &base() const { return base_; }
  int num_unresolved() const { return num_unresolved_; }
  const std::vector<TagSequence> &members() const { return members_; }
  int length() const { return base_.length; }

 private:
  SentenceAnnotation base_;
  int num_unresolved_ = 0;
  std::vector<TagSequence> members_;
};

struct LossResult {
  double loss = 0.0;
  TagMatrix gradient;  // d loss / d w
};

// Clamped log-partition: log sum over members of exp <y, w>.
double ClampedLogPartition(const PartialLabelSet &labels,
                           const WeightMatrix &weights);

// Posterior-weighted average of the member one-hot matrices, i.e. the
// gradient of the clamped log-partition.
TagMatrix ClampedMarginals(const PartialLabelSet &labels,
                           const WeightMatrix &weights);

// Negative log-likelihood -<y, w> + A(w). Throws IllFormedError when the
// gold sequence is not in the lattice language.
LossResult Nll(const Lattice &lattice, const WeightMatrix &weights,
               const TagSequence &gold);

// A(w) - A~(w), the negative log-probability of the partial label set.
// The clamped marginals are treated as constants, which gives the gradient
// marginals(w) - clamped_marginals(w).
LossResult PartialNll(const Lattice &lattice, const WeightMatrix &weights,
                      const PartialLabelSet &labels);

struct HardEmResult {
  LossResult loss;
  TagSequence chosen;
};

// Picks the best scoring member (first one on ties) and returns its NLL.
HardEmResult HardEmStep(const Lattice &lattice, const WeightMatrix &weights,
                        const PartialLabelSet &labels);

}  // namespace discner

#endif  // DISCNER_LOSSES_H_
