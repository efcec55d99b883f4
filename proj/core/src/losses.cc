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

#include "discner/losses.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "discner/errors.h"
#include "discner/inference.h"

namespace discner {

namespace {

bool InLanguage(const Lattice &lattice, const TagSequence &tags) {
  if (static_cast<int>(tags.size()) != lattice.length()) return false;
  int state = lattice.initial();
  for (Tag t : tags) {
    state = lattice.next(state, t);
    if (state < 0) return false;
  }
  return lattice.is_final(state);
}

std::vector<double> MemberScores(const PartialLabelSet &labels,
                                 const WeightMatrix &weights) {
  if (weights.length() != labels.length()) {
    throw std::invalid_argument("weight matrix does not match the sentence");
  }
  std::vector<double> scores;
  scores.reserve(labels.members().size());
  for (const TagSequence &y : labels.members()) {
    scores.push_back(SequenceScore(weights, y));
  }
  return scores;
}

double LogSumExp(const std::vector<double> &values) {
  const double top = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - top);
  return top + std::log(sum);
}

}  // namespace

PartialLabelSet::PartialLabelSet(SentenceAnnotation base, TagMode mode)
    : base_(std::move(base)) {
  std::vector<size_t> unresolved;
  if (mode == TagMode::kSemantic) {
    for (size_t s = 0; s < base_.sets.size(); ++s) {
      if (!base_.sets[s].resolved) unresolved.push_back(s);
    }
  }
  num_unresolved_ = static_cast<int>(unresolved.size());
  const size_t count = size_t{1} << num_unresolved_;
  members_.reserve(count);
  for (size_t j = 0; j < count; ++j) {
    SentenceAnnotation variant = base_;
    for (size_t i = 0; i < unresolved.size(); ++i) {
      if (j >> i & 1) variant.sets[unresolved[i]].FlipTypes();
    }
    members_.push_back(Encode(variant));
  }
}

double ClampedLogPartition(const PartialLabelSet &labels,
                           const WeightMatrix &weights) {
  return LogSumExp(MemberScores(labels, weights));
}

TagMatrix ClampedMarginals(const PartialLabelSet &labels,
                           const WeightMatrix &weights) {
  std::vector<double> scores = MemberScores(labels, weights);
  const double log_z = LogSumExp(scores);
  TagMatrix out(labels.length());
  for (size_t m = 0; m < scores.size(); ++m) {
    const double p = std::exp(scores[m] - log_z);
    const TagSequence &y = labels.members()[m];
    for (int i = 0; i < labels.length(); ++i) out(i, y[i]) += p;
  }
  return out;
}

LossResult Nll(const Lattice &lattice, const WeightMatrix &weights,
               const TagSequence &gold) {
  if (!InLanguage(lattice, gold)) {
    throw IllFormedError("gold tag sequence is not well-formed: " +
                         FormatTags(gold));
  }
  ForwardBackwardResult fb = ForwardBackward(lattice, weights);
  LossResult result;
  // Non-negative in exact arithmetic; rounding can dip below zero.
  result.loss = std::max(0.0, fb.log_partition - SequenceScore(weights, gold));
  result.gradient = std::move(fb.marginals);
  for (int i = 0; i < lattice.length(); ++i) result.gradient(i, gold[i]) -= 1.0;
  return result;
}

LossResult PartialNll(const Lattice &lattice, const WeightMatrix &weights,
                      const PartialLabelSet &labels) {
  for (const TagSequence &y : labels.members()) {
    if (!InLanguage(lattice, y)) {
      throw IllFormedError("partial label member is not well-formed: " +
                           FormatTags(y));
    }
  }
  ForwardBackwardResult fb = ForwardBackward(lattice, weights);
  TagMatrix clamped = ClampedMarginals(labels, weights);
  LossResult result;
  result.loss =
      std::max(0.0, fb.log_partition - ClampedLogPartition(labels, weights));
  result.gradient = std::move(fb.marginals);
  auto grad = result.gradient.values();
  auto sub = clamped.values();
  for (size_t k = 0; k < grad.size(); ++k) grad[k] -= sub[k];
  return result;
}

HardEmResult HardEmStep(const Lattice &lattice, const WeightMatrix &weights,
                        const PartialLabelSet &labels) {
  std::vector<double> scores = MemberScores(labels, weights);
  size_t best = 0;
  for (size_t m = 1; m < scores.size(); ++m) {
    if (scores[m] > scores[best]) best = m;
  }
  HardEmResult result;
  result.chosen = labels.members()[best];
  result.loss = Nll(lattice, weights, result.chosen);
  return result;
}

}  // namespace discner
