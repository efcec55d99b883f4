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

#include "discner/model.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "discner/errors.h"
#include "discner/grammar.h"
#include "discner/inference.h"
#include "discner/scheme.h"

namespace discner {

namespace {

constexpr std::string_view kMagic = "discner-linear-model";
constexpr int kFormatVersion = 1;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::vector<std::vector<std::uint32_t>> ExtractFeatures(
    std::span<const std::string> tokens, std::size_t dim) {
  const int n = static_cast<int>(tokens.size());
  std::vector<std::string> lower;
  lower.reserve(n);
  for (const std::string &t : tokens) lower.push_back(Lower(t));

  std::vector<std::vector<std::uint32_t>> features(n);
  auto add = [dim](std::vector<std::uint32_t> &out, const std::string &name) {
    out.push_back(static_cast<std::uint32_t>(Fnv1a(name) % dim));
  };
  for (int i = 0; i < n; ++i) {
    const std::string &w = lower[i];
    auto &out = features[i];
    out.reserve(6);
    add(out, "bias");
    add(out, "w=" + w);
    add(out, "p=" + (i > 0 ? lower[i - 1] : std::string("<s>")));
    add(out, "n=" + (i + 1 < n ? lower[i + 1] : std::string("</s>")));
    add(out, "pre3=" + w.substr(0, 3));
    add(out, "suf3=" + (w.size() > 3 ? w.substr(w.size() - 3) : w));
  }
  return features;
}

LinearScorer::LinearScorer(std::size_t dim, TagMode mode)
    : dim_(dim), mode_(mode), values_(dim * kNumTags, 0.0) {
  if (dim == 0) throw ConfigError("feature dimension must be positive");
}

void LinearScorer::Decay(double factor) {
  scale_ *= factor;
  if (scale_ < 1e-9) Normalize();
}

void LinearScorer::Normalize() {
  if (scale_ == 1.0) return;
  for (double &v : values_) v *= scale_;
  scale_ = 1.0;
}

WeightMatrix LinearScorer::ScoreFeatures(
    const std::vector<std::vector<std::uint32_t>> &features) const {
  WeightMatrix w(static_cast<int>(features.size()));
  for (size_t i = 0; i < features.size(); ++i) {
    auto row = w.row(static_cast<int>(i));
    for (std::uint32_t f : features[i]) {
      const double *theta = values_.data() + static_cast<size_t>(f) * kNumTags;
      for (int t = 0; t < kNumTags; ++t) row[t] += theta[t];
    }
    for (double &v : row) v *= scale_;
  }
  return w;
}

WeightMatrix LinearScorer::Score(std::span<const std::string> tokens) const {
  return ScoreFeatures(ExtractFeatures(tokens, dim_));
}

void LinearScorer::Save(std::ostream &out) const {
  out << kMagic << ' ' << kFormatVersion << "\n";
  out << "dim " << dim_ << "\n";
  out << "mode " << ModeName(mode_) << "\n";
  out << "tags";
  for (Tag t : kAllTags) out << ' ' << TagName(t);
  out << "\n";
  size_t nonzero = 0;
  for (double v : values_) nonzero += v != 0.0;
  out << "nonzero " << nonzero << "\n";
  char buffer[64];
  for (size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] == 0.0) continue;
    std::snprintf(buffer, sizeof(buffer), "%.17g", scale_ * values_[k]);
    out << k / kNumTags << ' ' << k % kNumTags << ' ' << buffer << "\n";
  }
}

LinearScorer LinearScorer::Load(std::istream &in) {
  int line_number = 0;
  std::string line;
  auto next_line = [&]() -> std::istringstream {
    if (!std::getline(in, line)) throw ParseError(line_number + 1, "unexpected end of model file");
    ++line_number;
    return std::istringstream(line);
  };
  auto expect_key = [&](std::istringstream &fields, std::string_view key) {
    std::string word;
    if (!(fields >> word) || word != key) {
      throw ParseError(line_number, "expected '" + std::string(key) + "'");
    }
  };

  {
    auto fields = next_line();
    int version = 0;
    expect_key(fields, kMagic);
    if (!(fields >> version) || version != kFormatVersion) {
      throw ParseError(line_number, "unsupported model format version");
    }
  }
  std::size_t dim = 0;
  {
    auto fields = next_line();
    expect_key(fields, "dim");
    if (!(fields >> dim) || dim == 0) throw ParseError(line_number, "bad dimension");
  }
  TagMode mode = TagMode::kSemantic;
  {
    auto fields = next_line();
    expect_key(fields, "mode");
    std::string name;
    fields >> name;
    auto parsed = ParseMode(name);
    if (!parsed) throw ParseError(line_number, "unknown mode '" + name + "'");
    mode = *parsed;
  }
  {
    auto fields = next_line();
    expect_key(fields, "tags");
    for (Tag t : kAllTags) {
      std::string name;
      if (!(fields >> name) || name != TagName(t)) {
        throw ParseError(line_number, "tag order differs from this build");
      }
    }
  }
  size_t nonzero = 0;
  {
    auto fields = next_line();
    expect_key(fields, "nonzero");
    if (!(fields >> nonzero)) throw ParseError(line_number, "bad nonzero count");
  }
  LinearScorer scorer(dim, mode);
  for (size_t k = 0; k < nonzero; ++k) {
    auto fields = next_line();
    std::size_t feature = 0;
    int tag = 0;
    std::string value_text;
    if (!(fields >> feature >> tag >> value_text) || feature >= dim || tag < 0 ||
        tag >= kNumTags) {
      throw ParseError(line_number, "bad parameter line");
    }
    char *end = nullptr;
    double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0') {
      throw ParseError(line_number, "bad parameter value");
    }
    scorer.values_[feature * kNumTags + tag] = value;
  }
  return scorer;
}

Tagger::Tagger(TagMode mode) : mode_(mode), grammar_(GrammarAutomaton(mode)) {}

TagSequence Tagger::BestTags(const LinearScorer &scorer,
                             std::span<const std::string> tokens) const {
  WeightMatrix w = scorer.Score(tokens);
  return Viterbi(LatticeFor(w.length()), w).tags;
}

MentionSet Tagger::Predict(const LinearScorer &scorer,
                           std::span<const std::string> tokens) const {
  return Decode(BestTags(scorer, tokens));
}

std::vector<MentionSet> Tagger::PredictAll(
    const LinearScorer &scorer, const std::vector<std::vector<std::string>> &sentences,
    int threads) const {
  std::vector<MentionSet> out(sentences.size());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(sentences.size())));
  if (threads <= 1) {
    for (size_t k = 0; k < sentences.size(); ++k) out[k] = Predict(scorer, sentences[k]);
    return out;
  }
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (size_t k = t; k < sentences.size(); k += threads) {
          out[k] = Predict(scorer, sentences[k]);
        }
      });
    }
  }
  return out;
}

}  // namespace discner
