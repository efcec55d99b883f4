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

#ifndef DISCNER_CORPUS_H_
#define DISCNER_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discner/errors.h"
#include "discner/mention.h"
#include "discner/model.h"
#include "discner/scheme.h"

namespace discner {

// One annotated sentence.
struct CorpusRecord {
  std::vector<std::string> tokens;
  MentionSet mentions;
  // Optional gold component types; a component whose span appears here gets
  // that type. Not part of the file format.
  std::vector<Component> component_types;

  friend bool operator==(const CorpusRecord &, const CorpusRecord &) = default;
};

// Corpus file format. Each record is two lines:
//
//   pain in arms and shoulders
//   0-1;2-2|0-1;4-4
//
// The first line holds space-separated tokens. The second holds mentions
// separated by '|', each mention being its fragments "b-e" (0-based,
// inclusive) joined by ';'. The second line is empty when the sentence has
// no mention. Records are separated by one blank line.
//
// ReadCorpus throws ParseError (with the 1-based line number) on malformed
// input.
std::vector<CorpusRecord> ReadCorpus(std::istream &in);
std::vector<CorpusRecord> ReadCorpusFile(const std::filesystem::path &path);
void WriteCorpus(std::span<const CorpusRecord> records, std::ostream &out);
void WriteCorpusFile(std::span<const CorpusRecord> records,
                     const std::filesystem::path &path);

// Parses a mention line. Throws ParseError tagged with `line_number`.
MentionSet ParseMentions(std::string_view line, int length, int line_number);
std::string FormatMentions(const MentionSet &mentions);

// Tag file: one space-separated tag sequence per line, aligned with the
// records of a corpus. Unknown tags throw ParseError.
std::vector<TagSequence> ReadTagFile(std::istream &in);
void WriteTagFile(std::span<const TagSequence> tags, std::ostream &out);

// Typer returning the gold component types of a record, if any.
ComponentTyper GoldTyper(const CorpusRecord &record);

struct DroppedRecord {
  std::size_t index = 0;
  IncompatibleReason reason = IncompatibleReason::kPartialOverlap;
  std::string detail;
};

struct FilterResult {
  std::vector<CorpusRecord> kept;
  std::vector<DroppedRecord> dropped;

  std::map<IncompatibleReason, int> CountByReason() const;
};

// Splits records into those whose mentions have a two-layer form and those
// that do not.
FilterResult FilterIncompatible(std::span<const CorpusRecord> records);

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t mentions = 0;
  std::size_t discontinuous_mentions = 0;
  std::size_t incompatible_sentences = 0;

  friend bool operator==(const CorpusStats &, const CorpusStats &) = default;
};

CorpusStats ComputeStats(std::span<const CorpusRecord> records);

// Lowercased body-part names and the set of words occurring in them.
class Lexicon {
 public:
  Lexicon() = default;

  // One entry per line; blank lines are skipped.
  static Lexicon Read(std::istream &in);
  static Lexicon ReadFile(const std::filesystem::path &path);

  void Add(std::string_view entry);
  bool empty() const { return entries_.empty(); }
  const std::set<std::string> &entries() const { return entries_; }
  bool ContainsWord(std::string_view word) const;

 private:
  std::set<std::string> entries_;
  std::set<std::string, std::less<>> words_;
};

// Types the components of unresolved sets from the lexicon: components with
// a word in the lexicon become x, the others y. Sets where no component
// matches, or where matches fall on both sides of the set, stay unresolved.
// Resolved sets and all spans are left untouched.
SentenceAnnotation SilverType(const SentenceAnnotation &annotation,
                              std::span<const std::string> tokens,
                              const Lexicon &lexicon);

// Builds the partial label set of a record: gold types when the record has
// them, silver types when a lexicon is given, unresolved otherwise. Throws
// IncompatibleError.
TrainingExample MakeTrainingExample(const CorpusRecord &record, TagMode mode,
                                    const Lexicon *lexicon = nullptr);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t gold = 0;
  std::size_t predicted = 0;
  std::size_t matched = 0;
};

struct EvalReport {
  Prf all;
  Prf discontinuous;  // restricted to mentions with several fragments
};

// Exact-match mention scores. Precision with no prediction (or recall with
// no gold mention) is 0, except that when both gold and predictions are
// empty every metric is 1. Throws LengthMismatchError.
EvalReport Evaluate(std::span<const MentionSet> gold,
                    std::span<const MentionSet> predicted);

}  // namespace discner

#endif  // DISCNER_CORPUS_H_
