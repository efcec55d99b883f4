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

#include "discner/corpus.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace discner {

namespace {

std::vector<std::string> SplitWhitespace(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

int ParseIndex(std::string_view text, int line_number) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line_number, "bad word index '" + std::string(text) + "'");
  }
  return value;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Prf Score(std::size_t gold, std::size_t predicted, std::size_t matched) {
  Prf prf;
  prf.gold = gold;
  prf.predicted = predicted;
  prf.matched = matched;
  if (gold == 0 && predicted == 0) {
    prf.precision = prf.recall = prf.f1 = 1.0;
    return prf;
  }
  prf.precision = predicted == 0 ? 0.0 : static_cast<double>(matched) / predicted;
  prf.recall = gold == 0 ? 0.0 : static_cast<double>(matched) / gold;
  const double sum = prf.precision + prf.recall;
  prf.f1 = sum == 0.0 ? 0.0 : 2.0 * prf.precision * prf.recall / sum;
  return prf;
}

}  // namespace

MentionSet ParseMentions(std::string_view line, int length, int line_number) {
  MentionSet mentions;
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  if (line.empty()) return mentions;
  for (std::string_view mention_text : Split(line, '|')) {
    std::vector<Interval> fragments;
    for (std::string_view fragment : Split(mention_text, ';')) {
      auto dash = fragment.find('-');
      if (dash == std::string_view::npos) {
        throw ParseError(line_number, "fragment '" + std::string(fragment) +
                                          "' is not of the form b-e");
      }
      Interval f{ParseIndex(fragment.substr(0, dash), line_number),
                 ParseIndex(fragment.substr(dash + 1), line_number)};
      if (f.begin > f.end) {
        throw ParseError(line_number, "fragment '" + std::string(fragment) +
                                          "' ends before it begins");
      }
      if (f.end >= length) {
        throw ParseError(line_number, "fragment '" + std::string(fragment) +
                                          "' exceeds the sentence length " +
                                          std::to_string(length));
      }
      fragments.push_back(f);
    }
    mentions.insert(Mention(std::move(fragments)));
  }
  return mentions;
}

std::string FormatMentions(const MentionSet &mentions) {
  std::string out;
  for (const Mention &m : mentions) {
    if (!out.empty()) out += '|';
    out += m.ToString();
  }
  return out;
}

std::vector<CorpusRecord> ReadCorpus(std::istream &in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  std::vector<CorpusRecord> records;
  size_t i = 0;
  while (i < lines.size()) {
    if (IsBlank(lines[i])) {
      ++i;
      continue;
    }
    CorpusRecord record;
    record.tokens = SplitWhitespace(lines[i]);
    const int token_line = static_cast<int>(i) + 1;
    if (i + 1 >= lines.size()) {
      throw ParseError(token_line + 1, "missing mention line");
    }
    record.mentions = ParseMentions(lines[i + 1],
                                    static_cast<int>(record.tokens.size()),
                                    token_line + 1);
    if (i + 2 < lines.size() && !IsBlank(lines[i + 2])) {
      throw ParseError(token_line + 2, "expected a blank line between records");
    }
    records.push_back(std::move(record));
    i += 3;
  }
  return records;
}

std::vector<CorpusRecord> ReadCorpusFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path.string());
  return ReadCorpus(in);
}

void WriteCorpus(std::span<const CorpusRecord> records, std::ostream &out) {
  for (size_t r = 0; r < records.size(); ++r) {
    if (r > 0) out << "\n";
    const CorpusRecord &record = records[r];
    for (size_t t = 0; t < record.tokens.size(); ++t) {
      if (t > 0) out << ' ';
      out << record.tokens[t];
    }
    out << "\n" << FormatMentions(record.mentions) << "\n";
  }
}

void WriteCorpusFile(std::span<const CorpusRecord> records,
                     const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write corpus file " + path.string());
  WriteCorpus(records, out);
}

std::vector<TagSequence> ReadTagFile(std::istream &in) {
  std::vector<TagSequence> out;
  int line_number = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    auto tags = ParseTags(line);
    if (!tags) throw ParseError(line_number, "unknown tag in '" + line + "'");
    out.push_back(std::move(*tags));
  }
  return out;
}

void WriteTagFile(std::span<const TagSequence> tags, std::ostream &out) {
  for (const TagSequence &t : tags) out << FormatTags(t) << "\n";
}

ComponentTyper GoldTyper(const CorpusRecord &record) {
  if (record.component_types.empty()) return {};
  return [types = record.component_types](const Interval &span)
             -> std::optional<ComponentType> {
    for (const Component &c : types) {
      if (c.span == span) return c.type;
    }
    return std::nullopt;
  };
}

std::map<IncompatibleReason, int> FilterResult::CountByReason() const {
  std::map<IncompatibleReason, int> counts;
  for (const DroppedRecord &d : dropped) ++counts[d.reason];
  return counts;
}

FilterResult FilterIncompatible(std::span<const CorpusRecord> records) {
  FilterResult result;
  for (size_t r = 0; r < records.size(); ++r) {
    try {
      ToTwoLayer(records[r].mentions, static_cast<int>(records[r].tokens.size()));
      result.kept.push_back(records[r]);
    } catch (const IncompatibleError &e) {
      result.dropped.push_back({r, e.reason(), e.what()});
    }
  }
  return result;
}

CorpusStats ComputeStats(std::span<const CorpusRecord> records) {
  CorpusStats stats;
  for (const CorpusRecord &record : records) {
    ++stats.sentences;
    stats.mentions += record.mentions.size();
    for (const Mention &m : record.mentions) {
      stats.discontinuous_mentions += m.IsDiscontinuous();
    }
    try {
      ToTwoLayer(record.mentions, static_cast<int>(record.tokens.size()));
    } catch (const IncompatibleError &) {
      ++stats.incompatible_sentences;
    }
  }
  return stats;
}

Lexicon Lexicon::Read(std::istream &in) {
  Lexicon lexicon;
  for (std::string line; std::getline(in, line);) lexicon.Add(line);
  return lexicon;
}

Lexicon Lexicon::ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file " + path.string());
  return Read(in);
}

void Lexicon::Add(std::string_view entry) {
  std::vector<std::string> words = SplitWhitespace(Lower(entry));
  if (words.empty()) return;
  std::string joined;
  for (const std::string &w : words) {
    if (!joined.empty()) joined += ' ';
    joined += w;
    words_.insert(w);
  }
  entries_.insert(std::move(joined));
}

bool Lexicon::ContainsWord(std::string_view word) const {
  return words_.find(Lower(word)) != words_.end();
}

SentenceAnnotation SilverType(const SentenceAnnotation &annotation,
                              std::span<const std::string> tokens,
                              const Lexicon &lexicon) {
  SentenceAnnotation out = annotation;
  for (TwoLayerSet &set : out.sets) {
    if (set.resolved) continue;
    bool matched_x = false, matched_y = false;
    for (const Component &c : set.components) {
      bool match = false;
      for (int i = c.span.begin; i <= c.span.end && !match; ++i) {
        match = lexicon.ContainsWord(tokens[i]);
      }
      if (!match) continue;
      (c.type == ComponentType::kX ? matched_x : matched_y) = true;
    }
    if (matched_x == matched_y) continue;  // no match, or matches on both sides
    if (matched_y) set.FlipTypes();
    set.resolved = true;
  }
  return out;
}

TrainingExample MakeTrainingExample(const CorpusRecord &record, TagMode mode,
                                    const Lexicon *lexicon) {
  const int length = static_cast<int>(record.tokens.size());
  SentenceAnnotation ann = ToTwoLayer(record.mentions, length, GoldTyper(record));
  if (lexicon != nullptr && mode == TagMode::kSemantic) {
    ann = SilverType(ann, record.tokens, *lexicon);
  }
  return TrainingExample{record.tokens, PartialLabelSet(std::move(ann), mode)};
}

EvalReport Evaluate(std::span<const MentionSet> gold,
                    std::span<const MentionSet> predicted) {
  if (gold.size() != predicted.size()) {
    throw LengthMismatchError("gold has " + std::to_string(gold.size()) +
                              " sentences, predictions have " +
                              std::to_string(predicted.size()));
  }
  std::size_t g = 0, p = 0, m = 0, dg = 0, dp = 0, dm = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    for (const Mention &mention : gold[s]) {
      ++g;
      dg += mention.IsDiscontinuous();
    }
    for (const Mention &mention : predicted[s]) {
      ++p;
      dp += mention.IsDiscontinuous();
      if (gold[s].count(mention) > 0) {
        ++m;
        dm += mention.IsDiscontinuous();
      }
    }
  }
  return {Score(g, p, m), Score(dg, dp, dm)};
}

}  // namespace discner
