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

// discner: command line front end.
//
// Exit status: 0 on success, 1 when the input is readable but fails
// validation (incompatible or ill-formed annotations), 2 on I/O, parse and
// usage errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "discner/automaton.h"
#include "discner/bench.h"
#include "discner/corpus.h"
#include "discner/errors.h"
#include "discner/grammar.h"
#include "discner/model.h"
#include "discner/scheme.h"

namespace discner {
namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kIoError = 2;

// Writes to the file given with -o, or to stdout.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error("cannot write " + path);
  }
  std::ostream &stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

struct Options {
  std::string input;
  std::string output;
  std::string mode_name = "semantic";
  std::string loss_name = "nll";
  std::string lexicon_path;
  std::string model_path;
  std::string corpus_path;
  std::string gold_path;
  std::string pred_path;
  std::string stage = "min";
  bool corpus_input = false;
  bool text_input = false;
  int epochs = 20;
  double learning_rate = 0.1;
  double l2 = 0.0;
  std::uint64_t seed = 1;
  std::size_t dim = LinearScorer::kDefaultDim;
  int threads = 1;
  std::vector<int> lengths = {64, 128, 256, 512};
  int sentences = 200;
  int runs = 5;

  TagMode mode() const {
    auto m = ParseMode(mode_name);
    if (!m) throw ConfigError("unknown mode '" + mode_name + "'");
    return *m;
  }
  LossKind loss() const {
    auto l = ParseLoss(loss_name);
    if (!l) throw ConfigError("unknown loss '" + loss_name + "'");
    return *l;
  }
  std::unique_ptr<Lexicon> lexicon() const {
    if (lexicon_path.empty()) return nullptr;
    return std::make_unique<Lexicon>(Lexicon::ReadFile(lexicon_path));
  }
};

void Warn(const std::string &message) { std::cerr << "discner: " << message << "\n"; }

// Tag sequence of a record, or nullopt (with a warning) when its mentions
// have no two-layer form.
std::optional<TagSequence> EncodeRecord(const CorpusRecord &record, size_t index,
                                        TagMode mode, const Lexicon *lexicon) {
  try {
    return MakeTrainingExample(record, mode, lexicon).labels.members().front();
  } catch (const IncompatibleError &e) {
    Warn("record " + std::to_string(index + 1) + ": " + e.what());
    return std::nullopt;
  }
}

int Validate(const Options &opt) {
  const TagMode mode = opt.mode();
  int bad = 0;
  if (!opt.corpus_input) {
    auto in = OpenInput(opt.input);
    std::vector<TagSequence> tags = ReadTagFile(in);
    for (size_t k = 0; k < tags.size(); ++k) {
      const bool ok = mode == TagMode::kSemantic ? IsWellFormed(tags[k])
                                                 : IsStructurallyWellFormed(tags[k]);
      if (!ok) {
        ++bad;
        Warn("line " + std::to_string(k + 1) + ": ill-formed: " + FormatTags(tags[k]));
      }
    }
    std::cout << tags.size() << " sequences, " << bad << " ill-formed\n";
  } else {
    std::vector<CorpusRecord> records = ReadCorpusFile(opt.input);
    FilterResult result = FilterIncompatible(records);
    for (const DroppedRecord &d : result.dropped) {
      Warn("record " + std::to_string(d.index + 1) + ": " + d.detail);
    }
    bad = static_cast<int>(result.dropped.size());
    std::cout << records.size() << " records, " << bad << " incompatible\n";
  }
  return bad == 0 ? kOk : kInvalid;
}

int EncodeCorpus(const Options &opt) {
  std::vector<CorpusRecord> records = ReadCorpusFile(opt.input);
  auto lexicon = opt.lexicon();
  Output out(opt.output);
  int bad = 0;
  for (size_t k = 0; k < records.size(); ++k) {
    auto tags = EncodeRecord(records[k], k, opt.mode(), lexicon.get());
    bad += !tags;
    out.stream() << (tags ? FormatTags(*tags) : "") << "\n";
  }
  return bad == 0 ? kOk : kInvalid;
}

int DecodeTags(const Options &opt) {
  auto in = OpenInput(opt.input);
  std::vector<TagSequence> tags = ReadTagFile(in);
  std::vector<CorpusRecord> records;
  if (!opt.corpus_path.empty()) {
    records = ReadCorpusFile(opt.corpus_path);
    if (records.size() != tags.size()) {
      throw LengthMismatchError("tag file has " + std::to_string(tags.size()) +
                                " lines, corpus has " + std::to_string(records.size()) +
                                " records");
    }
  }
  int bad = 0;
  std::vector<CorpusRecord> decoded;
  for (size_t k = 0; k < tags.size(); ++k) {
    CorpusRecord record;
    if (!records.empty()) {
      record.tokens = records[k].tokens;
      if (record.tokens.size() != tags[k].size()) {
        Warn("line " + std::to_string(k + 1) + ": tag count differs from token count");
        ++bad;
      }
    } else {
      for (size_t i = 0; i < tags[k].size(); ++i) record.tokens.push_back("w" + std::to_string(i));
    }
    try {
      if (record.tokens.size() == tags[k].size()) record.mentions = Decode(tags[k]);
    } catch (const IllFormedError &e) {
      Warn("line " + std::to_string(k + 1) + ": " + e.what());
      ++bad;
    }
    decoded.push_back(std::move(record));
  }
  Output out(opt.output);
  WriteCorpus(decoded, out.stream());
  return bad == 0 ? kOk : kInvalid;
}

int Stats(const Options &opt) {
  std::vector<CorpusRecord> records = ReadCorpusFile(opt.input);
  CorpusStats stats = ComputeStats(records);
  FilterResult filtered = FilterIncompatible(records);
  Output out(opt.output);
  out.stream() << "sentences " << stats.sentences << "\n"
               << "mentions " << stats.mentions << "\n"
               << "discontinuous_mentions " << stats.discontinuous_mentions << "\n"
               << "incompatible_sentences " << stats.incompatible_sentences << "\n";
  for (auto reason : {IncompatibleReason::kPartialOverlap, IncompatibleReason::kThreeWaySplit,
                      IncompatibleReason::kSpanConflict}) {
    out.stream() << "  " << ReasonName(reason) << " " << filtered.CountByReason()[reason]
                 << "\n";
  }
  return kOk;
}

int Filter(const Options &opt) {
  std::vector<CorpusRecord> records = ReadCorpusFile(opt.input);
  FilterResult result = FilterIncompatible(records);
  for (const DroppedRecord &d : result.dropped) {
    Warn("dropped record " + std::to_string(d.index + 1) + ": " + std::string(ReasonName(d.reason)));
  }
  Output out(opt.output);
  WriteCorpus(result.kept, out.stream());
  std::cerr << "kept " << result.kept.size() << ", dropped " << result.dropped.size() << "\n";
  return kOk;
}

int Silver(const Options &opt) {
  if (opt.lexicon_path.empty()) throw ConfigError("silver needs --lexicon");
  std::vector<CorpusRecord> records = ReadCorpusFile(opt.input);
  Lexicon lexicon = Lexicon::ReadFile(opt.lexicon_path);
  Output out(opt.output);
  int sets = 0, resolved = 0, bad = 0;
  for (size_t k = 0; k < records.size(); ++k) {
    try {
      const int n = static_cast<int>(records[k].tokens.size());
      SentenceAnnotation ann =
          SilverType(ToTwoLayer(records[k].mentions, n), records[k].tokens, lexicon);
      for (const TwoLayerSet &set : ann.sets) {
        ++sets;
        resolved += set.resolved;
      }
      out.stream() << FormatTags(Encode(ann)) << "\n";
    } catch (const IncompatibleError &e) {
      Warn("record " + std::to_string(k + 1) + ": " + std::string(ReasonName(e.reason())));
      out.stream() << "\n";
      ++bad;
    }
  }
  std::cerr << "sets " << sets << ", typed by the lexicon " << resolved << "\n";
  return bad == 0 ? kOk : kInvalid;
}

int TrainModel(const Options &opt) {
  if (opt.model_path.empty()) throw ConfigError("train needs --model");
  TrainConfig config;
  config.loss = opt.loss();
  config.mode = opt.mode();
  config.epochs = opt.epochs;
  config.learning_rate = opt.learning_rate;
  config.l2 = opt.l2;
  config.seed = opt.seed;
  config.dim = opt.dim;
  config.Validate();

  std::vector<CorpusRecord> records = ReadCorpusFile(opt.input);
  auto lexicon = opt.lexicon();
  std::vector<TrainingExample> examples;
  int skipped = 0;
  for (size_t k = 0; k < records.size(); ++k) {
    try {
      examples.push_back(MakeTrainingExample(records[k], config.mode, lexicon.get()));
    } catch (const IncompatibleError &) {
      ++skipped;
    }
  }
  if (skipped > 0) Warn("skipped " + std::to_string(skipped) + " incompatible records");
  TrainLog log;
  LinearScorer scorer = Train(examples, config, &log);
  for (size_t e = 0; e < log.epoch_mean_loss.size(); ++e) {
    std::fprintf(stderr, "epoch %zu mean loss %.6f\n", e + 1, log.epoch_mean_loss[e]);
  }
  std::ofstream out(opt.model_path);
  if (!out) throw Error("cannot write " + opt.model_path);
  scorer.Save(out);
  return kOk;
}

int PredictCorpus(const Options &opt) {
  if (opt.model_path.empty()) throw ConfigError("predict needs --model");
  auto model_in = OpenInput(opt.model_path);
  LinearScorer scorer = LinearScorer::Load(model_in);
  std::vector<std::vector<std::string>> sentences;
  if (opt.text_input) {
    auto in = OpenInput(opt.input);
    for (std::string line; std::getline(in, line);) {
      std::istringstream words(line);
      std::vector<std::string> tokens;
      for (std::string w; words >> w;) tokens.push_back(w);
      sentences.push_back(std::move(tokens));
    }
  } else {
    for (CorpusRecord &r : ReadCorpusFile(opt.input)) sentences.push_back(std::move(r.tokens));
  }
  Tagger tagger(scorer.mode());
  std::vector<MentionSet> predicted = tagger.PredictAll(scorer, sentences, opt.threads);
  std::vector<CorpusRecord> records(sentences.size());
  for (size_t k = 0; k < sentences.size(); ++k) {
    records[k].tokens = std::move(sentences[k]);
    records[k].mentions = std::move(predicted[k]);
  }
  Output out(opt.output);
  WriteCorpus(records, out.stream());
  return kOk;
}

void PrintPrf(std::ostream &out, const char *name, const Prf &prf) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-14s P %.4f  R %.4f  F1 %.4f  (gold %zu, pred %zu, match %zu)\n",
                name, prf.precision, prf.recall, prf.f1, prf.gold, prf.predicted, prf.matched);
  out << line;
}

int Eval(const Options &opt) {
  std::vector<CorpusRecord> gold = ReadCorpusFile(opt.gold_path);
  std::vector<CorpusRecord> pred = ReadCorpusFile(opt.pred_path);
  std::vector<MentionSet> g, p;
  for (const auto &r : gold) g.push_back(r.mentions);
  for (const auto &r : pred) p.push_back(r.mentions);
  EvalReport report = Evaluate(g, p);
  Output out(opt.output);
  PrintPrf(out.stream(), "all", report.all);
  PrintPrf(out.stream(), "discontinuous", report.discontinuous);
  return kOk;
}

int Bench(const Options &opt) {
  const TagMode mode = opt.mode();
  Tagger tagger(mode);
  LinearScorer scorer = RandomScorer(std::size_t{1} << 16, mode, opt.seed);
  ScalingReport report =
      MeasureScaling(tagger, scorer, opt.lengths, opt.sentences, opt.runs, opt.seed);
  Output out(opt.output);
  char line[160];
  for (size_t k = 0; k < report.points.size(); ++k) {
    const ScalingPoint &p = report.points[k];
    std::snprintf(line, sizeof(line), "n %5d  median %.6f s  %.1f sentences/s", p.length,
                  p.median_seconds, p.sentences_per_second);
    out.stream() << line;
    if (k > 0) {
      std::snprintf(line, sizeof(line), "  ratio %.2f", report.ratios[k - 1]);
      out.stream() << line;
    }
    out.stream() << "\n";
  }
  return kOk;
}

int ExportAutomaton(const Options &opt) {
  const TagMode mode = opt.mode();
  Automaton a = GrammarAutomatonWithEpsilon(mode);
  if (opt.stage != "eps") a = RemoveEpsilon(a);
  if (opt.stage == "det" || opt.stage == "min") a = Determinize(a);
  if (opt.stage == "min") a = Minimize(a);
  Output out(opt.output);
  out.stream() << a.ToText();
  return kOk;
}

int Main(int argc, char **argv) {
  CLI::App app{"Discontinuous mention tagging with a well-formedness automaton"};
  app.require_subcommand(1);
  Options opt;

  auto add_mode = [&](CLI::App *cmd) {
    cmd->add_option("--mode", opt.mode_name, "semantic or structural")
        ->check(CLI::IsMember({"semantic", "structural"}));
  };
  auto add_output = [&](CLI::App *cmd) {
    cmd->add_option("-o,--output", opt.output, "output file (default stdout)");
  };

  auto *validate = app.add_subcommand("validate", "check that tag sequences are well-formed");
  validate->add_option("input", opt.input)->required();
  validate->add_flag("--corpus", opt.corpus_input,
                     "input is a corpus; check that its mentions have a two-layer form");
  add_mode(validate);

  auto *encode = app.add_subcommand("encode", "corpus to tag sequences");
  encode->add_option("input", opt.input)->required();
  encode->add_option("--lexicon", opt.lexicon_path, "body-part lexicon for silver types");
  add_mode(encode);
  add_output(encode);

  auto *decode = app.add_subcommand("decode", "tag sequences to a corpus");
  decode->add_option("input", opt.input)->required();
  decode->add_option("--corpus", opt.corpus_path, "corpus supplying the tokens");
  add_output(decode);

  auto *stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("input", opt.input)->required();
  add_output(stats);

  auto *filter = app.add_subcommand("filter", "drop records without a two-layer form");
  filter->add_option("input", opt.input)->required();
  add_output(filter);

  auto *silver = app.add_subcommand("silver", "encode with lexicon-typed components");
  silver->add_option("input", opt.input)->required();
  silver->add_option("--lexicon", opt.lexicon_path)->required();
  add_output(silver);

  auto *train = app.add_subcommand("train", "train a linear tagger");
  train->add_option("input", opt.input)->required();
  train->add_option("--model", opt.model_path, "model file to write")->required();
  train->add_option("--loss", opt.loss_name, "nll, partial or hard-em")
      ->check(CLI::IsMember({"nll", "partial", "hard-em"}));
  train->add_option("--lexicon", opt.lexicon_path);
  train->add_option("--epochs", opt.epochs);
  train->add_option("--lr", opt.learning_rate);
  train->add_option("--l2", opt.l2);
  train->add_option("--seed", opt.seed);
  train->add_option("--dim", opt.dim, "hashed feature dimension");
  add_mode(train);

  auto *predict = app.add_subcommand("predict", "tag sentences with a trained model");
  predict->add_option("input", opt.input)->required();
  predict->add_option("--model", opt.model_path)->required();
  predict->add_flag("--text", opt.text_input, "input is one tokenized sentence per line");
  predict->add_option("--threads", opt.threads);
  add_output(predict);

  auto *eval = app.add_subcommand("eval", "exact-match mention scores");
  eval->add_option("--gold", opt.gold_path)->required();
  eval->add_option("--pred", opt.pred_path)->required();
  add_output(eval);

  auto *bench = app.add_subcommand("bench", "prediction time against sentence length");
  bench->add_option("--lengths", opt.lengths)->delimiter(',');
  bench->add_option("--sentences", opt.sentences);
  bench->add_option("--runs", opt.runs);
  bench->add_option("--seed", opt.seed);
  add_mode(bench);
  add_output(bench);

  auto *export_cmd = app.add_subcommand("automaton-export", "write the grammar automaton");
  export_cmd->add_option("--stage", opt.stage, "eps, noeps, det or min")
      ->check(CLI::IsMember({"eps", "noeps", "det", "min"}));
  add_mode(export_cmd);
  add_output(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kIoError;
  }

  try {
    if (*validate) return Validate(opt);
    if (*encode) return EncodeCorpus(opt);
    if (*decode) return DecodeTags(opt);
    if (*stats) return Stats(opt);
    if (*filter) return Filter(opt);
    if (*silver) return Silver(opt);
    if (*train) return TrainModel(opt);
    if (*predict) return PredictCorpus(opt);
    if (*eval) return Eval(opt);
    if (*bench) return Bench(opt);
    if (*export_cmd) return ExportAutomaton(opt);
  } catch (const ParseError &e) {
    Warn(std::string("parse error: ") + e.what());
    return kIoError;
  } catch (const LengthMismatchError &e) {
    Warn(e.what());
    return kInvalid;
  } catch (const std::exception &e) {
    Warn(e.what());
    return kIoError;
  }
  return kIoError;
}

}  // namespace
}  // namespace discner

int main(int argc, char **argv) { return discner::Main(argc, argv); }
