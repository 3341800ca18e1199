// hybridparse: train, parse, evaluate and inspect hybrid
// dependency-constituency treebanks.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hybrid/conversion.h"
#include "hybrid/cross_validation.h"
#include "hybrid/engine.h"
#include "hybrid/error.h"
#include "hybrid/evaluation.h"
#include "hybrid/feature_notation.h"
#include "hybrid/model.h"
#include "hybrid/oracle.h"
#include "hybrid/parallel.h"
#include "hybrid/render.h"
#include "hybrid/synth.h"
#include "hybrid/treebank.h"

namespace fs = std::filesystem;
using namespace hybrid;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kData = 2;
constexpr int kAcceptance = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

// key=value lines; '#' comments and blank lines ignored.
std::map<std::string, std::string> ReadConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config entry must be key=value", n);
    }
    std::string key = Trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out[key] = Trim(line.substr(eq + 1));
  }
  return out;
}

bool Truthy(const std::string &v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

// Resolved options of the selected subcommand, in declaration order.
std::vector<std::pair<std::string, std::string>> Resolved(
    const CLI::App *sub) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const CLI::Option *opt : sub->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help" || name == "config") continue;
    std::string value;
    if (opt->count() > 0) {
      if (opt->get_expected_min() == 0) {
        value = "true";
      } else {
        for (const std::string &r : opt->results()) {
          value += (value.empty() ? "" : ",") + r;
        }
      }
    } else {
      value = opt->get_expected_min() == 0 ? "false" : opt->get_default_str();
    }
    if (value.empty()) continue;
    out.emplace_back(name, value);
  }
  return out;
}

std::string ReadAll(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Feature notation starts its first data line with a location.
bool LooksLikeFeatureNotation(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    return line[0] == '(';
  }
  return false;
}

struct Sentence {
  std::vector<MorphSegment> segments;
  std::vector<std::string> notes;
};

std::vector<Sentence> ReadSentences(const std::string &path,
                                    const Tagset &tags) {
  const std::string text = ReadAll(path);
  std::vector<Sentence> out;
  std::istringstream in(text);
  if (LooksLikeFeatureNotation(text)) {
    for (FeatureSentence &s : ReadFeatureFile(in, tags)) {
      out.push_back({std::move(s.segments),
                     {"# verse = " + s.verse.ToString()}});
    }
  } else {
    TreebankDocument doc = ReadTreebank(in, tags);
    for (size_t i = 0; i < doc.size(); ++i) {
      out.push_back({doc.graphs[i].Segments(), doc.comments[i]});
    }
  }
  return out;
}

void WriteOutput(const std::string &path,
                 const std::function<void(std::ostream &)> &write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write(out);
  if (!out) throw Error("write failed for '" + path + "'");
}

void EchoConfig(const std::vector<std::pair<std::string, std::string>> &cfg,
                const std::string &command, std::ostream &out) {
  out << "# command = " << command << '\n';
  for (const auto &[k, v] : cfg) out << "# " << k << " = " << v << '\n';
}

// Config lines become comments on the first graph of corpus outputs.
void StampConfig(TreebankDocument *doc,
                 const std::vector<std::pair<std::string, std::string>> &cfg,
                 const std::string &command) {
  if (doc->size() == 0) return;
  std::vector<std::string> head = {"# hybridparse.command = " + command};
  for (const auto &[k, v] : cfg) {
    head.push_back("# hybridparse." + k + " = " + v);
  }
  auto &notes = doc->comments[0];
  notes.insert(notes.begin(), head.begin(), head.end());
}

std::string Percent(const Ratio &r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << 100.0 * r.value();
  return s.str();
}

FeatureSet ToFeatureSet(const std::string &s) {
  auto f = ParseFeatureSet(s);
  if (!f) throw UsageError("unknown feature set '" + s + "'");
  return *f;
}

Pipeline ToPipeline(const std::string &s) {
  auto p = ParsePipeline(s);
  if (!p) throw UsageError("unknown pipeline '" + s + "'");
  return *p;
}

std::string GraphName(const TreebankDocument &doc, size_t i) {
  auto id = doc.Metadata(i, "sent_id");
  return id ? *id : "#" + std::to_string(i + 1);
}

std::vector<Transition> ReadTransitions(const std::string &path) {
  std::istringstream in(ReadAll(path));
  std::vector<Transition> out;
  std::string line;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(Transition::Parse(w));
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hybrid dependency-constituency parser"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key=value file supplying flags");
  std::string tagset_path;
  app.add_option("--tagset", tagset_path, "Tagset file replacing the default");

  const int threads_default = DefaultThreads();

  // train
  struct {
    std::string corpus, out, features = "lemma", pipeline = "integrated";
    uint64_t seed = 1;
    int epochs = TrainingOptions{}.epochs, threads = 1;
    bool include_unreachable = false, include_lossy = false;
  } train;
  train.threads = threads_default;
  auto *train_cmd = app.add_subcommand("train", "Fit a transition model");
  train_cmd->add_option("--corpus", train.corpus, "Treebank file")->required();
  train_cmd->add_option("--features", train.features,
                        "pos|morph6|morph9|lemma|phi")->capture_default_str();
  train_cmd->add_option("--pipeline", train.pipeline, "integrated|multistep")
      ->capture_default_str();
  train_cmd->add_option("--seed", train.seed)->capture_default_str();
  train_cmd->add_option("--epochs", train.epochs)->capture_default_str();
  train_cmd->add_option("--threads", train.threads)->capture_default_str();
  train_cmd->add_flag("--include-unreachable", train.include_unreachable);
  train_cmd->add_flag("--include-lossy", train.include_lossy);
  train_cmd->add_option("--out", train.out, "Model file")->required();

  // parse
  struct {
    std::string model, input, out;
    bool trace = false;
    int threads = 1;
  } parse;
  parse.threads = threads_default;
  auto *parse_cmd = app.add_subcommand("parse", "Parse sentences");
  parse_cmd->add_option("--model", parse.model)->required();
  parse_cmd->add_option("--input", parse.input,
                        "Feature notation or CoNLL-X file")->required();
  parse_cmd->add_option("--out", parse.out, "Output file (default stdout)");
  parse_cmd->add_flag("--trace", parse.trace, "Record transition traces");
  parse_cmd->add_option("--threads", parse.threads)->capture_default_str();

  // eval
  struct {
    std::string gold, pred, metric = "elas";
    bool strict_ec = false;
  } eval;
  auto *eval_cmd = app.add_subcommand("eval", "Score predictions");
  eval_cmd->add_option("--gold", eval.gold)->required();
  eval_cmd->add_option("--pred", eval.pred)->required();
  eval_cmd->add_option("--metric", eval.metric, "elas|las|parseval")
      ->capture_default_str();
  eval_cmd->add_flag("--strict-ec", eval.strict_ec,
                     "Match empty categories by position too");

  // crossval
  struct {
    std::string corpus, features = "lemma", pipeline = "integrated";
    int folds = 10, epochs = CrossValidationOptions{}.epochs, threads = 1;
    uint64_t seed = 1;
    double min_f1 = 0;
  } cv;
  cv.threads = threads_default;
  auto *cv_cmd = app.add_subcommand("crossval", "k-fold cross-validation");
  cv_cmd->add_option("--corpus", cv.corpus)->required();
  cv_cmd->add_option("--folds", cv.folds)->capture_default_str();
  cv_cmd->add_option("--features", cv.features)->capture_default_str();
  cv_cmd->add_option("--pipeline", cv.pipeline)->capture_default_str();
  cv_cmd->add_option("--seed", cv.seed)->capture_default_str();
  cv_cmd->add_option("--epochs", cv.epochs)->capture_default_str();
  cv_cmd->add_option("--threads", cv.threads)->capture_default_str();
  cv_cmd->add_option("--min-f1", cv.min_f1,
                     "Fail with exit 3 below this ELAS F1")
      ->capture_default_str();

  // convert
  struct {
    std::string input, direction, out;
  } conv;
  auto *conv_cmd = app.add_subcommand("convert", "Hybrid <-> pure dependency");
  conv_cmd->add_option("--input", conv.input)->required();
  conv_cmd->add_option("--direction", conv.direction, "to-pure|to-hybrid")
      ->required()
      ->check(CLI::IsMember({"to-pure", "to-hybrid"}));
  conv_cmd->add_option("--out", conv.out, "Converted corpus");

  // oracle-check
  struct {
    std::string corpus, fixtures;
  } oc;
  auto *oc_cmd = app.add_subcommand("oracle-check", "Verify oracle fidelity");
  oc_cmd->add_option("--corpus", oc.corpus);
  oc_cmd->add_option("--fixtures", oc.fixtures,
                     "Directory of .conll graphs with .transitions files");

  // synth
  struct {
    uint64_t seed = 1;
    int count = 100;
    std::string profile = "+phrases,+ellipsis", out;
  } syn;
  auto *syn_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
  syn_cmd->add_option("--seed", syn.seed)->capture_default_str();
  syn_cmd->add_option("--count", syn.count)->capture_default_str();
  syn_cmd->add_option("--profile", syn.profile)->capture_default_str();
  syn_cmd->add_option("--out", syn.out, "Output file (default stdout)");

  // render
  struct {
    std::string input, format = "svg", out;
    bool ltr = false;
  } ren;
  auto *ren_cmd = app.add_subcommand("render", "Draw graphs");
  ren_cmd->add_option("--input", ren.input)->required();
  ren_cmd->add_option("--format", ren.format)
      ->capture_default_str()
      ->check(CLI::IsMember({"svg", "dot"}));
  ren_cmd->add_option("--out", ren.out, "Output directory")->required();
  ren_cmd->add_flag("--ltr", ren.ltr, "Left-to-right word order");

  // Config file values fill in flags absent from the command line.
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    std::string cfg;
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) cfg = args[i + 1];
      if (args[i].rfind("--config=", 0) == 0) cfg = args[i].substr(9);
    }
    if (!cfg.empty()) {
      CLI::App *sub = nullptr;
      for (const std::string &a : args) {
        for (CLI::App *s : app.get_subcommands({})) {
          if (s->get_name() == a) sub = s;
        }
        if (sub) break;
      }
      if (sub) {
        for (const auto &[key, value] : ReadConfig(cfg)) {
          const std::string flag = "--" + key;
          const CLI::Option *opt = sub->get_option_no_throw(flag);
          if (!opt) continue;
          bool given = false;
          for (const std::string &a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
          }
          if (given) continue;
          if (opt->get_expected_min() == 0) {
            if (Truthy(value)) args.push_back(flag);
          } else {
            args.push_back(flag);
            args.push_back(value);
          }
        }
      }
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App *sub = app.get_subcommands().front();
  const auto cfg = Resolved(sub);
  const std::string command = sub->get_name();

  try {
    Tagset loaded;
    const Tagset *tags = &Tagset::Default();
    if (!tagset_path.empty()) {
      loaded = Tagset::Load(tagset_path);
      tags = &loaded;
    }

    if (sub == train_cmd) {
      TrainingOptions o;
      o.features = ToFeatureSet(train.features);
      o.pipeline = ToPipeline(train.pipeline);
      o.seed = train.seed;
      o.epochs = train.epochs;
      o.threads = train.threads;
      o.include_unreachable = train.include_unreachable;
      o.include_lossy = train.include_lossy;
      TreebankDocument corpus = ReadTreebankFile(train.corpus, *tags);
      Model m = Train(corpus, o, *tags);
      m.SaveFile(train.out);
      EchoConfig(cfg, command, std::cerr);
      const TrainingStats &s = m.stats();
      std::cerr << "graphs=" << s.graphs_total << " used=" << s.graphs_used
                << " excluded_unreachable=" << s.excluded_unreachable
                << " excluded_lossy=" << s.excluded_lossy << '\n';
      return kOk;
    }

    if (sub == parse_cmd) {
      Model m = Model::LoadFile(parse.model, *tags);
      std::vector<Sentence> sentences = ReadSentences(parse.input, *tags);
      std::vector<ParseResult> results(sentences.size());
      ParallelFor(static_cast<int>(sentences.size()), parse.threads, [&](int i) {
        results[i] = Parse(m, sentences[i].segments);
      });
      TreebankDocument out;
      for (size_t i = 0; i < sentences.size(); ++i) {
        std::vector<std::string> notes = sentences[i].notes;
        const ParseReport &r = results[i].report;
        if (parse.trace) {
          std::string trace;
          for (const Transition &t : r.trace) {
            trace += (trace.empty() ? "" : " ") + t.ToString();
          }
          notes.push_back("# trace = " + trace);
          notes.push_back("# steps = " + std::to_string(r.trace.size()) + "/" +
                          std::to_string(r.budget));
        }
        if (r.budget_exhausted) notes.push_back("# budget_exhausted = yes");
        for (const LossDetail &d : r.reconstruction_errors) {
          notes.push_back("# reconstruction = " + d.where + ": " + d.reason);
        }
        out.Add(std::move(results[i].graph), std::move(notes));
      }
      StampConfig(&out, cfg, command);
      WriteOutput(parse.out, [&](std::ostream &os) { WriteTreebank(out, os); });
      return kOk;
    }

    if (sub == eval_cmd) {
      TreebankDocument gold = ReadTreebankFile(eval.gold, *tags);
      TreebankDocument pred = ReadTreebankFile(eval.pred, *tags);
      if (gold.size() != pred.size()) {
        throw Error("gold has " + std::to_string(gold.size()) +
                    " graphs but predictions have " +
                    std::to_string(pred.size()));
      }
      EvalReport total;
      for (size_t i = 0; i < gold.size(); ++i) {
        if (eval.metric == "elas") {
          total += Elas(gold.graphs[i], pred.graphs[i],
                        ElasOptions{eval.strict_ec});
        } else if (eval.metric == "las") {
          total += LasCounts(gold.graphs[i], pred.graphs[i]);
        } else if (eval.metric == "parseval") {
          total += Parseval(gold.graphs[i].phrases(), pred.graphs[i].phrases());
        } else {
          throw UsageError("unknown metric '" + eval.metric + "'");
        }
      }
      EchoConfig(cfg, command, std::cout);
      std::cout << "metric=" << eval.metric << "\ngraphs=" << gold.size()
                << '\n'
                << total.KeyValues();
      return kOk;
    }

    if (sub == cv_cmd) {
      CrossValidationOptions o;
      o.folds = cv.folds;
      o.features = ToFeatureSet(cv.features);
      o.pipeline = ToPipeline(cv.pipeline);
      o.seed = cv.seed;
      o.epochs = cv.epochs;
      o.threads = cv.threads;
      TreebankDocument corpus = ReadTreebankFile(cv.corpus, *tags);
      CrossValidationResult r = CrossValidate(corpus, o, *tags);
      EchoConfig(cfg, command, std::cout);
      std::cout << "graphs=" << corpus.size() << "\nfolds=" << cv.folds << '\n'
                << r.elas.KeyValues();
      std::cout << "row features=" << FeatureSetName(o.features)
                << " pipeline=" << PipelineName(o.pipeline)
                << " P=" << Percent(r.elas.precision())
                << " R=" << Percent(r.elas.recall())
                << " F1=" << Percent(r.elas.f1()) << '\n';
      for (size_t f = 0; f < r.per_fold.size(); ++f) {
        std::cout << "fold " << f + 1 << " f1="
                  << Percent(r.per_fold[f].f1()) << '\n';
      }
      if (r.elas.f1().value() < cv.min_f1) {
        std::cerr << "crossval: F1 " << r.elas.f1().value()
                  << " is below the threshold " << cv.min_f1 << '\n';
        return kAcceptance;
      }
      return kOk;
    }

    if (sub == conv_cmd) {
      TreebankDocument in = ReadTreebankFile(conv.input, *tags);
      TreebankDocument out;
      ConversionReport total;
      int lossy_graphs = 0;
      std::vector<std::string> details;
      for (size_t i = 0; i < in.size(); ++i) {
        if (conv.direction == "to-pure") {
          PureConversion c = ToPureDependency(in.graphs[i], *tags);
          total.converted_phrases += c.report.converted_phrases;
          total.converted_empty_categories +=
              c.report.converted_empty_categories;
          total.dropped_pronouns += c.report.dropped_pronouns;
          if (c.report.lossy()) ++lossy_graphs;
          for (const LossDetail &d : c.report.loss_details) {
            details.push_back(GraphName(in, i) + " " + d.where + ": " + d.reason);
          }
          out.Add(std::move(c.pure), in.comments[i]);
        } else {
          std::vector<LossDetail> errors;
          HybridGraph g = FromPureDependency(in.graphs[i], &errors, *tags);
          if (!errors.empty()) ++lossy_graphs;
          for (const LossDetail &d : errors) {
            details.push_back(GraphName(in, i) + " " + d.where + ": " + d.reason);
          }
          total.converted_phrases += g.num_phrases();
          total.converted_empty_categories += g.num_empty();
          out.Add(std::move(g), in.comments[i]);
        }
      }
      EchoConfig(cfg, command, std::cout);
      std::cout << "graphs=" << in.size()
                << "\nphrases=" << total.converted_phrases
                << "\nempty_categories=" << total.converted_empty_categories;
      if (conv.direction == "to-pure") {
        std::cout << "\ndropped_pronouns=" << total.dropped_pronouns;
      }
      std::cout << "\nlossy_graphs=" << lossy_graphs << '\n';
      for (const std::string &d : details) std::cout << "loss " << d << '\n';
      if (!conv.out.empty()) {
        StampConfig(&out, cfg, command);
        WriteTreebankFile(out, conv.out);
      }
      return kOk;
    }

    if (sub == oc_cmd) {
      if (oc.corpus.empty() && oc.fixtures.empty()) {
        throw UsageError("oracle-check needs --corpus or --fixtures");
      }
      EchoConfig(cfg, command, std::cout);
      int failures = 0;
      // A graph fails when it is projective yet not reproduced, or when
      // it carries "# oracle = unreachable" and is reproduced.
      auto check = [&](const TreebankDocument &doc, size_t i,
                       const std::string &name,
                       const Tagset &vocab) -> OracleOutcome {
        const HybridGraph &g = doc.graphs[i];
        OracleOutcome o = OracleSequence(g, vocab);
        const bool expect_unreachable =
            doc.Metadata(i, "oracle") == std::string("unreachable");
        const bool exact = o.reachable && o.replayed == g;
        if (expect_unreachable) {
          if (o.reachable) {
            ++failures;
            std::cout << "fail " << name << ": expected unreachable\n";
          }
        } else if (!exact && IsProjective(g)) {
          ++failures;
          std::cout << "fail " << name << ": projective graph not reproduced ("
                    << o.uncovered_edges.size() << " gold edges uncovered)\n";
        } else if (!o.reachable) {
          std::cout << "unreachable " << name << " (non-projective)\n";
        }
        return o;
      };
      if (!oc.corpus.empty()) {
        TreebankDocument doc = ReadTreebankFile(oc.corpus, *tags);
        int reachable = 0;
        for (size_t i = 0; i < doc.size(); ++i) {
          if (check(doc, i, GraphName(doc, i), *tags).reachable) ++reachable;
        }
        std::cout << "graphs=" << doc.size() << "\nreachable=" << reachable
                  << '\n';
      }
      if (!oc.fixtures.empty()) {
        std::vector<fs::path> files;
        for (const auto &entry : fs::directory_iterator(oc.fixtures)) {
          if (entry.path().extension() == ".conll") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const fs::path &f : files) {
          // A sibling .tagset file extends the vocabulary for one fixture.
          fs::path ts = f;
          ts.replace_extension(".tagset");
          Tagset own;
          const Tagset *vocab = tags;
          if (fs::exists(ts)) {
            own = Tagset::Load(ts.string());
            vocab = &own;
          }
          TreebankDocument doc = ReadTreebankFile(f.string(), *vocab);
          fs::path tr = f;
          tr.replace_extension(".transitions");
          for (size_t i = 0; i < doc.size(); ++i) {
            const std::string name =
                f.filename().string() + (doc.size() > 1 ? ":" + GraphName(doc, i) : "");
            OracleOutcome o = check(doc, i, name, *vocab);
            if (!fs::exists(tr) || doc.size() != 1) continue;
            const std::vector<Transition> want = ReadTransitions(tr.string());
            size_t k = 0;
            while (k < want.size() && k < o.sequence.size() &&
                   want[k] == o.sequence[k]) {
              ++k;
            }
            if (k == want.size() && k == o.sequence.size()) {
              std::cout << "fixture " << name << ": ok (" << k
                        << " transitions)\n";
            } else {
              ++failures;
              std::cout << "fixture " << name << ": mismatch at step " << k + 1
                        << ", expected "
                        << (k < want.size() ? want[k].ToString() : "end")
                        << ", got "
                        << (k < o.sequence.size() ? o.sequence[k].ToString()
                                                  : "end")
                        << '\n';
            }
          }
        }
      }
      std::cout << "failures=" << failures << '\n';
      return failures == 0 ? kOk : kAcceptance;
    }

    if (sub == syn_cmd) {
      TreebankDocument doc =
          Generate(syn.seed, syn.count, ParseSynthProfile(syn.profile));
      StampConfig(&doc, cfg, command);
      WriteOutput(syn.out, [&](std::ostream &os) { WriteTreebank(doc, os); });
      return kOk;
    }

    if (sub == ren_cmd) {
      TreebankDocument doc = ReadTreebankFile(ren.input, *tags);
      const RenderFormat format = *ParseRenderFormat(ren.format);
      RenderStyle style;
      style.right_to_left = !ren.ltr;
      fs::create_directories(ren.out);
      for (size_t i = 0; i < doc.size(); ++i) {
        std::ostringstream name;
        name << "graph-" << std::setw(4) << std::setfill('0') << i + 1 << '.'
             << ren.format;
        const fs::path path = fs::path(ren.out) / name.str();
        WriteOutput(path.string(), [&](std::ostream &os) {
          os << Emit(Layout(doc.graphs[i], style), format);
        });
      }
      EchoConfig(cfg, command, std::cerr);
      std::cerr << "rendered " << doc.size() << " graphs into " << ren.out
                << '\n';
      return kOk;
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}
