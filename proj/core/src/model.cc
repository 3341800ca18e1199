#include "hybrid/model.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hybrid/conversion.h"
#include "hybrid/error.h"
#include "hybrid/oracle.h"
#include "hybrid/parallel.h"

namespace hybrid {
namespace {

constexpr char kMagic[] = "hybridparse-model";
constexpr int kVersion = 1;

uint64_t Fnv1a(std::string_view s, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct GraphPairs {
  std::vector<std::pair<std::string, Example>> pairs;  // partition, example
  std::vector<Transition> transitions;
  bool used = false;
  bool lossy = false;
  bool unreachable = false;
};

// Length of the sequence prefix before the first reduction that drops a
// segment touching an uncovered gold edge.
size_t UsablePrefix(const HybridGraph &gold, const OracleOutcome &outcome,
                    const Tagset &tags) {
  std::set<int> lost;
  std::vector<int> ordinal(gold.num_terminals(), -1);
  for (int i = 0, k = 0; i < gold.num_terminals(); ++i) {
    if (!gold.terminal(i).empty) ordinal[i] = k++;
  }
  for (const Edge &e : outcome.uncovered_edges) {
    for (NodeRef n : {e.dependent, e.head}) {
      if (n.is_terminal() && ordinal[n.index] >= 0) lost.insert(ordinal[n.index]);
    }
  }
  Configuration c = Configuration::Initial(gold.Segments());
  for (size_t i = 0; i < outcome.sequence.size(); ++i) {
    const Transition &t = outcome.sequence[i];
    if (t.type == TransitionType::kReduce) {
      NodeRef gone = *c.S(t.n);
      if (gone.is_terminal() && !c.graph().terminal(gone.index).empty) {
        int k = 0;
        for (int j = 0; j < gone.index; ++j) k += !c.graph().terminal(j).empty;
        if (lost.count(k)) return i;
      }
    }
    c = Apply(c, t, TransitionSet::kFull, tags);
  }
  return outcome.sequence.size();
}

}  // namespace

std::string PipelineName(Pipeline p) {
  return p == Pipeline::kMultiStep ? "multistep" : "integrated";
}

std::optional<Pipeline> ParsePipeline(std::string_view name) {
  std::string lower;
  for (char c : name) {
    if (c != '-' && c != '_') lower += static_cast<char>(std::tolower(c));
  }
  if (lower == "integrated") return Pipeline::kIntegrated;
  if (lower == "multistep") return Pipeline::kMultiStep;
  return std::nullopt;
}

std::string TagsetFingerprint(const Tagset &tags) {
  uint64_t h = Fnv1a("tagset");
  for (const auto *list : {&tags.pos_tags(), &tags.relations(),
                           &tags.phrase_tags()}) {
    for (const std::string &s : *list) h = Fnv1a(s + " ", h);
    h = Fnv1a("|", h);
  }
  return Hex(h);
}

Model Train(const TreebankDocument &corpus, const TrainingOptions &options,
            const Tagset &tags) {
  if (corpus.graphs.empty()) throw TrainingError("empty training corpus");
  const int n = static_cast<int>(corpus.graphs.size());
  std::vector<GraphPairs> per_graph(n);
  ParallelFor(n, options.threads, [&](int i) {
    GraphPairs &out = per_graph[i];
    HybridGraph gold = corpus.graphs[i];
    if (options.pipeline == Pipeline::kMultiStep) {
      PureConversion pure = ToPureDependency(gold, tags);
      if (pure.report.lossy() && !options.include_lossy) {
        out.lossy = true;
        return;
      }
      gold = std::move(pure.pure);
    }
    OracleOutcome outcome = OracleSequence(gold, tags);
    size_t keep = outcome.sequence.size();
    if (!outcome.reachable) {
      out.unreachable = true;
      if (!options.include_unreachable) return;
      keep = UsablePrefix(gold, outcome, tags);
    }
    out.used = true;
    Configuration c = Configuration::Initial(gold.Segments());
    for (size_t k = 0; k < keep; ++k) {
      const Transition &t = outcome.sequence[k];
      out.pairs.emplace_back(PartitionKey(c),
                             Example{ExtractFeatures(c, options.features, tags), 0});
      out.transitions.push_back(t);
      c = Apply(c, t, TransitionSet::kFull, tags);
    }
  });

  Model model;
  model.feature_set_ = options.features;
  model.pipeline_ = options.pipeline;
  model.options_ = options;
  model.tags_ = &tags;
  TrainingStats &stats = model.stats_;
  stats.graphs_total = n;
  std::set<Transition> vocab;
  for (const GraphPairs &g : per_graph) {
    stats.graphs_used += g.used;
    stats.excluded_lossy += g.lossy;
    stats.excluded_unreachable += g.unreachable && !g.used;
    vocab.insert(g.transitions.begin(), g.transitions.end());
  }
  if (stats.graphs_used == 0) {
    throw TrainingError("no usable training graphs (" +
                        std::to_string(stats.excluded_unreachable) +
                        " unreachable, " + std::to_string(stats.excluded_lossy) +
                        " lossy)");
  }
  model.vocabulary_.assign(vocab.begin(), vocab.end());
  std::sort(model.vocabulary_.begin(), model.vocabulary_.end(),
            [](const Transition &a, const Transition &b) {
              return a.ToString() < b.ToString();
            });
  std::map<std::string, int> index;
  for (size_t i = 0; i < model.vocabulary_.size(); ++i) {
    index[model.vocabulary_[i].ToString()] = static_cast<int>(i);
  }

  std::map<std::string, std::vector<Example>> partitions;
  std::vector<Example> all;
  for (GraphPairs &g : per_graph) {
    for (size_t k = 0; k < g.pairs.size(); ++k) {
      Example e = std::move(g.pairs[k].second);
      e.label = index[g.transitions[k].ToString()];
      all.push_back(e);
      partitions[g.pairs[k].first].push_back(std::move(e));
    }
  }
  std::vector<std::string> keys;
  for (const auto &[key, examples] : partitions) {
    keys.push_back(key);
    stats.pairs_per_partition[key] = static_cast<int>(examples.size());
  }
  std::vector<std::unique_ptr<AveragedPerceptron>> fitted(keys.size() + 1);
  ParallelFor(static_cast<int>(fitted.size()), options.threads, [&](int i) {
    const bool fallback = i == static_cast<int>(keys.size());
    PerceptronOptions po{options.epochs,
                         options.seed ^ Fnv1a(fallback ? "*" : keys[i])};
    auto p = std::make_unique<AveragedPerceptron>(po);
    p->Fit(fallback ? all : partitions[keys[i]]);
    fitted[i] = std::move(p);
  });
  for (size_t i = 0; i < keys.size(); ++i) {
    model.partitions_[keys[i]] = std::move(fitted[i]);
  }
  model.fallback_ = std::move(fitted.back());

  std::ostringstream text;
  WriteTreebank(corpus, text);
  model.fingerprint_ = Hex(Fnv1a(text.str()));
  return model;
}

Transition Model::Predict(const Configuration &config) const {
  const TransitionSet set = transition_set();
  if (fallback_) {
    auto it = partitions_.find(PartitionKey(config));
    const AveragedPerceptron &scorer =
        it != partitions_.end() ? *it->second : *fallback_;
    auto scores = scorer.Score(ExtractFeatures(config, feature_set_, *tags_));
    std::stable_sort(scores.begin(), scores.end(),
                     [](const auto &a, const auto &b) {
                       return a.second > b.second;
                     });
    for (const auto &[label, score] : scores) {
      const Transition &t = vocabulary_[label];
      if (IsLegal(config, t, set, *tags_)) return t;
    }
  }
  if (IsLegal(config, Transition::Reduce(1), set, *tags_)) {
    return Transition::Reduce(1);
  }
  return Transition::Shift();
}

void Model::Save(std::ostream &out) const {
  out << kMagic << ' ' << kVersion << '\n';
  out << "features " << FeatureSetName(feature_set_) << '\n';
  out << "pipeline " << PipelineName(pipeline_) << '\n';
  out << "seed " << options_.seed << '\n';
  out << "epochs " << options_.epochs << '\n';
  out << "hyper " << hyper_.penalty_c << ' ' << hyper_.termination_epsilon
      << ' ' << hyper_.kernel_gamma << ' ' << hyper_.kernel_r << ' '
      << hyper_.kernel_degree << '\n';
  out << "tagset " << TagsetFingerprint(*tags_) << '\n';
  out << "corpus " << fingerprint_ << '\n';
  out << "stats " << stats_.graphs_total << ' ' << stats_.graphs_used << ' '
      << stats_.excluded_unreachable << ' ' << stats_.excluded_lossy << '\n';
  out << "pairs " << stats_.pairs_per_partition.size() << '\n';
  for (const auto &[key, count] : stats_.pairs_per_partition) {
    out << key << ' ' << count << '\n';
  }
  out << "vocabulary " << vocabulary_.size() << '\n';
  for (const Transition &t : vocabulary_) out << t.ToString() << '\n';
  out << "partitions " << partitions_.size() << '\n';
  for (const auto &[key, p] : partitions_) {
    out << "partition " << key << '\n';
    p->Save(out);
  }
  out << "fallback\n";
  fallback_->Save(out);
  out << "end\n";
}

void Model::SaveFile(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model '" + path + "'");
  Save(out);
  if (!out) throw Error("write failed for '" + path + "'");
}

Model Model::Load(std::istream &in, const Tagset &tags) {
  auto expect = [&](const char *word) {
    std::string w;
    if (!(in >> w) || w != word) {
      throw ParseError(std::string("model: expected '") + word + "'");
    }
  };
  Model m;
  m.tags_ = &tags;
  std::string word;
  int version = 0;
  if (!(in >> word >> version) || word != kMagic) {
    throw ParseError("model: not a hybridparse model");
  }
  if (version != kVersion) {
    throw ParseError("model: unsupported version " + std::to_string(version));
  }
  expect("features");
  in >> word;
  auto fs = ParseFeatureSet(word);
  if (!fs) throw ParseError("model: unknown feature set '" + word + "'");
  m.feature_set_ = *fs;
  m.options_.features = *fs;
  expect("pipeline");
  in >> word;
  auto pl = ParsePipeline(word);
  if (!pl) throw ParseError("model: unknown pipeline '" + word + "'");
  m.pipeline_ = *pl;
  m.options_.pipeline = *pl;
  expect("seed");
  in >> m.options_.seed;
  expect("epochs");
  in >> m.options_.epochs;
  expect("hyper");
  in >> m.hyper_.penalty_c >> m.hyper_.termination_epsilon >>
      m.hyper_.kernel_gamma >> m.hyper_.kernel_r >> m.hyper_.kernel_degree;
  expect("tagset");
  in >> word;
  if (word != TagsetFingerprint(tags)) {
    throw Error("model was trained with a different tag vocabulary");
  }
  expect("corpus");
  in >> m.fingerprint_;
  expect("stats");
  in >> m.stats_.graphs_total >> m.stats_.graphs_used >>
      m.stats_.excluded_unreachable >> m.stats_.excluded_lossy;
  size_t count = 0;
  expect("pairs");
  in >> count;
  for (size_t i = 0; i < count; ++i) {
    std::string key;
    int pairs = 0;
    in >> key >> pairs;
    m.stats_.pairs_per_partition[key] = pairs;
  }
  expect("vocabulary");
  in >> count;
  for (size_t i = 0; i < count; ++i) {
    in >> word;
    Transition t = Transition::Parse(word);
    if ((t.type == TransitionType::kLeft || t.type == TransitionType::kRight) &&
        !tags.IsRelation(t.label.base)) {
      throw Error("model relation '" + t.label.base + "' not in vocabulary");
    }
    m.vocabulary_.push_back(t);
  }
  expect("partitions");
  in >> count;
  for (size_t i = 0; i < count; ++i) {
    expect("partition");
    std::string key;
    in >> key;
    m.partitions_[key] = AveragedPerceptron::Load(in);
  }
  expect("fallback");
  m.fallback_ = AveragedPerceptron::Load(in);
  expect("end");
  if (!in) throw ParseError("model: truncated");
  return m;
}

Model Model::LoadFile(const std::string &path, const Tagset &tags) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model '" + path + "'");
  return Load(in, tags);
}

}  // namespace hybrid
