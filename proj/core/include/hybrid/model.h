#ifndef HYBRID_MODEL_H_
#define HYBRID_MODEL_H_

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/classifier.h"
#include "hybrid/features.h"
#include "hybrid/tagset.h"
#include "hybrid/transition.h"
#include "hybrid/treebank.h"

namespace hybrid {

enum class Pipeline { kIntegrated, kMultiStep };

std::string PipelineName(Pipeline p);
std::optional<Pipeline> ParsePipeline(std::string_view name);

// Maximum-margin settings kept as metadata for a kernel plug-in.
struct Hyperparameters {
  double penalty_c = 0.5;
  double termination_epsilon = 1.0;
  double kernel_gamma = 0.2;
  double kernel_r = 0.0;
  int kernel_degree = 2;
};

struct TrainingOptions {
  FeatureSet features = FeatureSet::kLemma;
  Pipeline pipeline = Pipeline::kIntegrated;
  uint64_t seed = 1;
  int epochs = 50;
  // Keep the prefix of an unreachable graph's sequence up to the first
  // step that loses a gold edge.
  bool include_unreachable = false;
  // Multi-step only: keep graphs whose conversion is lossy.
  bool include_lossy = false;
  int threads = 1;
};

struct TrainingStats {
  int graphs_total = 0;
  int graphs_used = 0;
  int excluded_unreachable = 0;
  int excluded_lossy = 0;
  std::map<std::string, int> pairs_per_partition;
};

class Model {
 public:
  Model() = default;
  Model(Model &&) = default;
  Model &operator=(Model &&) = default;

  // Highest-scoring legal transition; falls back to Λ(1), then Π.
  Transition Predict(const Configuration &config) const;

  FeatureSet feature_set() const { return feature_set_; }
  Pipeline pipeline() const { return pipeline_; }
  TransitionSet transition_set() const {
    return pipeline_ == Pipeline::kMultiStep ? TransitionSet::kPure
                                             : TransitionSet::kFull;
  }
  const std::vector<Transition> &vocabulary() const { return vocabulary_; }
  const Hyperparameters &hyperparameters() const { return hyper_; }
  const TrainingStats &stats() const { return stats_; }
  const std::string &corpus_fingerprint() const { return fingerprint_; }
  const Tagset &tagset() const { return *tags_; }

  // Versioned text container. Load throws ParseError, and Error on a
  // tagset mismatch.
  void Save(std::ostream &out) const;
  void SaveFile(const std::string &path) const;
  static Model Load(std::istream &in, const Tagset &tags = Tagset::Default());
  static Model LoadFile(const std::string &path,
                        const Tagset &tags = Tagset::Default());

 private:
  friend Model Train(const TreebankDocument &, const TrainingOptions &,
                     const Tagset &);

  FeatureSet feature_set_ = FeatureSet::kLemma;
  Pipeline pipeline_ = Pipeline::kIntegrated;
  Hyperparameters hyper_;
  TrainingOptions options_;
  TrainingStats stats_;
  std::string fingerprint_;
  std::vector<Transition> vocabulary_;
  std::map<std::string, std::unique_ptr<AveragedPerceptron>> partitions_;
  std::unique_ptr<AveragedPerceptron> fallback_;
  const Tagset *tags_ = &Tagset::Default();
};

// Oracle-supervised training. Throws TrainingError when no graph is
// usable.
Model Train(const TreebankDocument &corpus, const TrainingOptions &options,
            const Tagset &tags = Tagset::Default());

// Stable hash of vocabularies, used to reject mismatched models.
std::string TagsetFingerprint(const Tagset &tags);

}  // namespace hybrid

#endif  // HYBRID_MODEL_H_
