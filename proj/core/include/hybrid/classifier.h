#ifndef HYBRID_CLASSIFIER_H_
#define HYBRID_CLASSIFIER_H_

#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hybrid/features.h"

namespace hybrid {

struct Example {
  FeatureVector features;
  int label = 0;  // index into the transition vocabulary
};

// Plug-in contract for the per-partition scorers.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual void Fit(const std::vector<Example> &examples) = 0;
  // (label, score) for every label seen in training.
  virtual std::vector<std::pair<int, double>> Score(
      const FeatureVector &features) const = 0;
  virtual void Save(std::ostream &out) const = 0;
};

struct PerceptronOptions {
  int epochs = 50;
  uint64_t seed = 1;
};

// Averaged multiclass perceptron over the predicates plus explicit
// pairwise conjunctions of s1 and s2 predicates.
class AveragedPerceptron : public Classifier {
 public:
  explicit AveragedPerceptron(PerceptronOptions options = {})
      : options_(options) {}

  void Fit(const std::vector<Example> &examples) override;
  std::vector<std::pair<int, double>> Score(
      const FeatureVector &features) const override;
  void Save(std::ostream &out) const override;
  static std::unique_ptr<AveragedPerceptron> Load(std::istream &in);

  int num_labels() const { return static_cast<int>(labels_.size()); }
  int num_weights() const;

 private:
  // Feature rows active for a vector; unknown predicates are skipped when
  // `grow` is false.
  std::vector<int> Rows(const FeatureVector &features, bool grow);
  std::vector<int> Rows(const FeatureVector &features) const;
  int Predicate(const std::string &name) const;

  PerceptronOptions options_;
  std::vector<int> labels_;  // local class -> vocabulary label
  std::unordered_map<std::string, int> predicates_;
  std::unordered_map<uint64_t, int> rows_;
  std::vector<float> weights_;  // rows_ x labels_
};

}  // namespace hybrid

#endif  // HYBRID_CLASSIFIER_H_
