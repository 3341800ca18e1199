#ifndef HYBRID_CROSS_VALIDATION_H_
#define HYBRID_CROSS_VALIDATION_H_

#include <cstdint>
#include <vector>

#include "hybrid/evaluation.h"
#include "hybrid/model.h"
#include "hybrid/tagset.h"
#include "hybrid/treebank.h"

namespace hybrid {

struct CrossValidationOptions {
  int folds = 10;
  FeatureSet features = FeatureSet::kLemma;
  Pipeline pipeline = Pipeline::kIntegrated;
  uint64_t seed = 1;
  int epochs = 50;
  int threads = 1;
};

struct CrossValidationResult {
  EvalReport elas;              // summed over folds, then scored
  EvalReport parseval;
  std::vector<EvalReport> per_fold;
};

// Seeded shuffle, then contiguous slices; fold sizes differ by at most 1.
std::vector<std::vector<int>> FoldAssignment(int size, int folds, uint64_t seed);

// Throws Error when folds < 2 or the corpus is smaller than folds.
CrossValidationResult CrossValidate(const TreebankDocument &corpus,
                                    const CrossValidationOptions &options,
                                    const Tagset &tags = Tagset::Default());

}  // namespace hybrid

#endif  // HYBRID_CROSS_VALIDATION_H_
