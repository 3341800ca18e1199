#include "hybrid/cross_validation.h"

#include <numeric>
#include <random>

#include "hybrid/engine.h"
#include "hybrid/error.h"
#include "hybrid/parallel.h"

namespace hybrid {

std::vector<std::vector<int>> FoldAssignment(int size, int folds,
                                             uint64_t seed) {
  if (folds < 2) throw Error("cross-validation needs at least 2 folds");
  if (size < folds) {
    throw Error("corpus of " + std::to_string(size) + " graphs is smaller than " +
                std::to_string(folds) + " folds");
  }
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = size; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  std::vector<std::vector<int>> out(folds);
  int pos = 0;
  for (int f = 0; f < folds; ++f) {
    const int len = size / folds + (f < size % folds ? 1 : 0);
    out[f].assign(order.begin() + pos, order.begin() + pos + len);
    pos += len;
  }
  return out;
}

CrossValidationResult CrossValidate(const TreebankDocument &corpus,
                                    const CrossValidationOptions &options,
                                    const Tagset &tags) {
  const auto folds = FoldAssignment(static_cast<int>(corpus.size()),
                                    options.folds, options.seed);
  std::vector<EvalReport> elas(folds.size()), parseval(folds.size());
  ParallelFor(static_cast<int>(folds.size()), options.threads, [&](int f) {
    std::vector<bool> held(corpus.size(), false);
    for (int i : folds[f]) held[i] = true;
    TreebankDocument train;
    for (size_t i = 0; i < corpus.size(); ++i) {
      if (!held[i]) train.Add(corpus.graphs[i]);
    }
    TrainingOptions to;
    to.features = options.features;
    to.pipeline = options.pipeline;
    to.seed = options.seed;
    to.epochs = options.epochs;
    Model model = Train(train, to, tags);
    for (int i : folds[f]) {
      const HybridGraph &gold = corpus.graphs[i];
      ParseResult r = Parse(model, gold.Segments());
      elas[f] += Elas(gold, r.graph);
      parseval[f] += Parseval(gold.phrases(), r.graph.phrases());
    }
  });
  CrossValidationResult out;
  for (size_t f = 0; f < folds.size(); ++f) {
    out.elas += elas[f];
    out.parseval += parseval[f];
    out.per_fold.push_back(elas[f]);
  }
  return out;
}

}  // namespace hybrid
