#ifndef HYBRID_ENGINE_H_
#define HYBRID_ENGINE_H_

#include <vector>

#include "hybrid/conversion.h"
#include "hybrid/graph.h"
#include "hybrid/model.h"

namespace hybrid {

struct ParseReport {
  std::vector<Transition> trace;
  int budget = 0;
  bool budget_exhausted = false;
  // Multi-step only: the pure-dependency parse before restoration.
  HybridGraph pure;
  std::vector<LossDetail> reconstruction_errors;
};

struct ParseResult {
  HybridGraph graph;
  ParseReport report;
};

// Greedy one-step parse over the full transition set.
ParseResult ParseIntegrated(const Model &model,
                            const std::vector<MorphSegment> &sentence);

// Greedy pure-dependency parse, then restoration of the hybrid graph.
ParseResult ParseMultiStep(const Model &model,
                           const std::vector<MorphSegment> &sentence);

// Dispatches on the model's pipeline.
ParseResult Parse(const Model &model, const std::vector<MorphSegment> &sentence);

}  // namespace hybrid

#endif  // HYBRID_ENGINE_H_
