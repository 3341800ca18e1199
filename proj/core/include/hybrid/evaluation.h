#ifndef HYBRID_EVALUATION_H_
#define HYBRID_EVALUATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hybrid/graph.h"

namespace hybrid {

// Exact fraction; compare with operator== (cross multiplication).
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;

  double value() const { return den == 0 ? 0.0 : double(num) / double(den); }
  bool operator==(const Ratio &o) const { return num * o.den == o.num * den; }
};

struct EvalReport {
  int64_t true_positives = 0;
  int64_t gold_count = 0;
  int64_t predicted_count = 0;

  // 1 when the denominator is 0 and TP is 0.
  Ratio precision() const;
  Ratio recall() const;
  // Harmonic mean; 0 when precision and recall are both 0.
  Ratio f1() const;

  EvalReport &operator+=(const EvalReport &o) {
    true_positives += o.true_positives;
    gold_count += o.gold_count;
    predicted_count += o.predicted_count;
    return *this;
  }
  bool operator==(const EvalReport &) const = default;

  // "precision=... recall=... f1=... tp=... gold=... pred=..."
  std::string KeyValues() const;
};

struct ElasOptions {
  // Empty categories also match on their position among the segments.
  bool strict_empty_categories = false;
};

// Edge-level scores under vertex equivalence: segments by ordinal,
// phrases by segment span and tag, empty categories by POS and form.
// Throws Error when the segment sequences differ.
EvalReport Elas(const HybridGraph &gold, const HybridGraph &predicted,
                ElasOptions options = {});

// Indices of gold edges left unmatched by Elas.
std::vector<int> UnmatchedGoldEdges(const HybridGraph &gold,
                                    const HybridGraph &predicted,
                                    ElasOptions options = {});

// Fraction of headed gold segments with matching head and label.
Ratio Las(const HybridGraph &gold, const HybridGraph &predicted);
// Counts behind Las: tp = correct, gold = headed gold segments.
EvalReport LasCounts(const HybridGraph &gold, const HybridGraph &predicted);

// Labeled span matching.
EvalReport Parseval(const std::vector<Phrase> &gold,
                    const std::vector<Phrase> &predicted);

}  // namespace hybrid

#endif  // HYBRID_EVALUATION_H_
