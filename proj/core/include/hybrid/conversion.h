#ifndef HYBRID_CONVERSION_H_
#define HYBRID_CONVERSION_H_

#include <string>
#include <vector>

#include "hybrid/graph.h"
#include "hybrid/tagset.h"

namespace hybrid {

struct LossDetail {
  std::string where;
  std::string reason;
};

struct ConversionReport {
  int converted_phrases = 0;
  int converted_empty_categories = 0;
  int dropped_pronouns = 0;
  std::vector<LossDetail> loss_details;

  bool lossy() const { return !loss_details.empty(); }
};

struct PureConversion {
  HybridGraph pure;
  ConversionReport report;
};

// Removes dropped pronouns, collapses r1 -> EC -> r2 chains into bridged
// labels and folds phrases into expansion flags, innermost first.
// Throws ValidationError on an invalid input graph.
PureConversion ToPureDependency(const HybridGraph &hybrid,
                                const Tagset &tags = Tagset::Default());

// Expands bridges, restores dropped pronouns, then materializes phrases
// from expansion flags. Problems are appended to `errors` and the
// offending labels kept verbatim.
HybridGraph FromPureDependency(const HybridGraph &pure,
                               std::vector<LossDetail> *errors = nullptr,
                               const Tagset &tags = Tagset::Default());

// The three restoration stages, in the order FromPureDependency runs them.
void ExpandBridges(HybridGraph *g);
void RestoreDroppedPronouns(HybridGraph *g);
void MaterializePhrases(HybridGraph *g, std::vector<LossDetail> *errors);
bool IsConvertible(const HybridGraph &hybrid,
                   const Tagset &tags = Tagset::Default());

// Tag for a restored phrase over [start, end] rooted at terminal `root`.
std::string PhraseTagFor(const HybridGraph &g, int start, int end, int root);

// A non-copula verb without a subject-like dependent.
bool NeedsDroppedPronoun(const HybridGraph &g, int terminal);

// Placeholder surface form of reconstructed non-pronoun empty categories.
inline constexpr char kElidedForm[] = "*";

}  // namespace hybrid

#endif  // HYBRID_CONVERSION_H_
