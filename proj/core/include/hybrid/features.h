#ifndef HYBRID_FEATURES_H_
#define HYBRID_FEATURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/tagset.h"
#include "hybrid/transition.h"

namespace hybrid {

// Nested static feature sets: Pos < Morph6 < Morph9 < Lemma < Phi.
enum class FeatureSet { kPos, kMorph6, kMorph9, kLemma, kPhi };

std::string FeatureSetName(FeatureSet set);
// Case-insensitive; empty when unknown.
std::optional<FeatureSet> ParseFeatureSet(std::string_view name);

// Sorted, duplicate-free binary predicates such as "s1:pos=V" or
// "edge(s1,s2)".
using FeatureVector = std::vector<std::string>;

FeatureVector ExtractFeatures(const Configuration &config, FeatureSet set,
                              const Tagset &tags = Tagset::Default());

// Classifier partition: POS of s1, "phrase:TAG" for phrases, and the
// reserved "∅" for an empty stack.
std::string PartitionKey(const Configuration &config);

inline constexpr char kEmptyStackPartition[] = "\xE2\x88\x85";

}  // namespace hybrid

#endif  // HYBRID_FEATURES_H_
