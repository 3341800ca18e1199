#ifndef HYBRID_MORPHOLOGY_H_
#define HYBRID_MORPHOLOGY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hybrid/location.h"

namespace hybrid {

// Feature names of the morphological inventory. Order is the canonical
// serialization order of the FEATS column.
enum class Feature {
  kSegType,
  kPerson,
  kGender,
  kNumber,
  kCase,
  kMood,
  kVoice,
  kAspect,
  kState,
  kDerivation,
  kForm,
  kSpecial,
  kPronType,
  kDet,
};

std::string_view FeatureName(Feature f);
std::optional<Feature> FeatureFromName(std::string_view name);

// True if value is allowed for the feature. SP values are open.
bool IsValidFeatureValue(Feature f, std::string_view value);

struct MorphSegment {
  std::optional<Location> location;
  std::string form;
  std::string pos;
  std::map<Feature, std::string> features;
  std::optional<std::string> lemma;
  std::optional<std::string> root;

  const std::string *Get(Feature f) const {
    auto it = features.find(f);
    return it == features.end() ? nullptr : &it->second;
  }
  std::string GetOr(Feature f, const std::string &fallback = "") const {
    const std::string *v = Get(f);
    return v ? *v : fallback;
  }
  bool operator==(const MorphSegment &other) const = default;
};

// FEATS column encoding: "key=value|key=value", "_" when empty.
std::string EncodeFeats(const MorphSegment &seg);
// Fills features/lemma/root of seg. Throws ParseError.
void DecodeFeats(std::string_view text, MorphSegment *seg);

}  // namespace hybrid

#endif  // HYBRID_MORPHOLOGY_H_
