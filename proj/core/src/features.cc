#include "hybrid/features.h"

#include <algorithm>
#include <cctype>

namespace hybrid {
namespace {

void AddStatic(const std::string &slot, const HybridGraph &g, NodeRef n,
               FeatureSet set, const Tagset &tags, FeatureVector *out) {
  if (n.is_phrase()) {
    out->push_back(slot + ":phrase=" + g.phrase(n.index).tag);
    return;
  }
  const Terminal &t = g.terminal(n.index);
  const MorphSegment &m = t.morph;
  out->push_back(slot + ":pos=" + m.pos);
  if (t.empty) out->push_back(slot + ":empty");
  auto add = [&](const char *name, Feature f) {
    if (const std::string *v = m.Get(f)) {
      out->push_back(slot + ":" + name + "=" + *v);
    }
  };
  if (set >= FeatureSet::kMorph6) {
    add("voice", Feature::kVoice);
    add("mood", Feature::kMood);
    add("case", Feature::kCase);
    add("state", Feature::kState);
  }
  if (set >= FeatureSet::kMorph9) {
    std::string pron_type = m.GetOr(Feature::kPronType);
    if (pron_type.empty() && m.pos == "PRON" &&
        m.GetOr(Feature::kSegType) == "suffix") {
      pron_type = "object";
    }
    if (!pron_type.empty()) out->push_back(slot + ":prontype=" + pron_type);
    add("segtype", Feature::kSegType);
    if (const std::string *sp = m.Get(Feature::kSpecial);
        sp && tags.IsCopula(*sp)) {
      out->push_back(slot + ":copula");
    }
  }
  if (set >= FeatureSet::kLemma && m.lemma) {
    out->push_back(slot + ":lemma=" + *m.lemma);
  }
  if (set >= FeatureSet::kPhi) {
    add("person", Feature::kPerson);
    add("gender", Feature::kGender);
    add("number", Feature::kNumber);
  }
}

void AddDynamic(const std::string &slot, const HybridGraph &g, NodeRef n,
                FeatureVector *out) {
  const std::vector<int> deps = g.DependentEdges(n);
  for (int e : deps) {
    out->push_back(slot + ":deprel(" + g.edges()[e].label.ToString() + ")");
  }
  if (!deps.empty() && !g.HeadEdge(n)) out->push_back(slot + ":isroot");
}

}  // namespace

std::string FeatureSetName(FeatureSet set) {
  switch (set) {
    case FeatureSet::kPos: return "pos";
    case FeatureSet::kMorph6: return "morph6";
    case FeatureSet::kMorph9: return "morph9";
    case FeatureSet::kLemma: return "lemma";
    case FeatureSet::kPhi: return "phi";
  }
  return "?";
}

std::optional<FeatureSet> ParseFeatureSet(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(c));
  for (FeatureSet s : {FeatureSet::kPos, FeatureSet::kMorph6,
                       FeatureSet::kMorph9, FeatureSet::kLemma,
                       FeatureSet::kPhi}) {
    if (FeatureSetName(s) == lower) return s;
  }
  return std::nullopt;
}

FeatureVector ExtractFeatures(const Configuration &config, FeatureSet set,
                              const Tagset &tags) {
  FeatureVector out;
  const HybridGraph &g = config.graph();
  for (int k = 1; k <= 3; ++k) {
    const std::string slot = "s" + std::to_string(k);
    auto s = config.S(k);
    if (!s) {
      out.push_back(slot + ":absent");
      continue;
    }
    AddStatic(slot, g, *s, set, tags, &out);
    AddDynamic(slot, g, *s, &out);
  }
  auto q1 = config.Q(1);
  if (q1) {
    AddStatic("q1", g, NodeRef::Terminal(*q1), set, tags, &out);
  } else {
    out.push_back("q1:absent");
  }
  auto s1 = config.S(1), s2 = config.S(2), s3 = config.S(3);
  if (s1 && s2 && g.HasEdgeBetween(*s1, *s2)) out.push_back("edge(s1,s2)");
  if (s1 && q1 && g.HasEdgeBetween(*s1, NodeRef::Terminal(*q1))) {
    out.push_back("edge(s1,q1)");
  }
  if (s2 && s3 && g.HasEdgeBetween(*s2, *s3)) out.push_back("edge(s2,s3)");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string PartitionKey(const Configuration &config) {
  auto s1 = config.S(1);
  if (!s1) return kEmptyStackPartition;
  if (s1->is_phrase()) return "phrase:" + config.graph().phrase(s1->index).tag;
  return config.graph().terminal(s1->index).morph.pos;
}

}  // namespace hybrid
