#include "hybrid/morphology.h"

#include <array>
#include <set>
#include <vector>

#include "hybrid/error.h"

namespace hybrid {
namespace {

struct FeatureInfo {
  Feature feature;
  std::string_view name;
  std::vector<std::string_view> values;  // empty = open class
};

const std::array<FeatureInfo, 14> &Inventory() {
  static const std::array<FeatureInfo, 14> kInventory = {{
      {Feature::kSegType, "SegType", {"prefix", "stem", "suffix"}},
      {Feature::kPerson, "Person", {"1", "2", "3"}},
      {Feature::kGender, "Gender", {"M", "F"}},
      {Feature::kNumber, "Number", {"S", "D", "P"}},
      {Feature::kCase, "Case", {"NOM", "ACC", "GEN"}},
      {Feature::kMood, "Mood", {"IND", "SUBJ", "JUS"}},
      {Feature::kVoice, "Voice", {"ACT", "PASS"}},
      {Feature::kAspect, "Aspect", {"PERF", "IMPF", "IMPV"}},
      {Feature::kState, "State", {"DEF", "INDEF"}},
      {Feature::kDerivation, "Derivation", {"ACT_PCPL", "PASS_PCPL", "VN"}},
      {Feature::kForm,
       "Form",
       {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI",
        "XII"}},
      {Feature::kSpecial, "SP", {}},
      {Feature::kPronType, "PronType", {"subject", "object"}},
      {Feature::kDet, "Det", {"Al"}},
  }};
  return kInventory;
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '%': out += "%25"; break;
      case '|': out += "%7C"; break;
      case '=': out += "%3D"; break;
      case '\t': out += "%09"; break;
      case '\n': out += "%0A"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Unescape(std::string_view s) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError("bad escape");
  };
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    if (i + 2 >= s.size()) throw ParseError("bad escape");
    out += static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2]));
    i += 2;
  }
  return out;
}

}  // namespace

std::string_view FeatureName(Feature f) {
  return Inventory()[static_cast<int>(f)].name;
}

std::optional<Feature> FeatureFromName(std::string_view name) {
  for (const auto &info : Inventory()) {
    if (info.name == name) return info.feature;
  }
  return std::nullopt;
}

bool IsValidFeatureValue(Feature f, std::string_view value) {
  const auto &values = Inventory()[static_cast<int>(f)].values;
  if (values.empty()) return !value.empty();
  for (auto v : values) {
    if (v == value) return true;
  }
  return false;
}

std::string EncodeFeats(const MorphSegment &seg) {
  std::vector<std::string> parts;
  if (seg.location) parts.push_back("Loc=" + seg.location->ToString());
  for (const auto &[f, v] : seg.features) {
    parts.push_back(std::string(FeatureName(f)) + "=" + Escape(v));
  }
  if (seg.lemma) parts.push_back("Lemma=" + Escape(*seg.lemma));
  if (seg.root) parts.push_back("Root=" + Escape(*seg.root));
  if (parts.empty()) return "_";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i];
  }
  return out;
}

void DecodeFeats(std::string_view text, MorphSegment *seg) {
  if (text == "_") return;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t bar = text.find('|', pos);
    if (bar == std::string_view::npos) bar = text.size();
    std::string_view item = text.substr(pos, bar - pos);
    size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError("malformed feature '" + std::string(item) + "'");
    }
    std::string_view key = item.substr(0, eq);
    std::string value;
    try {
      value = Unescape(item.substr(eq + 1));
    } catch (const std::exception &) {
      throw ParseError("bad escape in feature '" + std::string(item) + "'");
    }
    if (key == "Loc") {
      seg->location = ParseLocation(value);
    } else if (key == "Lemma") {
      seg->lemma = value;
    } else if (key == "Root") {
      seg->root = value;
    } else {
      auto f = FeatureFromName(key);
      if (!f) throw ParseError("unknown feature '" + std::string(key) + "'");
      if (!IsValidFeatureValue(*f, value)) {
        throw ParseError("invalid value '" + value + "' for feature " +
                         std::string(key));
      }
      seg->features[*f] = value;
    }
    pos = bar + 1;
  }
}

}  // namespace hybrid
