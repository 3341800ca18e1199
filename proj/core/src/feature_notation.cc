#include "hybrid/feature_notation.h"

#include <map>
#include <regex>
#include <sstream>

#include "hybrid/error.h"

namespace hybrid {
namespace {

// Single-tag prefixes and the POS they stand for.
const std::map<std::string, std::string> &ShortPrefixes() {
  static const std::map<std::string, std::string> kPrefixes = {
      {"bi", "P"}, {"ka", "P"}, {"ta", "P"},
      {"sa", "FUT"}, {"ya", "VOC"}, {"ha", "VOC"},
  };
  return kPrefixes;
}

// Suffix letters for the +X suffix tags.
const std::map<std::string, std::string> &ShortSuffixes() {
  static const std::map<std::string, std::string> kSuffixes = {
      {"VOC", "m~a"},
  };
  return kSuffixes;
}

std::string CliticForm(const std::string &person, const std::string &gender,
                       const std::string &number) {
  if (person == "1") return number == "S" ? "iy" : "naA";
  const bool fem = gender == "F";
  const std::string base = person == "2" ? "k" : "h";
  if (number == "D") return base + "umaA";
  if (number == "P") return base + (fem ? "un~a" : "um");
  if (person == "2") return fem ? "ki" : "ka";
  return fem ? "haA" : "hu";
}

const std::vector<std::string> &VerbForms() {
  static const std::vector<std::string> kForms = {
      "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII"};
  return kForms;
}

bool SetPhi(const std::string &tag, MorphSegment *seg) {
  static const std::regex kPhi("^([123])?([MF])?([SDP])?$");
  std::smatch m;
  if (tag.empty() || !std::regex_match(tag, m, kPhi)) return false;
  if (m[1].matched) seg->features[Feature::kPerson] = m[1];
  if (m[2].matched) seg->features[Feature::kGender] = m[2];
  if (m[3].matched) seg->features[Feature::kNumber] = m[3];
  return true;
}

std::string Phi(const MorphSegment &seg) {
  return seg.GetOr(Feature::kPerson) + seg.GetOr(Feature::kGender) +
         seg.GetOr(Feature::kNumber);
}

struct Token {
  std::string text;
  int offset;  // 1-based column within the input
};

}  // namespace

std::vector<MorphSegment> ParseFeatureLine(std::string_view text,
                                           const Location &location,
                                           const Tagset &tags) {
  std::string_view body = text;
  while (!body.empty() && isspace(static_cast<unsigned char>(body.front()))) {
    body.remove_prefix(1);
  }
  while (!body.empty() && isspace(static_cast<unsigned char>(body.back()))) {
    body.remove_suffix(1);
  }
  const int lead = static_cast<int>(text.size() - body.size());
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("feature line must be bracket-delimited: '" +
                     std::string(text) + "'");
  }
  std::vector<Token> tokens;
  {
    size_t i = 1;
    while (i + 1 < body.size()) {
      if (body[i] == ' ') {
        ++i;
        continue;
      }
      size_t j = i;
      while (j + 1 < body.size() && body[j] != ' ') ++j;
      tokens.push_back({std::string(body.substr(i, j - i)),
                        static_cast<int>(i) + 1});
      i = j;
    }
  }
  if (tokens.empty()) throw ParseError("empty feature line");

  std::vector<MorphSegment> segs;
  bool pending_det = false;
  bool stem_seen = false;
  auto fail = [&](const Token &t, const std::string &why) {
    throw ParseError(why + " '" + t.text + "' at offset " +
                     std::to_string(t.offset + lead));
  };
  auto open = [&](const std::string &form, const std::string &pos,
                  const char *segtype, const Token &t) -> MorphSegment & {
    if (!tags.IsPos(pos)) fail(t, "unknown POS tag in");
    MorphSegment seg;
    seg.form = form;
    seg.pos = pos;
    seg.features[Feature::kSegType] = segtype;
    segs.push_back(std::move(seg));
    return segs.back();
  };
  auto current = [&](const Token &t) -> MorphSegment & {
    if (segs.empty()) fail(t, "feature tag before any segment");
    return segs.back();
  };

  for (size_t k = 0; k < tokens.size(); ++k) {
    const Token &t = tokens[k];
    const std::string &s = t.text;
    if (s == "Al+") {
      if (stem_seen) fail(t, "prefix after stem");
      pending_det = true;
    } else if (s.size() > 1 && s.back() == '+' && s.front() != '+') {
      if (stem_seen) fail(t, "prefix after stem");
      std::string body_tag = s.substr(0, s.size() - 1);
      size_t colon = body_tag.find(':');
      if (colon != std::string::npos) {
        open(body_tag.substr(0, colon), body_tag.substr(colon + 1), "prefix",
             t);
      } else {
        auto it = ShortPrefixes().find(body_tag);
        if (it == ShortPrefixes().end()) fail(t, "unknown prefix tag");
        open(it->first, it->second, "prefix", t);
      }
    } else if (s.rfind("POS:", 0) == 0) {
      if (stem_seen) fail(t, "second stem tag");
      const std::string pos = s.substr(4);
      MorphSegment &seg = open(pos, pos, "stem", t);
      if (pending_det) seg.features[Feature::kDet] = "Al";
      pending_det = false;
      stem_seen = true;
    } else if (s.rfind("PRON:", 0) == 0) {
      MorphSegment seg;
      seg.pos = "PRON";
      seg.features[Feature::kSegType] = "suffix";
      if (!SetPhi(s.substr(5), &seg)) fail(t, "bad pronoun features in");
      seg.features[Feature::kPronType] = "object";
      seg.form = CliticForm(seg.GetOr(Feature::kPerson, "3"),
                            seg.GetOr(Feature::kGender, "M"),
                            seg.GetOr(Feature::kNumber, "S"));
      segs.push_back(std::move(seg));
    } else if (s.size() > 1 && s.front() == '+') {
      std::string body_tag = s.substr(1);
      size_t colon = body_tag.find(':');
      if (colon != std::string::npos) {
        open(body_tag.substr(0, colon), body_tag.substr(colon + 1), "suffix",
             t);
      } else {
        auto it = ShortSuffixes().find(body_tag);
        if (it == ShortSuffixes().end()) fail(t, "unknown suffix tag");
        open(it->second, it->first, "suffix", t);
      }
    } else if (s == "PRONTYPE:SUBJ" || s == "PRONTYPE:OBJ") {
      MorphSegment &seg = current(t);
      if (seg.pos != "PRON") fail(t, "pronoun type on a non-pronoun:");
      seg.features[Feature::kPronType] = s == "PRONTYPE:SUBJ" ? "subject"
                                                               : "object";
    } else if (s == "ACT" || s == "PASS") {
      MorphSegment &seg = current(t);
      if (k + 1 < tokens.size() && tokens[k + 1].text == "PCPL") {
        seg.features[Feature::kDerivation] = s + "_PCPL";
        ++k;
      } else {
        seg.features[Feature::kVoice] = s;
      }
    } else if (s == "VN") {
      current(t).features[Feature::kDerivation] = "VN";
    } else if (s.size() > 2 && s.front() == '(' && s.back() == ')') {
      std::string roman = s.substr(1, s.size() - 2);
      bool ok = false;
      for (const auto &f : VerbForms()) ok = ok || f == roman;
      if (!ok) fail(t, "unknown verb form");
      current(t).features[Feature::kForm] = roman;
    } else if (s == "PERF" || s == "IMPF" || s == "IMPV") {
      current(t).features[Feature::kAspect] = s;
    } else if (s.rfind("LEM:", 0) == 0 && s.size() > 4) {
      MorphSegment &seg = current(t);
      seg.lemma = s.substr(4);
      if (seg.features[Feature::kSegType] == "stem") seg.form = *seg.lemma;
    } else if (s.rfind("ROOT:", 0) == 0 && s.size() > 5) {
      current(t).root = s.substr(5);
    } else if (s.rfind("SP:", 0) == 0 && s.size() > 3) {
      current(t).features[Feature::kSpecial] = s.substr(3);
    } else if (s.rfind("MOOD:", 0) == 0 || s == "IND" || s == "SUBJ" ||
               s == "JUS") {
      std::string m = s.rfind("MOOD:", 0) == 0 ? s.substr(5) : s;
      if (m == "I") m = "IND";
      if (m == "S") m = "SUBJ";
      if (m == "J") m = "JUS";
      if (!IsValidFeatureValue(Feature::kMood, m)) fail(t, "unknown mood");
      current(t).features[Feature::kMood] = m;
    } else if (s == "DEF" || s == "INDEF") {
      current(t).features[Feature::kState] = s;
    } else if (s == "NOM" || s == "ACC" || s == "GEN") {
      current(t).features[Feature::kCase] = s;
    } else {
      MorphSegment probe;
      if (!SetPhi(s, &probe)) fail(t, "unknown tag");
      MorphSegment &seg = current(t);
      for (const auto &[f, v] : probe.features) seg.features[f] = v;
    }
  }
  if (pending_det) throw ParseError("determiner prefix without a stem");
  for (size_t i = 0; i < segs.size(); ++i) {
    Location loc = location;
    loc.segment = static_cast<int>(i) + 1;
    if (!loc.token) loc.token = 1;
    segs[i].location = loc;
  }
  return segs;
}

std::string WriteFeatureLine(const std::vector<MorphSegment> &segments) {
  std::vector<std::string> out;
  for (const MorphSegment &seg : segments) {
    const std::string type = seg.GetOr(Feature::kSegType, "stem");
    if (type == "prefix") {
      auto it = ShortPrefixes().find(seg.form);
      if (it != ShortPrefixes().end() && it->second == seg.pos) {
        out.push_back(seg.form + "+");
      } else {
        out.push_back(seg.form + ":" + seg.pos + "+");
      }
      continue;
    }
    if (type == "suffix") {
      if (seg.pos == "PRON") {
        out.push_back("PRON:" + Phi(seg));
        if (seg.GetOr(Feature::kPronType) == "subject") {
          out.push_back("PRONTYPE:SUBJ");
        }
      } else {
        auto it = ShortSuffixes().find(seg.pos);
        if (it != ShortSuffixes().end() && it->second == seg.form) {
          out.push_back("+" + seg.pos);
        } else {
          out.push_back("+" + seg.form + ":" + seg.pos);
        }
      }
      continue;
    }
    if (seg.Get(Feature::kDet)) out.push_back("Al+");
    out.push_back("POS:" + seg.pos);
    if (auto v = seg.Get(Feature::kAspect)) out.push_back(*v);
    if (auto v = seg.Get(Feature::kVoice)) out.push_back(*v);
    if (auto v = seg.Get(Feature::kDerivation)) {
      if (*v == "VN") {
        out.push_back("VN");
      } else {
        out.push_back(v->substr(0, v->find('_')));
        out.push_back("PCPL");
      }
    }
    if (auto v = seg.Get(Feature::kForm)) out.push_back("(" + *v + ")");
    if (seg.lemma) out.push_back("LEM:" + *seg.lemma);
    if (seg.root) out.push_back("ROOT:" + *seg.root);
    if (auto v = seg.Get(Feature::kSpecial)) out.push_back("SP:" + *v);
    if (std::string phi = Phi(seg); !phi.empty()) out.push_back(phi);
    if (auto v = seg.Get(Feature::kState)) out.push_back(*v);
    if (auto v = seg.Get(Feature::kCase)) out.push_back(*v);
    if (auto v = seg.Get(Feature::kMood)) out.push_back("MOOD:" + *v);
  }
  std::string line = "[";
  for (size_t i = 0; i < out.size(); ++i) {
    if (i) line += ' ';
    line += out[i];
  }
  return line + "]";
}

std::vector<FeatureSentence> ReadFeatureFile(std::istream &in,
                                             const Tagset &tags) {
  std::vector<FeatureSentence> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    try {
      if (fields.size() != 2 && fields.size() != 3) {
        throw ParseError("expected 2 or 3 tab-separated fields");
      }
      Location loc = ParseLocation(fields[0]);
      if (!loc.token) throw ParseError("token location required");
      std::vector<MorphSegment> segs =
          ParseFeatureLine(fields.back(), loc, tags);
      if (fields.size() == 3) {
        if (segs.size() != 1) {
          throw ParseError("segment layout needs exactly one segment");
        }
        segs[0].form = fields[1];
        segs[0].location = loc;
      }
      if (out.empty() || out.back().verse.chapter != loc.chapter ||
          out.back().verse.verse != loc.verse) {
        FeatureSentence sentence;
        sentence.verse = Location{loc.chapter, loc.verse, {}, {}};
        out.push_back(std::move(sentence));
      }
      for (auto &s : segs) out.back().segments.push_back(std::move(s));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace hybrid
