#include "hybrid/synth.h"

#include <array>
#include <random>
#include <vector>

#include "hybrid/conversion.h"
#include "hybrid/error.h"
#include "hybrid/pronouns.h"

namespace hybrid {
namespace {

struct Entry {
  const char *stem;
  const char *gender;
};

constexpr std::array<Entry, 12> kNouns = {{
    {"rab~", "M"}, {"kitaAb", "M"}, {"qawom", "M"}, {"rasuwl", "M"},
    {"nuwr", "M"}, {"yawom", "M"}, {"Eabod", "M"}, {"jan~ap", "F"},
    {"samaA'", "F"}, {"naAr", "F"}, {">aroD", "F"}, {"raHomap", "F"},
}};
constexpr std::array<Entry, 4> kNames = {{
    {"{ll~ah", "M"}, {"muwsaY", "M"}, {"firoEawon", "M"}, {"maroyam", "F"},
}};
constexpr std::array<const char *, 5> kAdjectives = {
    "Ealiym", "kabiyr", "Haq~", "mubiyn", "EaZiym"};
constexpr std::array<const char *, 8> kVerbs = {
    "qaAl", "xalaq", "jaEal", ">anzal", "Ealim", "katab", "hadaY", "naSar"};
constexpr std::array<const char *, 2> kCopulas = {"kaAn", ">aSobaH"};
constexpr std::array<const char *, 6> kPrepositions = {
    "li", "bi", "fiy", "EalaY", "min", "<ilaY"};

struct Phi {
  std::string person, gender, number;
};

uint64_t SplitMix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string CaseEnding(const std::string &c, bool definite) {
  if (c == "NOM") return definite ? "u" : "N";
  if (c == "ACC") return definite ? "a" : "F";
  return definite ? "i" : "K";
}

std::string PerfectEnding(const Phi &phi) {
  const bool fem = phi.gender == "F";
  if (phi.person == "1") return phi.number == "S" ? "tu" : "naA";
  if (phi.person == "2") {
    if (phi.number == "S") return fem ? "ti" : "ta";
    if (phi.number == "D") return "tumaA";
    return fem ? "tun~a" : "tumo";
  }
  if (phi.number == "S") return fem ? "ato" : "a";
  if (phi.number == "D") return fem ? "ataA" : "aA";
  return fem ? "ona" : "uwA";
}

std::string ImperfectPrefix(const Phi &phi) {
  if (phi.person == "1") return phi.number == "S" ? ">a" : "na";
  if (phi.person == "2") return "ta";
  return phi.gender == "F" && phi.number != "P" ? "ta" : "ya";
}

std::string CliticForm(const Phi &phi) {
  const bool fem = phi.gender == "F";
  if (phi.person == "1") return phi.number == "S" ? "niy" : "naA";
  if (phi.person == "2") {
    if (phi.number == "S") return fem ? "ki" : "ka";
    return phi.number == "D" ? "kumaA" : "kum";
  }
  if (phi.number == "S") return fem ? "haA" : "hu";
  return phi.number == "D" ? "humaA" : (fem ? "hun~a" : "hum");
}

// Terminals, terminal-level links and phrase plans. Phrase tags are
// computed while every link still points at terminals, then flagged
// links move onto the phrase rooted at their dependent.
class Builder {
 public:
  Builder(int chapter, int verse) : chapter_(chapter), verse_(verse) {}

  int size() const { return static_cast<int>(terms_.size()); }
  const MorphSegment &morph(int i) const { return terms_[i].morph; }

  int Word(MorphSegment m, bool same_token = false) {
    if (same_token && token_ > 0) {
      ++segment_;
    } else {
      ++token_;
      segment_ = 1;
    }
    m.location = Location{chapter_, verse_, token_, segment_};
    Terminal t;
    t.morph = std::move(m);
    terms_.push_back(std::move(t));
    return size() - 1;
  }

  int Empty(const std::string &pos, const std::string &form) {
    Terminal t;
    t.empty = true;
    t.morph.pos = pos;
    t.morph.form = form;
    terms_.push_back(std::move(t));
    return size() - 1;
  }

  void Link(int dep, int head, const std::string &rel, bool as_phrase = false) {
    links_.push_back({dep, head, rel, as_phrase});
  }

  void Phrase(int root, int start, int end) {
    phrases_.push_back({root, start, end});
  }

  HybridGraph Finish() const {
    HybridGraph g;
    for (const Terminal &t : terms_) g.AddTerminal(t);
    for (const PlannedLink &l : links_) {
      g.AddEdge(NodeRef::Terminal(l.dep), NodeRef::Terminal(l.head),
                Label(l.rel));
    }
    std::vector<std::string> tags;
    for (const PlannedPhrase &p : phrases_) {
      tags.push_back(PhraseTagFor(g, p.start, p.end, p.root));
    }
    for (size_t i = 0; i < phrases_.size(); ++i) {
      const PlannedPhrase &p = phrases_[i];
      const int id = g.AddPhrase(p.start, p.end, tags[i]);
      for (size_t e = 0; e < links_.size(); ++e) {
        if (links_[e].as_phrase && links_[e].dep == p.root) {
          Edge edge = g.edges()[e];
          edge.dependent = NodeRef::Phrase(id);
          g.SetEdge(static_cast<int>(e), edge);
        }
      }
    }
    return g.Canonical();
  }

 private:
  struct PlannedLink {
    int dep, head;
    std::string rel;
    bool as_phrase;
  };
  struct PlannedPhrase {
    int root, start, end;
  };

  int chapter_, verse_;
  int token_ = 0, segment_ = 1;
  std::vector<Terminal> terms_;
  std::vector<PlannedLink> links_;
  std::vector<PlannedPhrase> phrases_;
};

struct Span {
  int root, start, end;
};

// Gold structure follows from surface features:
//   NOM noun after a verb -> subj (pass for passive verbs)
//   ACC noun after an active verb -> obj; after a copula -> predx
//   adjective -> adj of the preceding noun with the same case
//   GEN noun or clitic after P -> gen; P -> link of the clause head
//   INDEF NOM noun after a DEF NOM noun -> pred
//   verb without a NOM noun -> dropped subject pronoun (non-pure profiles)
//   laA + NOM noun + P -> elided N head carrying subjx/predx/link
class Grammar {
 public:
  Grammar(uint64_t seed, const SynthProfile &profile, int chapter, int verse)
      : rng_(seed), profile_(profile), b_(chapter, verse) {}

  HybridGraph Sentence(std::vector<std::string> *notes) {
    if (profile_.nonprojective && Chance(profile_.nonprojective_rate)) {
      notes->push_back("# synth = nonprojective");
      Crossing();
      return b_.Finish();
    }
    if (profile_.residue && Chance(profile_.residue_rate)) {
      notes->push_back("# synth = residue");
      Span s = Nominal();
      b_.Phrase(s.root, s.start, s.end);
      return b_.Finish();
    }
    if (profile_.disconnected && Pick(3) == 0) Particle("wa", "REM");
    enum Kind {
      kVerbal, kNominal, kCopula, kCoord, kComplement, kAcc, kConditional,
      kElliptic
    };
    std::vector<Kind> kinds = {kVerbal, kNominal, kCopula,
                               kCoord, kComplement, kAcc};
    if (profile_.phrases) {
      kinds.insert(kinds.end(), {kConditional, kConditional});
    }
    if (profile_.ellipsis) kinds.push_back(kElliptic);
    switch (kinds[Pick(kinds.size())]) {
      case kVerbal: Verbal(); break;
      case kNominal: Nominal(); break;
      case kCopula: Copular(); break;
      case kCoord: Coordination(); break;
      case kComplement: Complement(); break;
      case kAcc: Accusative(); break;
      case kConditional: Conditional(); break;
      case kElliptic: Elliptic(); break;
    }
    return b_.Finish();
  }

 private:
  size_t Pick(size_t n) { return static_cast<size_t>(rng_() % n); }
  bool Chance(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }
  template <typename A>
  auto Choose(const A &a) {
    return a[Pick(a.size())];
  }

  bool pure() const {
    return !profile_.phrases && !profile_.ellipsis && !profile_.nonprojective &&
           !profile_.disconnected && !profile_.residue;
  }

  Phi RandomPhi() {
    static constexpr std::array<const char *, 3> kPersons = {"1", "2", "3"};
    static constexpr std::array<const char *, 3> kNumbers = {"S", "D", "P"};
    Phi phi{Choose(kPersons), Pick(2) ? "M" : "F", Choose(kNumbers)};
    if (phi.person == "1") phi.gender.clear();
    return phi;
  }

  int Particle(const std::string &form, const std::string &pos) {
    MorphSegment m;
    m.form = form;
    m.pos = pos;
    m.lemma = form;
    m.features[Feature::kSegType] = "stem";
    return b_.Word(std::move(m));
  }

  int Noun(const Entry &e, const std::string &c, bool definite,
           const std::string &pos = "N") {
    MorphSegment m;
    m.pos = pos;
    m.lemma = e.stem;
    m.form = (definite && pos == "N" ? "Al" : "") + std::string(e.stem) +
             CaseEnding(c, definite || pos == "PN");
    m.features[Feature::kSegType] = "stem";
    m.features[Feature::kGender] = e.gender;
    m.features[Feature::kNumber] = "S";
    m.features[Feature::kCase] = c;
    if (pos == "N") {
      m.features[Feature::kState] = definite ? "DEF" : "INDEF";
      if (definite) m.features[Feature::kDet] = "Al";
    }
    return b_.Word(std::move(m));
  }

  int Adjective(const std::string &gender, const std::string &c,
                bool definite) {
    MorphSegment m;
    const char *stem = Choose(kAdjectives);
    m.pos = "ADJ";
    m.lemma = stem;
    m.form = (definite ? "Al" : "") + std::string(stem) +
             (gender == "F" ? "ap" : "") + CaseEnding(c, definite);
    m.features[Feature::kSegType] = "stem";
    m.features[Feature::kGender] = gender;
    m.features[Feature::kNumber] = "S";
    m.features[Feature::kCase] = c;
    m.features[Feature::kState] = definite ? "DEF" : "INDEF";
    if (definite) m.features[Feature::kDet] = "Al";
    return b_.Word(std::move(m));
  }

  // Common noun with an optional agreeing adjective.
  int NounGroup(const std::string &c, bool definite) {
    const Entry e = Choose(kNouns);
    const int n = Noun(e, c, definite);
    if (Pick(3) == 0) b_.Link(Adjective(e.gender, c, definite), n, "adj");
    return n;
  }

  int Clitic(const Phi &phi) {
    MorphSegment m;
    m.form = CliticForm(phi);
    m.pos = "PRON";
    m.features[Feature::kSegType] = "suffix";
    m.features[Feature::kPerson] = phi.person;
    if (!phi.gender.empty()) m.features[Feature::kGender] = phi.gender;
    m.features[Feature::kNumber] = phi.number;
    return b_.Word(std::move(m), true);
  }

  int Verb(const std::string &stem, const Phi &phi, const std::string &aspect,
           const std::string &voice, const std::string &mood,
           const char *special = nullptr) {
    MorphSegment m;
    m.pos = "V";
    m.lemma = stem;
    if (aspect == "PERF") {
      m.form = (voice == "PASS" ? "u" : "") + stem + PerfectEnding(phi);
    } else {
      m.form = ImperfectPrefix(phi) + stem +
               (mood == "IND" ? "u" : mood == "SUBJ" ? "a" : "o");
      m.features[Feature::kMood] = mood;
    }
    m.features[Feature::kSegType] = "stem";
    m.features[Feature::kPerson] = phi.person;
    if (!phi.gender.empty()) m.features[Feature::kGender] = phi.gender;
    m.features[Feature::kNumber] = phi.number;
    m.features[Feature::kAspect] = aspect;
    m.features[Feature::kVoice] = voice;
    m.features[Feature::kForm] = "I";
    if (special) m.features[Feature::kSpecial] = special;
    return b_.Word(std::move(m));
  }

  // P + GEN noun or clitic, attached to `head`; a PP phrase when the
  // profile has phrases.
  Span Prepositional(int head, const std::string &rel) {
    const int start = b_.size();
    const int p = Particle(Choose(kPrepositions), "P");
    if (Pick(4) == 0) {
      b_.Link(Clitic(RandomPhi()), p, "gen");
    } else {
      b_.Link(NounGroup("GEN", Pick(2) == 0), p, "gen");
    }
    const int end = b_.size() - 1;
    b_.Link(p, head, rel, profile_.phrases);
    if (profile_.phrases) b_.Phrase(p, start, end);
    return {p, start, end};
  }

  // [NEG] V [dropped PRON] [clitic obj] [subj] [obj] [PP]
  Span Verbal(bool allow_object = true) {
    const int start = b_.size();
    int neg = -1;
    std::string aspect = Pick(2) ? "PERF" : "IMPF";
    std::string mood = "IND";
    if (Pick(5) == 0) {
      const bool lan = Pick(2);
      neg = Particle(lan ? "lan" : "lam", "NEG");
      aspect = "IMPF";
      mood = lan ? "SUBJ" : "JUS";
    }
    const std::string voice = Pick(5) == 0 ? "PASS" : "ACT";
    const bool explicit_subject = pure() || Pick(5) < 3;
    const bool name = explicit_subject && Pick(4) == 0;
    const Entry subject = name ? Choose(kNames) : Choose(kNouns);
    const Phi phi =
        explicit_subject ? Phi{"3", subject.gender, "S"} : RandomPhi();
    const int v = Verb(Choose(kVerbs), phi, aspect, voice, mood);
    if (neg >= 0) b_.Link(neg, v, "neg");
    if (!explicit_subject) {
      b_.Link(b_.Empty("PRON", DroppedPronounForm(b_.morph(v))), v, "subj");
    }
    bool has_object = false;
    if (voice == "ACT" && allow_object && Pick(4) == 0) {
      b_.Link(Clitic(RandomPhi()), v, "obj");
      has_object = true;
    }
    if (explicit_subject) {
      int s;
      if (name) {
        s = Noun(subject, "NOM", true, "PN");
      } else {
        const bool def = Pick(2);
        s = Noun(subject, "NOM", def);
        if (Pick(3) == 0) b_.Link(Adjective(subject.gender, "NOM", def), s, "adj");
      }
      b_.Link(s, v, voice == "PASS" ? "pass" : "subj");
    }
    if (voice == "ACT" && allow_object && !has_object && Pick(2) == 0) {
      b_.Link(NounGroup("ACC", Pick(2) == 0), v, "obj");
    }
    if (Pick(5) < 2) Prepositional(v, "link");
    return {v, start, b_.size() - 1};
  }

  // DEF NOM subject (or demonstrative) + INDEF NOM predicate.
  Span Nominal() {
    const int start = b_.size();
    int s;
    std::string gender;
    if (Pick(4) == 0) {
      gender = Pick(2) ? "M" : "F";
      MorphSegment m;
      m.form = gender == "M" ? "ha`*aA" : "ha`*ihi";
      m.pos = "DEM";
      m.lemma = "ha`*aA";
      m.features[Feature::kSegType] = "stem";
      m.features[Feature::kGender] = gender;
      m.features[Feature::kNumber] = "S";
      s = b_.Word(std::move(m));
    } else {
      const Entry e = Choose(kNouns);
      gender = e.gender;
      s = Noun(e, "NOM", true);
      if (Pick(3) == 0) b_.Link(Adjective(gender, "NOM", true), s, "adj");
    }
    const int p = Pick(2) ? Adjective(gender, "NOM", false)
                          : Noun(Choose(kNouns), "NOM", false);
    b_.Link(p, s, "pred");
    return {s, start, b_.size() - 1};
  }

  // Copula + NOM subjx + ACC predx.
  Span Copular() {
    const int start = b_.size();
    const Entry subject = Choose(kNouns);
    const char *stem = Choose(kCopulas);
    const int v = Verb(stem, Phi{"3", subject.gender, "S"}, "PERF", "ACT",
                       "IND", stem);
    const bool def = Pick(2);
    const int s = Noun(subject, "NOM", def);
    b_.Link(s, v, "subjx");
    const int p = Pick(2) ? Adjective(subject.gender, "ACC", false)
                          : Noun(Choose(kNouns), "ACC", false);
    b_.Link(p, v, "predx");
    return {v, start, b_.size() - 1};
  }

  Span Clause() {
    switch (Pick(3)) {
      case 0: return Nominal();
      case 1: return Copular();
      default: return Verbal();
    }
  }

  // Two clauses joined by wa; headless in disconnected profiles.
  void Coordination() {
    const Span a = Clause();
    const int wa = Particle("wa", "CONJ");
    const Span c = Clause();
    if (!profile_.disconnected) {
      b_.Link(wa, a.root, "conj");
      b_.Link(c.root, wa, "conj");
    }
  }

  // Verbal clause whose object is a >an complement clause.
  void Complement() {
    const Span main = Verbal(false);
    const int sub = Particle(">an", "SUB");
    b_.Link(sub, main.root, "obj");
    const Span inner = Verbal();
    b_.Link(inner.root, sub, "sub", profile_.phrases);
    if (profile_.phrases) b_.Phrase(inner.root, inner.start, inner.end);
  }

  // <in~a + ACC subjx + predicate (an NS phrase in phrase profiles).
  void Accusative() {
    const int acc = Particle("<in~a", "ACC");
    b_.Link(NounGroup("ACC", true), acc, "subjx");
    if (profile_.phrases) {
      const Span ns = Nominal();
      b_.Link(ns.root, acc, "predx", true);
      b_.Phrase(ns.root, ns.start, ns.end);
    } else {
      const Entry e = Choose(kNouns);
      b_.Link(Noun(e, "NOM", false), acc, "predx");
    }
  }

  // laA + NOM subjx + elided N head (predx) + PP link to the elided head.
  Span Elliptic() {
    const int start = b_.size();
    const int neg = Particle("laA", "NEG");
    b_.Link(Noun(Choose(kNouns), "NOM", false), neg, "subjx");
    const int ec = b_.Empty("N", kElidedForm);
    b_.Link(ec, neg, "predx");
    Prepositional(ec, "link");
    return {neg, start, b_.size() - 1};
  }

  // COND + VS (cond) + [fa] + result phrase (rslt).
  void Conditional() {
    const int cond = Particle(Pick(2) ? "man" : "<in", "COND");
    const Span c = Verbal();
    b_.Link(c.root, cond, "cond", true);
    b_.Phrase(c.root, c.start, c.end);
    if (profile_.disconnected) Particle("fa", "RSLT");
    Span r;
    const size_t choices = profile_.ellipsis ? 3 : 2;
    switch (Pick(choices)) {
      case 0: r = Verbal(); break;
      case 1: r = Nominal(); break;
      default: r = Elliptic(); break;
    }
    b_.Link(r.root, cond, "rslt", true);
    b_.Phrase(r.root, r.start, r.end);
  }

  // V NOM ACC ADJ(NOM): the adjective agrees with the subject, so its
  // arc crosses the object's.
  void Crossing() {
    const Entry subject = Choose(kNouns);
    const int v = Verb(Choose(kVerbs), Phi{"3", subject.gender, "S"}, "PERF",
                       "ACT", "IND");
    const int s = Noun(subject, "NOM", true);
    b_.Link(s, v, "subj");
    b_.Link(Noun(Choose(kNouns), "ACC", false), v, "obj");
    b_.Link(Adjective(subject.gender, "NOM", true), s, "adj");
  }

  std::mt19937_64 rng_;
  SynthProfile profile_;
  Builder b_;
};

}  // namespace

std::string SynthProfile::ToString() const {
  std::string out;
  auto add = [&](bool on, const char *name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(phrases, "+phrases");
  add(ellipsis, "+ellipsis");
  add(nonprojective, "+non-projective");
  add(disconnected, "+disconnected");
  add(residue, "+residue");
  return out.empty() ? "pure-dep" : out;
}

double SynthProfile::DeclaredConvertibility() const {
  return residue ? 1.0 - residue_rate : 1.0;
}

SynthProfile ParseSynthProfile(std::string_view text) {
  SynthProfile p;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    if (part == "pure-dep" || part == "pure") {
    } else if (part == "phrases") {
      p.phrases = true;
    } else if (part == "ellipsis") {
      p.ellipsis = true;
    } else if (part == "non-projective" || part == "nonprojective") {
      p.nonprojective = true;
    } else if (part == "disconnected") {
      p.disconnected = true;
    } else if (part == "residue") {
      p.residue = true;
    } else {
      throw Error("unknown synth profile component '" + std::string(part) +
                  "'");
    }
    pos = comma + 1;
  }
  return p;
}

TreebankDocument Generate(uint64_t seed, int count,
                          const SynthProfile &profile) {
  if (count < 1) throw Error("synth count must be at least 1");
  TreebankDocument doc;
  for (int i = 0; i < count; ++i) {
    std::vector<std::string> notes = {"# sent_id = synth-" +
                                      std::to_string(seed) + "-" +
                                      std::to_string(i + 1)};
    Grammar grammar(SplitMix(seed ^ SplitMix(static_cast<uint64_t>(i))),
                    profile, 1 + i / 100, 1 + i % 100);
    HybridGraph g = grammar.Sentence(&notes);
    doc.Add(std::move(g), std::move(notes));
  }
  return doc;
}

}  // namespace hybrid
