#include <sstream>

#include <gtest/gtest.h>

#include "hybrid/error.h"
#include "hybrid/feature_notation.h"
#include "hybrid/location.h"
#include "hybrid/morphology.h"
#include "hybrid/synth.h"
#include "hybrid/tagset.h"
#include "hybrid/treebank.h"
#include "test_util.h"

namespace hybrid {
namespace {

using testing::FixturePath;
using testing::LoadGraph;
using testing::ReadText;
using testing::Seg;

TEST(LocationTest, VerseOnly) {
  Location l = ParseLocation("(6:76)");
  EXPECT_EQ(l.chapter, 6);
  EXPECT_EQ(l.verse, 76);
  EXPECT_FALSE(l.token.has_value());
  EXPECT_EQ(l.ToString(), "(6:76)");
}

TEST(LocationTest, TokenAndSegment) {
  Location a = ParseLocation("(4:68:1)");
  EXPECT_EQ(a.chapter, 4);
  EXPECT_EQ(a.verse, 68);
  EXPECT_EQ(a.token, 1);
  EXPECT_FALSE(a.segment.has_value());
  Location b = ParseLocation("(1:1:1)");
  EXPECT_EQ(b.Token(), 1);
  EXPECT_EQ(b.Segment(), 1);
  EXPECT_EQ(ParseLocation("(7:186:6:2)").ToString(), "(7:186:6:2)");
}

TEST(LocationTest, Malformed) {
  for (const char *bad : {"", "6:76", "(6)", "(a:b)", "(1:2:3:4:5)", "(0:1)"}) {
    EXPECT_THROW(ParseLocation(bad), ParseError) << bad;
  }
}

TEST(FeatsTest, EncodeDecodeRoundTrip) {
  MorphSegment s = Seg("a|b", "N");
  s.location = ParseLocation("(2:3:4:1)");
  s.features[Feature::kCase] = "GEN";
  s.features[Feature::kSegType] = "stem";
  s.lemma = "x=y";
  const std::string text = EncodeFeats(s);
  EXPECT_EQ(text, "Loc=(2:3:4:1)|SegType=stem|Case=GEN|Lemma=x%3Dy");
  MorphSegment back = Seg("a|b", "N");
  DecodeFeats(text, &back);
  EXPECT_EQ(back, s);
  EXPECT_EQ(EncodeFeats(Seg("x", "N")), "_");
}

TEST(FeatsTest, RejectsBadValues) {
  MorphSegment s;
  EXPECT_THROW(DecodeFeats("Case=XYZ", &s), ParseError);
  EXPECT_THROW(DecodeFeats("Bogus=1", &s), ParseError);
}

TEST(FeatureNotationTest, PrefixedPrepositionWithParticiple) {
  auto segs = ParseFeatureLine(
      "[bi+ POS:N ACT PCPL (IV) LEM:muSorix ROOT:Srx M GEN PRON:2MP]",
      ParseLocation("(6:99:1)"));
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[0].pos, "P");
  EXPECT_EQ(segs[0].form, "bi");
  EXPECT_EQ(segs[0].GetOr(Feature::kSegType), "prefix");
  const MorphSegment &stem = segs[1];
  EXPECT_EQ(stem.pos, "N");
  EXPECT_EQ(stem.GetOr(Feature::kDerivation), "ACT_PCPL");
  EXPECT_EQ(stem.GetOr(Feature::kForm), "IV");
  EXPECT_EQ(stem.lemma, "muSorix");
  EXPECT_EQ(stem.root, "Srx");
  EXPECT_EQ(stem.GetOr(Feature::kGender), "M");
  EXPECT_EQ(stem.GetOr(Feature::kCase), "GEN");
  EXPECT_EQ(segs[2].pos, "PRON");
  EXPECT_EQ(segs[2].GetOr(Feature::kPerson), "2");
  EXPECT_EQ(segs[2].GetOr(Feature::kGender), "M");
  EXPECT_EQ(segs[2].GetOr(Feature::kNumber), "P");
  EXPECT_EQ(segs[2].GetOr(Feature::kPronType), "object");
  for (int i = 0; i < 3; ++i) EXPECT_EQ(segs[i].location->segment, i + 1);
}

TEST(FeatureNotationTest, TwoPrefixesVerbAndSuffix) {
  auto segs =
      ParseFeatureLine("[w:CONJ+ l:EMPH+ POS:V PERF LEM:hadaY ROOT:hdy 1P PRON:3MP]",
                       ParseLocation("(4:68:1)"));
  ASSERT_EQ(segs.size(), 4u);
  EXPECT_EQ(segs[0].pos, "CONJ");
  EXPECT_EQ(segs[0].form, "w");
  EXPECT_EQ(segs[1].pos, "EMPH");
  EXPECT_EQ(segs[1].form, "l");
  EXPECT_EQ(segs[2].pos, "V");
  EXPECT_EQ(segs[2].GetOr(Feature::kAspect), "PERF");
  EXPECT_EQ(segs[2].GetOr(Feature::kPerson), "1");
  EXPECT_EQ(segs[2].GetOr(Feature::kNumber), "P");
  EXPECT_EQ(segs[2].lemma, "hadaY");
  EXPECT_EQ(segs[3].pos, "PRON");
  EXPECT_EQ(segs[3].GetOr(Feature::kPerson), "3");
  EXPECT_EQ(segs[3].GetOr(Feature::kNumber), "P");
  EXPECT_EQ(segs[3].location->ToString(), "(4:68:1:4)");
}

TEST(FeatureNotationTest, BarePreposition) {
  auto segs = ParseFeatureLine("[POS:P LEM:fiY]", ParseLocation("(74:42:3)"));
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_EQ(segs[0].pos, "P");
  EXPECT_EQ(segs[0].GetOr(Feature::kSegType), "stem");
  EXPECT_EQ(segs[0].lemma, "fiY");
}

TEST(FeatureNotationTest, WriteIsInverse) {
  for (const char *line :
       {"[bi+ POS:N ACT PCPL (IV) LEM:muSorix ROOT:Srx M GEN PRON:2MP]",
        "[w:CONJ+ l:EMPH+ POS:V PERF LEM:hadaY ROOT:hdy 1P PRON:3MP]",
        "[POS:P LEM:fiY]"}) {
    auto segs = ParseFeatureLine(line, ParseLocation("(1:1:1)"));
    EXPECT_EQ(ParseFeatureLine(WriteFeatureLine(segs), ParseLocation("(1:1:1)")),
              segs)
        << line;
  }
}

TEST(FeatureNotationTest, ErrorsNameTagAndOffset) {
  try {
    ParseFeatureLine("[POS:ZZ]", ParseLocation("(1:1:1)"));
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("POS:ZZ"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos);
  }
  EXPECT_THROW(ParseFeatureLine("[GEN POS:N]", ParseLocation("(1:1:1)")),
               ParseError);
  EXPECT_THROW(ParseFeatureLine("POS:N", ParseLocation("(1:1:1)")), ParseError);
}

TEST(FeatureNotationTest, FileGroupsTokensByVerse) {
  std::istringstream in(
      "# comment\n"
      "(6:76:7)\t[POS:V PERF LEM:qaAla ROOT:qwl 3MS]\n"
      "(6:76:8)\t[POS:DEM LEM:ha`*aA MS]\n"
      "(6:77:1)\t[POS:P LEM:fiY]\n");
  auto sentences = ReadFeatureFile(in);
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0].segments.size(), 2u);
  EXPECT_EQ(sentences[0].verse.ToString(), "(6:76)");
  EXPECT_EQ(sentences[1].segments.size(), 1u);
}

TEST(TreebankTest, ReadsTheExtendedFormat) {
  HybridGraph g = LoadGraph("io/qaala.conll");
  ASSERT_EQ(g.num_terminals(), 5);
  EXPECT_EQ(g.num_empty(), 1);
  EXPECT_EQ(g.num_segments(), 4);
  EXPECT_TRUE(g.terminal(1).empty);
  EXPECT_EQ(g.terminal(1).morph.form, "Huwa");
  EXPECT_EQ(g.terminal(1).morph.pos, "PRON");
  ASSERT_EQ(g.num_phrases(), 1);
  EXPECT_EQ(g.phrase(0), (Phrase{2, 4, "NS"}));
  EXPECT_EQ(g.edges().size(), 4u);
  EXPECT_TRUE(g.HasEdgeBetween(NodeRef::Phrase(0), NodeRef::Terminal(0)));
  auto e = g.HeadEdge(NodeRef::Phrase(0));
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(g.edges()[*e].label.base, "obj");
  EXPECT_EQ(g.edges()[*g.HeadEdge(NodeRef::Terminal(4))].label.base, "poss");
}

TEST(TreebankTest, WriteReproducesRowsByteForByte) {
  for (const char *f : {"io/qaala.conll", "oracle/verse_7_186.conll",
                        "conversion/elided_attachment.conll",
                        "conversion/elided_attachment.pure.conll",
                        "conversion/dropped_pronoun.conll"}) {
    const std::string text = ReadText(FixturePath(f));
    std::istringstream in(text);
    std::ostringstream out;
    WriteTreebank(ReadTreebank(in), out);
    EXPECT_EQ(out.str(), text) << f;
  }
}

TEST(TreebankTest, NoEdgesMeansUnderscores) {
  HybridGraph g;
  g.AddSegment(Seg("a", "N"));
  g.AddSegment(Seg("b", "N"));
  EXPECT_EQ(ToConll(g), "1\tT\t_\ta\tN\t_\t_\t_\n2\tT\t_\tb\tN\t_\t_\t_\n");
}

TEST(TreebankTest, EmptyStream) {
  std::istringstream in("");
  EXPECT_EQ(ReadTreebank(in).size(), 0u);
}

TEST(TreebankTest, MetadataComments) {
  auto doc = ReadTreebankFile(FixturePath("io/qaala.conll"));
  EXPECT_EQ(doc.Metadata(0, "sent_id"), "6:76");
  EXPECT_EQ(doc.Metadata(0, "oracle"), "unreachable");
  EXPECT_FALSE(doc.Metadata(0, "missing").has_value());
}

TEST(TreebankTest, ErrorsCarryLineNumbers) {
  struct Case {
    const char *text;
    int line;
  };
  for (const Case &c : {
           Case{"1\tT\t_\ta\tN\t_\t_\t_\n2\tT\t_\tb\tN\t_\n", 2},
           Case{"1\tT\t_\ta\tN\t_\t7\tsubj\n", 1},
           Case{"1\tT\t_\ta\tN\t_\t_\t_\n2\tP\t1-5\t_\tS\t_\t_\t_\n", 2},
           Case{"# x\n1\tQ\t_\ta\tN\t_\t_\t_\n", 2},
       }) {
    std::istringstream in(c.text);
    try {
      ReadTreebank(in);
      ADD_FAILURE() << c.text;
    } catch (const ParseError &e) {
      EXPECT_EQ(e.line(), c.line) << c.text << e.what();
    }
  }
}

TEST(TreebankTest, SynthCorporaRoundTripByteIdentically) {
  for (const char *profile :
       {"pure-dep", "+phrases,+ellipsis", "+non-projective,+disconnected"}) {
    std::ostringstream first;
    WriteTreebank(Generate(3, 50, ParseSynthProfile(profile)), first);
    std::istringstream in(first.str());
    std::ostringstream second;
    WriteTreebank(ReadTreebank(in), second);
    EXPECT_EQ(first.str(), second.str()) << profile;
  }
}

TEST(TagsetTest, DefaultVocabularies) {
  const Tagset &t = Tagset::Default();
  EXPECT_EQ(t.pos_tags().size(), 44u);
  EXPECT_EQ(t.relations().size(), 45u);
  EXPECT_EQ(t.phrase_tags().size(), 6u);
  EXPECT_TRUE(t.IsCopula("kaAn"));
  EXPECT_FALSE(t.IsRelation("det"));
  EXPECT_THROW(t.CheckPos("XX"), ValidationError);
}

TEST(TagsetTest, LoadedFileExtendsRelations) {
  Tagset t = Tagset::Load(FixturePath("oracle/english.tagset"));
  EXPECT_TRUE(t.IsRelation("det"));
  EXPECT_EQ(t.relations().size(), 46u);
}

}  // namespace
}  // namespace hybrid
