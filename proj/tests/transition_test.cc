#include "hybrid/transition.h"

#include <gtest/gtest.h>

#include "hybrid/error.h"
#include "hybrid/evaluation.h"
#include "test_util.h"

namespace hybrid {
namespace {

using testing::EnglishTags;
using testing::LoadGraph;
using testing::LoadTransitions;
using testing::Seg;

NodeRef T(int i) { return NodeRef::Terminal(i); }

Configuration Prefix(const HybridGraph &gold, const std::vector<Transition> &seq,
                  size_t steps, const Tagset &tags = Tagset::Default()) {
  Configuration c = Configuration::Initial(gold.Segments());
  for (size_t i = 0; i < steps; ++i) {
    c = Apply(c, seq[i], TransitionSet::kFull, tags);
  }
  return c;
}

TEST(TransitionTest, SerializationRoundTrip) {
  for (const char *text : {"SHIFT", "REDUCE(1)", "REDUCE(2)", "LEFT(det)",
                           "RIGHT(+link|N|circ)", "EMPTY(N)", "PRON",
                           "PHRASE(VS)"}) {
    EXPECT_EQ(Transition::Parse(text).ToString(), text);
  }
  EXPECT_THROW(Transition::Parse("JUMP"), ParseError);
  EXPECT_THROW(Transition::Parse("REDUCE(3)"), ParseError);
}

TEST(ConfigurationTest, InitialQueueHoldsEverySegment) {
  HybridGraph english = LoadGraph("oracle/english.conll", EnglishTags());
  Configuration c = Configuration::Initial(english.Segments());
  EXPECT_EQ(c.queue(), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(c.stack().empty());
  EXPECT_FALSE(c.IsTerminal());

  HybridGraph verse = LoadGraph("oracle/verse_7_186.conll");
  Configuration v = Configuration::Initial(verse.Segments());
  EXPECT_EQ(v.queue().size(), 8u);
  EXPECT_EQ(v.graph().num_empty(), 0);

  EXPECT_EQ(Configuration::Initial({Seg("a", "N")}).queue().size(), 1u);
  EXPECT_THROW(Configuration::Initial({}), Error);
}

TEST(ConfigurationTest, AccessorsAreOneBased) {
  Configuration c = Configuration::Initial({Seg("a", "N"), Seg("b", "V")});
  EXPECT_EQ(c.Q(1), 0);
  EXPECT_FALSE(c.S(1).has_value());
  c = Apply(c, Transition::Shift());
  EXPECT_EQ(c.S(1), T(0));
  EXPECT_EQ(c.Q(1), 1);
  EXPECT_FALSE(c.Q(2).has_value());
}

TEST(LegalityTest, PaperRows) {
  HybridGraph english = LoadGraph("oracle/english.conll", EnglishTags());
  const auto seq = LoadTransitions("oracle/english.transitions");
  Configuration initial = Configuration::Initial(english.Segments());
  EXPECT_FALSE(IsLegal(initial, Transition::Left("subj")));
  EXPECT_FALSE(IsLegal(initial, Transition::Reduce(1)));
  EXPECT_TRUE(IsLegal(initial, Transition::Shift()));

  Configuration four = Prefix(english, seq, 4, EnglishTags());
  EXPECT_TRUE(IsLegal(four, Transition::Left("det"), TransitionSet::kFull,
                      EnglishTags()));
  // Unknown relation under the default vocabulary.
  EXPECT_FALSE(IsLegal(four, Transition::Left("det")));
  // s1 is a noun.
  EXPECT_FALSE(IsLegal(four, Transition::Pronoun()));
}

TEST(LegalityTest, PureSetExcludesHybridTransitions) {
  Configuration c = Configuration::Initial({Seg("a", "V"), Seg("b", "N")});
  c = Apply(c, Transition::Shift());
  EXPECT_TRUE(IsLegal(c, Transition::Empty("N")));
  EXPECT_FALSE(IsLegal(c, Transition::Empty("N"), TransitionSet::kPure));
  EXPECT_FALSE(IsLegal(c, Transition::Pronoun(), TransitionSet::kPure));
  EXPECT_FALSE(IsLegal(c, Transition::Phrase("S"), TransitionSet::kPure));
  EXPECT_TRUE(IsLegal(c, Transition::Shift(), TransitionSet::kPure));
}

TEST(LegalityTest, ArcsCannotReheadOrCycle) {
  Configuration c = Configuration::Initial({Seg("a", "N"), Seg("b", "V")});
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Left("subj"));
  EXPECT_FALSE(IsLegal(c, Transition::Left("obj")));
  EXPECT_FALSE(IsLegal(c, Transition::Right("obj")));
}

TEST(ApplyTest, IllegalTransitionThrowsAndLeavesInputUnchanged) {
  Configuration c = Configuration::Initial({Seg("a", "N")});
  EXPECT_THROW(Apply(c, Transition::Reduce(1)), IllegalTransitionError);
  EXPECT_EQ(c.queue().size(), 1u);
}

TEST(ApplyTest, EnglishSequenceBuildsTheGoldGraph) {
  HybridGraph gold = LoadGraph("oracle/english.conll", EnglishTags());
  const auto seq = LoadTransitions("oracle/english.transitions");
  ASSERT_EQ(seq.size(), 14u);
  Configuration c =
      Replay(gold.Segments(), seq, TransitionSet::kFull, EnglishTags());
  EXPECT_TRUE(c.IsTerminal());
  EXPECT_TRUE(c.graph() == gold);
}

TEST(ApplyTest, VerseSequenceBuildsTheGoldGraph) {
  HybridGraph gold = LoadGraph("oracle/verse_7_186.conll");
  const auto seq = LoadTransitions("oracle/verse_7_186.transitions");
  ASSERT_EQ(seq.size(), 31u);
  Configuration c = Replay(gold.Segments(), seq);
  EXPECT_TRUE(c.IsTerminal());
  EXPECT_TRUE(c.graph() == gold);
  EXPECT_EQ(Elas(gold, c.graph()).f1(), (Ratio{1, 1}));
}

TEST(ApplyTest, PhraseCoversTheSubgraphAndSitsAboveItsRoot) {
  HybridGraph gold = LoadGraph("oracle/verse_7_186.conll");
  const auto seq = LoadTransitions("oracle/verse_7_186.transitions");
  ASSERT_EQ(seq[5], Transition::Phrase("VS"));
  Configuration c = Prefix(gold, seq, 6);
  ASSERT_EQ(c.graph().num_phrases(), 1);
  EXPECT_EQ(c.graph().phrase(0), (Phrase{1, 2, "VS"}));
  EXPECT_EQ(c.S(1), NodeRef::Phrase(0));
  EXPECT_EQ(c.S(2), T(1));
}

TEST(ApplyTest, EmptyPushesAboveTheAnchor) {
  HybridGraph gold = LoadGraph("oracle/verse_7_186.conll");
  const auto seq = LoadTransitions("oracle/verse_7_186.transitions");
  ASSERT_EQ(seq[14], Transition::Empty("N"));
  Configuration c = Prefix(gold, seq, 15);
  EXPECT_EQ(c.S(1), T(6));
  EXPECT_EQ(c.S(2), T(5));
  EXPECT_TRUE(c.graph().terminal(6).empty);
  EXPECT_EQ(c.graph().terminal(6).morph.form, "*");
  // Queue indices past the insertion point shift by one.
  EXPECT_EQ(c.Q(1), 7);
}

TEST(ApplyTest, PronounRestoresTheSubject) {
  MorphSegment verb = Seg("qaAla", "V");
  verb.features[Feature::kPerson] = "3";
  verb.features[Feature::kGender] = "M";
  verb.features[Feature::kNumber] = "S";
  verb.features[Feature::kAspect] = "PERF";
  Configuration c = Configuration::Initial({verb});
  c = Apply(c, Transition::Shift());
  ASSERT_TRUE(IsLegal(c, Transition::Pronoun()));
  c = Apply(c, Transition::Pronoun());
  const HybridGraph &g = c.graph();
  ASSERT_EQ(g.num_terminals(), 2);
  EXPECT_TRUE(g.terminal(1).empty);
  EXPECT_EQ(g.terminal(1).morph.pos, "PRON");
  EXPECT_EQ(g.terminal(1).morph.form, "huwa");
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{T(1), T(0), Label("subj")}));
  // A second pronoun is never legal.
  EXPECT_FALSE(IsLegal(c, Transition::Pronoun()));
}

TEST(ApplyTest, TerminalOnlyWhenBothEmpty) {
  Configuration c = Configuration::Initial({Seg("a", "N")});
  EXPECT_FALSE(IsTerminal(c));
  c = Apply(c, Transition::Shift());
  EXPECT_FALSE(IsTerminal(c));
  c = Apply(c, Transition::Reduce(1));
  EXPECT_TRUE(IsTerminal(c));
}

TEST(SubjectRelationTest, IncludesPassive) {
  EXPECT_TRUE(IsSubjectRelation("subj"));
  EXPECT_TRUE(IsSubjectRelation("pass"));
  EXPECT_FALSE(IsSubjectRelation("obj"));
}

}  // namespace
}  // namespace hybrid
