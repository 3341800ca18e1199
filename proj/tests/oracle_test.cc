#include "hybrid/oracle.h"

#include <deque>
#include <set>

#include <gtest/gtest.h>

#include "hybrid/evaluation.h"
#include "hybrid/synth.h"
#include "hybrid/treebank.h"
#include "test_util.h"

namespace hybrid {
namespace {

using testing::EnglishTags;
using testing::LoadGraph;
using testing::LoadTransitions;
using testing::Seg;

NodeRef T(int i) { return NodeRef::Terminal(i); }

TEST(OracleTest, EnglishSequenceExactly) {
  HybridGraph gold = LoadGraph("oracle/english.conll", EnglishTags());
  OracleOutcome o = OracleSequence(gold, EnglishTags());
  EXPECT_TRUE(o.reachable);
  EXPECT_FALSE(o.budget_exhausted);
  EXPECT_EQ(o.sequence, LoadTransitions("oracle/english.transitions"));
  EXPECT_TRUE(o.replayed == gold);
  EXPECT_TRUE(o.uncovered_edges.empty());
}

TEST(OracleTest, VerseSequenceExactly) {
  HybridGraph gold = LoadGraph("oracle/verse_7_186.conll");
  OracleOutcome o = OracleSequence(gold);
  EXPECT_TRUE(o.reachable);
  EXPECT_EQ(o.sequence, LoadTransitions("oracle/verse_7_186.transitions"));
  EXPECT_TRUE(o.replayed == gold);
}

TEST(OracleNextTest, DeterminerAfterFourShifts) {
  HybridGraph gold = LoadGraph("oracle/english.conll", EnglishTags());
  Configuration c = Configuration::Initial(gold.Segments());
  for (int i = 0; i < 4; ++i) c = Apply(c, Transition::Shift());
  EXPECT_EQ(OracleNext(c, gold, EnglishTags()), Transition::Left("det"));
  EXPECT_EQ(OracleNext(Configuration::Initial(gold.Segments()), gold,
                       EnglishTags()),
            Transition::Shift());
}

TEST(OracleNextTest, PendingNominalSentenceIsBuiltOnceTheQueueDrains) {
  HybridGraph gold = LoadGraph("oracle/verse_7_186.conll");
  const auto seq = LoadTransitions("oracle/verse_7_186.transitions");
  Configuration c = Configuration::Initial(gold.Segments());
  size_t i = 0;
  while (seq[i] != Transition::Phrase("NS")) c = Apply(c, seq[i++]);
  EXPECT_TRUE(c.queue().empty());
  EXPECT_EQ(OracleNext(c, gold), Transition::Phrase("NS"));
}

TEST(OracleNextTest, IsolatedConjunctionIsReduced) {
  HybridGraph gold;
  gold.AddSegment(Seg("qaAla", "V"));
  gold.AddSegment(Seg("wa", "CONJ"));
  Configuration c = Configuration::Initial(gold.Segments());
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Shift());
  EXPECT_EQ(OracleNext(c, gold), Transition::Reduce(1));
}

TEST(OracleTest, CapitalizedPronounFormIsUnreachable) {
  HybridGraph gold = LoadGraph("io/qaala.conll");
  OracleOutcome o = OracleSequence(gold);
  EXPECT_FALSE(o.reachable);
  // The lowercase form matches the built-in pronoun table.
  HybridGraph fixed;
  for (int i = 0; i < gold.num_terminals(); ++i) {
    Terminal t = gold.terminal(i);
    if (t.empty) t.morph.form = "huwa";
    fixed.AddTerminal(t);
  }
  for (const Phrase &p : gold.phrases()) fixed.AddPhrase(p.start, p.end, p.tag);
  for (const Edge &e : gold.edges()) fixed.AddEdge(e.dependent, e.head, e.label);
  OracleOutcome ok = OracleSequence(fixed);
  EXPECT_TRUE(ok.reachable);
  EXPECT_TRUE(ok.replayed == fixed);
}

// w1 -obj-> w3, w2 -subj-> w4: the two arcs cross.
HybridGraph Crossing() {
  HybridGraph g;
  g.AddSegment(Seg("a", "N"));
  g.AddSegment(Seg("b", "N"));
  g.AddSegment(Seg("c", "V"));
  g.AddSegment(Seg("d", "V"));
  g.AddEdge(T(0), T(2), Label("obj"));
  g.AddEdge(T(1), T(3), Label("subj"));
  return g;
}

std::string Key(const Configuration &c) {
  std::string k = ToConll(c.graph()) + "|";
  for (int q : c.queue()) k += std::to_string(q) + ",";
  k += "|";
  for (NodeRef n : c.stack()) {
    k += (n.is_terminal() ? "t" : "p") + std::to_string(n.index) + ",";
  }
  return k;
}

TEST(OracleTest, CrossingGraphIsUnreachable) {
  HybridGraph gold = Crossing();
  OracleOutcome o = OracleSequence(gold);
  EXPECT_FALSE(o.reachable);
  EXPECT_FALSE(o.uncovered_edges.empty());

  // Exhaustive search over the pure transition set within the budget.
  std::vector<Transition> moves = {
      Transition::Shift(),         Transition::Reduce(1),
      Transition::Reduce(2),       Transition::Left("obj"),
      Transition::Left("subj"),    Transition::Right("obj"),
      Transition::Right("subj")};
  const int budget = StepBudget(4);
  std::deque<std::pair<Configuration, int>> frontier;
  std::set<std::string> seen;
  frontier.push_back({Configuration::Initial(gold.Segments()), 0});
  bool found = false;
  while (!frontier.empty() && !found) {
    auto [c, depth] = frontier.front();
    frontier.pop_front();
    if (c.IsTerminal()) {
      found = c.graph() == gold;
      continue;
    }
    if (depth == budget) continue;
    for (const Transition &t : moves) {
      if (!IsLegal(c, t, TransitionSet::kPure)) continue;
      Configuration next = Apply(c, t, TransitionSet::kPure);
      if (seen.insert(Key(next)).second) frontier.push_back({next, depth + 1});
    }
  }
  EXPECT_FALSE(found);
  EXPECT_GT(seen.size(), 10u);
}

TEST(OracleTest, EverySynthProjectiveGraphIsReproduced) {
  for (const char *profile :
       {"pure-dep", "+phrases", "+ellipsis", "+phrases,+ellipsis,+disconnected"}) {
    TreebankDocument doc = Generate(21, 60, ParseSynthProfile(profile));
    for (size_t i = 0; i < doc.size(); ++i) {
      OracleOutcome o = OracleSequence(doc.graphs[i]);
      EXPECT_TRUE(o.reachable) << profile << " #" << i;
      EXPECT_TRUE(o.replayed == doc.graphs[i]) << profile << " #" << i;
      EXPECT_LE(static_cast<int>(o.sequence.size()),
                StepBudget(doc.graphs[i].num_terminals()));
    }
  }
}

TEST(OracleTest, BudgetFormula) {
  EXPECT_EQ(StepBudget(1), 24);
  EXPECT_EQ(StepBudget(64), 528);
}

}  // namespace
}  // namespace hybrid
