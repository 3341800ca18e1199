#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "hybrid/classifier.h"
#include "hybrid/engine.h"
#include "hybrid/error.h"
#include "hybrid/features.h"
#include "hybrid/model.h"
#include "hybrid/oracle.h"
#include "hybrid/synth.h"
#include "test_util.h"

namespace hybrid {
namespace {

using testing::EnglishTags;
using testing::FixturePath;
using testing::LoadGraph;
using testing::Seg;

bool Has(const FeatureVector &v, const std::string &p) {
  return std::binary_search(v.begin(), v.end(), p);
}

TEST(FeatureSetTest, NamesRoundTrip) {
  for (FeatureSet s : {FeatureSet::kPos, FeatureSet::kMorph6, FeatureSet::kMorph9,
                       FeatureSet::kLemma, FeatureSet::kPhi}) {
    EXPECT_EQ(ParseFeatureSet(FeatureSetName(s)), s);
  }
  EXPECT_EQ(ParseFeatureSet("LEMMA"), FeatureSet::kLemma);
  EXPECT_FALSE(ParseFeatureSet("words").has_value());
}

TEST(FeaturesTest, InitialConfiguration) {
  Configuration c = Configuration::Initial({Seg("kitaAb", "N")});
  FeatureVector v = ExtractFeatures(c, FeatureSet::kPos);
  EXPECT_EQ(v, (FeatureVector{"q1:pos=N", "s1:absent", "s2:absent",
                              "s3:absent"}));
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  EXPECT_EQ(PartitionKey(c), kEmptyStackPartition);
}

TEST(FeaturesTest, ExistingSubjectIsVisible) {
  Configuration c = Configuration::Initial({Seg("zayd", "PN"), Seg("qaAla", "V")});
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Left("subj"));
  FeatureVector v = ExtractFeatures(c, FeatureSet::kPos);
  EXPECT_TRUE(Has(v, "s1:deprel(subj)"));
  EXPECT_TRUE(Has(v, "edge(s1,s2)"));
  EXPECT_TRUE(Has(v, "s1:isroot"));
  EXPECT_EQ(PartitionKey(c), "V");
}

TEST(FeaturesTest, PhraseOnTheStack) {
  HybridGraph gold = LoadGraph("oracle/verse_7_186.conll");
  const auto seq = testing::LoadTransitions("oracle/verse_7_186.transitions");
  Configuration c = Configuration::Initial(gold.Segments());
  for (int i = 0; i < 6; ++i) c = Apply(c, seq[i]);
  EXPECT_EQ(PartitionKey(c), "phrase:VS");
  EXPECT_TRUE(Has(ExtractFeatures(c, FeatureSet::kPos), "s1:phrase=VS"));
}

TEST(FeaturesTest, RicherSetsAreSupersets) {
  TreebankDocument doc = Generate(8, 20, ParseSynthProfile("+phrases,+ellipsis"));
  const FeatureSet order[] = {FeatureSet::kPos, FeatureSet::kMorph6,
                              FeatureSet::kMorph9, FeatureSet::kLemma,
                              FeatureSet::kPhi};
  int strict = 0;
  for (const HybridGraph &g : doc.graphs) {
    OracleOutcome o = OracleSequence(g);
    Configuration c = Configuration::Initial(g.Segments());
    for (const Transition &t : o.sequence) {
      for (int k = 0; k + 1 < 5; ++k) {
        FeatureVector lo = ExtractFeatures(c, order[k]);
        FeatureVector hi = ExtractFeatures(c, order[k + 1]);
        EXPECT_TRUE(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
      }
      FeatureVector m6 = ExtractFeatures(c, FeatureSet::kMorph6);
      FeatureVector phi = ExtractFeatures(c, FeatureSet::kPhi);
      if (phi.size() > m6.size()) ++strict;
      c = Apply(c, t);
    }
  }
  EXPECT_GT(strict, 0);
}

TEST(PerceptronTest, SeparatesLinearlySeparableData) {
  std::vector<Example> train;
  for (int i = 0; i < 20; ++i) {
    train.push_back({{"a", "x" + std::to_string(i % 3)}, 0});
    train.push_back({{"b", "x" + std::to_string(i % 3)}, 1});
    train.push_back({{"c"}, 2});
  }
  AveragedPerceptron p;
  p.Fit(train);
  EXPECT_EQ(p.num_labels(), 3);
  auto best = [&](const FeatureVector &f) {
    auto s = p.Score(f);
    return std::max_element(s.begin(), s.end(),
                            [](auto &x, auto &y) { return x.second < y.second; })
        ->first;
  };
  EXPECT_EQ(best({"a", "x1"}), 0);
  EXPECT_EQ(best({"b", "x2"}), 1);
  EXPECT_EQ(best({"c"}), 2);
  EXPECT_EQ(best({"unseen", "c"}), 2);
}

TEST(PerceptronTest, SaveLoadPreservesScores) {
  std::vector<Example> train = {{{"a"}, 0}, {{"b"}, 3}, {{"a", "b"}, 3}};
  AveragedPerceptron p;
  p.Fit(train);
  std::stringstream s;
  p.Save(s);
  auto q = AveragedPerceptron::Load(s);
  EXPECT_EQ(q->Score({"a"}), p.Score({"a"}));
  EXPECT_EQ(q->Score({"a", "b"}), p.Score({"a", "b"}));
}

TreebankDocument EnglishCorpus() {
  return ReadTreebankFile(FixturePath("oracle/english.conll"), EnglishTags());
}

TEST(TrainTest, MemorizesASingleSentence) {
  for (FeatureSet set : {FeatureSet::kPos, FeatureSet::kLemma, FeatureSet::kPhi}) {
    TrainingOptions o;
    o.features = set;
    TreebankDocument doc = EnglishCorpus();
    Model m = Train(doc, o, EnglishTags());
    ParseResult r = Parse(m, doc.graphs[0].Segments());
    EXPECT_TRUE(r.graph == doc.graphs[0]) << FeatureSetName(set);
    EXPECT_EQ(m.Predict(Configuration::Initial(doc.graphs[0].Segments())),
              Transition::Shift());
  }
}

TEST(TrainTest, SameSeedGivesIdenticalModels) {
  TreebankDocument doc = Generate(2, 40, ParseSynthProfile("+phrases,+ellipsis"));
  TrainingOptions o;
  o.epochs = 3;
  o.threads = 2;
  std::ostringstream a, b;
  Train(doc, o).Save(a);
  Train(doc, o).Save(b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(TrainTest, EmptyCorpusIsAnError) {
  TreebankDocument empty;
  EXPECT_THROW(Train(empty, {}), TrainingError);
}

TEST(TrainTest, UnreachableGraphsAreExcludedByDefault) {
  TreebankDocument doc = Generate(9, 60, ParseSynthProfile("+non-projective"));
  int injected = 0;
  for (size_t i = 0; i < doc.size(); ++i) {
    if (doc.Metadata(i, "synth") == std::string("nonprojective")) ++injected;
  }
  ASSERT_GT(injected, 0);
  TrainingOptions o;
  o.epochs = 1;
  Model m = Train(doc, o);
  EXPECT_EQ(m.stats().excluded_unreachable, injected);
  EXPECT_EQ(m.stats().graphs_used, 60 - injected);
  o.include_unreachable = true;
  EXPECT_EQ(Train(doc, o).stats().excluded_unreachable, 0);
}

TEST(ModelTest, SaveLoadRoundTrip) {
  TreebankDocument doc = Generate(6, 30, ParseSynthProfile("+phrases,+ellipsis"));
  TrainingOptions o;
  o.epochs = 2;
  o.pipeline = Pipeline::kMultiStep;
  Model m = Train(doc, o);
  std::stringstream s;
  m.Save(s);
  Model back = Model::Load(s);
  EXPECT_EQ(back.pipeline(), Pipeline::kMultiStep);
  EXPECT_EQ(back.transition_set(), TransitionSet::kPure);
  EXPECT_EQ(back.vocabulary(), m.vocabulary());
  std::ostringstream again;
  back.Save(again);
  EXPECT_EQ(again.str(), s.str());
  for (const HybridGraph &g : doc.graphs) {
    EXPECT_TRUE(Parse(back, g.Segments()).graph == Parse(m, g.Segments()).graph);
  }
}

TEST(ModelTest, LoadRejectsOtherTagsetsAndGarbage) {
  TreebankDocument doc = EnglishCorpus();
  std::stringstream s;
  Train(doc, {}, EnglishTags()).Save(s);
  EXPECT_THROW(Model::Load(s), Error);
  std::istringstream junk("not a model\n");
  EXPECT_THROW(Model::Load(junk), ParseError);
}

TEST(ModelTest, HyperparametersAreRecorded) {
  Hyperparameters h;
  EXPECT_DOUBLE_EQ(h.penalty_c, 0.5);
  EXPECT_DOUBLE_EQ(h.termination_epsilon, 1.0);
  EXPECT_DOUBLE_EQ(h.kernel_gamma, 0.2);
  EXPECT_DOUBLE_EQ(h.kernel_r, 0.0);
  EXPECT_EQ(h.kernel_degree, 2);
}

TEST(PredictTest, FallsBackToReduceThenShift) {
  TreebankDocument doc = EnglishCorpus();
  Model m = Train(doc, {}, EnglishTags());
  // A lone noun on the stack with nothing left to read.
  Configuration c = Configuration::Initial({Seg("x", "N")});
  c = Apply(c, Transition::Shift());
  EXPECT_EQ(m.Predict(c), Transition::Reduce(1));
}

TEST(PredictTest, SkipsIllegalTopChoice) {
  // Every training sentence attaches the first noun as subject.
  TreebankDocument doc;
  HybridGraph g;
  g.AddSegment(Seg("a", "N"));
  g.AddSegment(Seg("b", "V"));
  g.AddEdge(NodeRef::Terminal(0), NodeRef::Terminal(1), Label("subj"));
  doc.Add(g);
  Model m = Train(doc, {});
  Configuration c = Configuration::Initial(g.Segments());
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Shift());
  c = Apply(c, Transition::Left("subj"));
  // The same pattern again would re-head the noun.
  Transition t = m.Predict(c);
  EXPECT_TRUE(IsLegal(c, t));
}

}  // namespace
}  // namespace hybrid
