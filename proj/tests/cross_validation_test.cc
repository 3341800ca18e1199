#include "hybrid/cross_validation.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "hybrid/error.h"
#include "hybrid/synth.h"

namespace hybrid {
namespace {

TEST(FoldAssignmentTest, PartitionWithBalancedSizes) {
  auto folds = FoldAssignment(23, 5, 7);
  ASSERT_EQ(folds.size(), 5u);
  std::vector<int> all;
  for (const auto &f : folds) {
    EXPECT_GE(f.size(), 4u);
    EXPECT_LE(f.size(), 5u);
    all.insert(all.end(), f.begin(), f.end());
  }
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 23; ++i) EXPECT_EQ(all[i], i);
  EXPECT_EQ(FoldAssignment(23, 5, 7), folds);
  EXPECT_NE(FoldAssignment(23, 5, 8), folds);
}

TEST(FoldAssignmentTest, Errors) {
  EXPECT_THROW(FoldAssignment(3, 1, 1), Error);
  EXPECT_THROW(FoldAssignment(3, 4, 1), Error);
}

TEST(CrossValidateTest, LeaveOneOut) {
  TreebankDocument doc = Generate(1, 3, ParseSynthProfile("+phrases"));
  CrossValidationOptions o;
  o.folds = 3;
  o.epochs = 2;
  CrossValidationResult r = CrossValidate(doc, o);
  EXPECT_EQ(r.per_fold.size(), 3u);
  int64_t gold = 0;
  for (const HybridGraph &g : doc.graphs) gold += g.edges().size();
  EXPECT_EQ(r.elas.gold_count, gold);
}

TEST(CrossValidateTest, DeterministicAndThreadIndependent) {
  TreebankDocument doc = Generate(2, 40, ParseSynthProfile("+phrases,+ellipsis"));
  CrossValidationOptions o;
  o.folds = 4;
  o.epochs = 2;
  CrossValidationResult a = CrossValidate(doc, o);
  o.threads = 4;
  CrossValidationResult b = CrossValidate(doc, o);
  EXPECT_EQ(a.elas, b.elas);
  EXPECT_EQ(a.parseval, b.parseval);
  EvalReport sum;
  for (const EvalReport &f : a.per_fold) sum += f;
  EXPECT_EQ(sum, a.elas);
}

TEST(CrossValidateTest, TooFewGraphs) {
  TreebankDocument doc = Generate(1, 3, ParseSynthProfile("pure-dep"));
  CrossValidationOptions o;
  EXPECT_THROW(CrossValidate(doc, o), Error);
}

}  // namespace
}  // namespace hybrid
