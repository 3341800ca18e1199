#include "hybrid/synth.h"

#include <gtest/gtest.h>

#include "hybrid/conversion.h"
#include "hybrid/error.h"
#include "hybrid/treebank.h"

namespace hybrid {
namespace {

TEST(SynthProfileTest, Parsing) {
  SynthProfile pure = ParseSynthProfile("pure-dep");
  EXPECT_FALSE(pure.phrases || pure.ellipsis || pure.nonprojective ||
               pure.disconnected || pure.residue);
  SynthProfile p = ParseSynthProfile("+phrases,+ellipsis");
  EXPECT_TRUE(p.phrases && p.ellipsis);
  EXPECT_FALSE(p.nonprojective);
  EXPECT_EQ(ParseSynthProfile(p.ToString()).ToString(), p.ToString());
  EXPECT_THROW(ParseSynthProfile("+wings"), Error);
  EXPECT_DOUBLE_EQ(ParseSynthProfile("+residue").DeclaredConvertibility(), 0.95);
}

TEST(GenerateTest, Deterministic) {
  std::string a = ToConll(Generate(1, 1, ParseSynthProfile("pure-dep")).graphs[0]);
  std::string b = ToConll(Generate(1, 1, ParseSynthProfile("pure-dep")).graphs[0]);
  EXPECT_EQ(a, b);
  // Graph i depends only on the seed and i.
  auto many = Generate(5, 10, ParseSynthProfile("+phrases"));
  auto few = Generate(5, 3, ParseSynthProfile("+phrases"));
  EXPECT_EQ(ToConll(many.graphs[2]), ToConll(few.graphs[2]));
  EXPECT_THROW(Generate(1, 0, {}), Error);
}

TEST(GenerateTest, ProfilesShapeTheGraphs) {
  auto pure = Generate(3, 100, ParseSynthProfile("pure-dep"));
  for (const HybridGraph &g : pure.graphs) EXPECT_TRUE(g.IsPure());
  auto rich = Generate(3, 100, ParseSynthProfile("+phrases,+ellipsis"));
  int phrases = 0, empties = 0;
  for (const HybridGraph &g : rich.graphs) {
    phrases += g.num_phrases();
    empties += g.num_empty();
  }
  EXPECT_GT(phrases, 50);
  EXPECT_GT(empties, 50);
}

TEST(GenerateTest, EveryGraphValidates) {
  for (const char *profile :
       {"pure-dep", "+phrases,+ellipsis", "+non-projective,+disconnected",
        "+residue,+phrases"}) {
    auto doc = Generate(4, 200, ParseSynthProfile(profile));
    for (const HybridGraph &g : doc.graphs) {
      EXPECT_TRUE(Validate(g).empty()) << profile;
    }
  }
}

TEST(GenerateTest, MostRichGraphsAreConvertible) {
  auto doc = Generate(6, 500, ParseSynthProfile("+phrases,+ellipsis"));
  int ok = 0;
  for (const HybridGraph &g : doc.graphs) ok += IsConvertible(g);
  EXPECT_GE(ok, 475);
}

TEST(GenerateTest, InjectedShapesAreMarked) {
  auto doc = Generate(7, 300, ParseSynthProfile("+non-projective"));
  int marked = 0;
  for (size_t i = 0; i < doc.size(); ++i) {
    const bool injected = doc.Metadata(i, "synth") == std::string("nonprojective");
    marked += injected;
    EXPECT_EQ(!IsProjective(doc.graphs[i]), injected);
  }
  EXPECT_GT(marked, 10);
  EXPECT_LT(marked, 60);
}

}  // namespace
}  // namespace hybrid
