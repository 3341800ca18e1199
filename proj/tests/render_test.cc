#include "hybrid/render.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace hybrid {
namespace {

using testing::EnglishTags;
using testing::LoadGraph;
using testing::Seg;

int Count(const std::string &text, const std::string &needle) {
  int n = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

TEST(LayoutTest, SingleWord) {
  HybridGraph g;
  g.AddSegment(Seg("kalimap", "N"));
  VisualTree t = Layout(g);
  EXPECT_EQ(t.boxes.size(), 1u);
  EXPECT_TRUE(t.arcs.empty());
  EXPECT_TRUE(t.bars.empty());
}

TEST(LayoutTest, EnglishSentence) {
  VisualTree t = Layout(LoadGraph("oracle/english.conll", EnglishTags()));
  EXPECT_EQ(t.boxes.size(), 5u);
  EXPECT_EQ(t.arcs.size(), 4u);
  EXPECT_TRUE(t.bars.empty());
}

TEST(LayoutTest, ConditionalVerse) {
  VisualTree t = Layout(LoadGraph("oracle/verse_7_186.conll"));
  ASSERT_EQ(t.boxes.size(), 9u);
  EXPECT_EQ(t.boxes[6].form, "[*]");
  EXPECT_EQ(t.bars.size(), 3u);
  EXPECT_EQ(t.arcs.size(), 7u);
  // The prepositional phrase nests inside the nominal sentence and sits lower.
  const PhraseBar *pp = nullptr, *ns = nullptr;
  for (const PhraseBar &b : t.bars) {
    if (b.tag == "PP") pp = &b;
    if (b.tag == "NS") ns = &b;
  }
  ASSERT_TRUE(pp && ns);
  EXPECT_LT(pp->level, ns->level);
  // Right to left: earlier words sit further right.
  EXPECT_GT(t.boxes[0].x, t.boxes[1].x);
  RenderStyle ltr;
  ltr.right_to_left = false;
  VisualTree l = Layout(LoadGraph("oracle/verse_7_186.conll"), ltr);
  EXPECT_LT(l.boxes[0].x, l.boxes[1].x);
}

TEST(LayoutTest, ArcsDoNotShareALevelWhenTheyOverlap) {
  VisualTree t = Layout(LoadGraph("oracle/verse_7_186.conll"));
  for (size_t i = 0; i < t.arcs.size(); ++i) {
    for (size_t j = i + 1; j < t.arcs.size(); ++j) {
      const Arc &a = t.arcs[i], &b = t.arcs[j];
      const bool overlap = a.x < b.x + b.w && b.x < a.x + a.w;
      if (overlap && a.level == b.level) {
        ADD_FAILURE() << a.label << " and " << b.label << " collide";
      }
    }
  }
}

TEST(EmitTest, SvgAndDot) {
  VisualTree t = Layout(LoadGraph("oracle/verse_7_186.conll"));
  std::string svg = Emit(t, RenderFormat::kSvg);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<svg "), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(Count(svg, "<path"), 7);
  EXPECT_NE(svg.find(">rslt<"), std::string::npos);
  std::string dot = Emit(t, RenderFormat::kDot);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("rankdir=RL"), std::string::npos);
  EXPECT_EQ(ParseRenderFormat("svg"), RenderFormat::kSvg);
  EXPECT_FALSE(ParseRenderFormat("png").has_value());
}

TEST(TransliterateTest, Buckwalter) {
  EXPECT_EQ(Transliterate("qaAla"), "qaala");
  EXPECT_EQ(Transliterate("$ay'"), "shay'");
}

}  // namespace
}  // namespace hybrid
