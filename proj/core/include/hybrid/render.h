#ifndef HYBRID_RENDER_H_
#define HYBRID_RENDER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/graph.h"

namespace hybrid {

// Drawing constants. Distances are in SVG user units.
struct RenderStyle {
  bool right_to_left = true;
  double margin = 20;
  double box_width = 84;
  double box_gap = 12;
  double line_height = 15;
  double node_radius = 4;
  double level_height = 22;  // vertical step per height-map level
  double font_size = 11;
  std::string font_family = "sans-serif";
};

struct WordBox {
  int terminal = 0;
  double x = 0, y = 0, width = 0, height = 0;
  std::string location;
  std::string transliteration;
  std::string gloss;
  std::string form;  // bracketed for empty categories
  std::string pos;
  std::string color;  // node point colour for the POS
  double node_x = 0, node_y = 0;
};

// An arc or a phrase bar occupying the interval [x, x + w] at depth h
// below the word boxes.
struct Arc {
  NodeRef dependent, head;
  std::string label;
  int level = 0;
  double x = 0, w = 0, h = 0;
  double from_x = 0, from_y = 0, to_x = 0, to_y = 0;
};

struct PhraseBar {
  int phrase = 0;
  int start = 0, end = 0;  // covered terminals
  std::string tag;
  int level = 0;
  double x = 0, w = 0, h = 0;
  double node_x = 0, node_y = 0;
};

struct VisualTree {
  RenderStyle style;
  double width = 0, height = 0;
  std::vector<WordBox> boxes;
  std::vector<Arc> arcs;  // sorted by level, then x
  std::vector<PhraseBar> bars;
};

enum class RenderFormat { kSvg, kDot };

std::optional<RenderFormat> ParseRenderFormat(std::string_view name);

// Glosses are indexed by terminal; missing entries leave the slot empty.
VisualTree Layout(const HybridGraph &g, const RenderStyle &style = {},
                  const std::vector<std::string> &glosses = {});

std::string Emit(const VisualTree &tree, RenderFormat format);

// Latin transliteration of a Buckwalter string.
std::string Transliterate(std::string_view buckwalter);

}  // namespace hybrid

#endif  // HYBRID_RENDER_H_
