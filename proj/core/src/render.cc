#include "hybrid/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace hybrid {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string DotEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string PosColor(const std::string &pos) {
  if (pos == "V") return "#3a8d3a";
  if (pos == "N" || pos == "PN" || pos == "ADJ" || pos == "IMPN") {
    return "#2f5fa8";
  }
  if (pos == "PRON" || pos == "DEM" || pos == "REL") return "#8a5a9c";
  if (pos == "P") return "#b5651d";
  return "#a83232";
}

// One unit of a layout: an arc or a phrase bar, with its interval in
// half-column coordinates (terminal i sits at 2i + 1).
struct Item {
  bool is_bar = false;
  int index = 0;  // edge or phrase index
  int lo = 0, hi = 0;
};

}  // namespace

std::optional<RenderFormat> ParseRenderFormat(std::string_view name) {
  if (name == "svg") return RenderFormat::kSvg;
  if (name == "dot") return RenderFormat::kDot;
  return std::nullopt;
}

std::string Transliterate(std::string_view bw) {
  static const std::map<char, std::string> kMap = {
      {'\'', "'"}, {'|', "a"},  {'>', "'"},  {'&', "'"},  {'<', "'"},
      {'}', "'"},  {'A', "a"},  {'b', "b"},  {'p', "t"},  {'t', "t"},
      {'v', "th"}, {'j', "j"},  {'H', "h"},  {'x', "kh"}, {'d', "d"},
      {'*', "dh"}, {'r', "r"},  {'z', "z"},  {'s', "s"},  {'$', "sh"},
      {'S', "s"},  {'D', "d"},  {'T', "t"},  {'Z', "z"},  {'E', "'"},
      {'g', "gh"}, {'f', "f"},  {'q', "q"},  {'k', "k"},  {'l', "l"},
      {'m', "m"},  {'n', "n"},  {'h', "h"},  {'w', "w"},  {'y', "y"},
      {'Y', "a"},  {'F', "an"}, {'N', "un"}, {'K', "in"}, {'a', "a"},
      {'u', "u"},  {'i', "i"},  {'o', ""},   {'`', "a"},  {'{', "a"},
      {'_', ""},   {'^', ""},   {'#', ""},   {':', ""},   {'@', ""},
      {'"', ""},   {'[', ""},   {';', ""},   {',', ""},   {'.', ""},
      {'!', ""},   {'-', ""},   {'+', ""},   {'%', ""},   {']', ""},
  };
  std::string out, last;
  for (char c : bw) {
    if (c == '~') {
      out += last;
      continue;
    }
    auto it = kMap.find(c);
    const std::string piece = it == kMap.end() ? std::string(1, c) : it->second;
    out += piece;
    if (!piece.empty()) last = piece;
  }
  return out;
}

VisualTree Layout(const HybridGraph &g, const RenderStyle &style,
                  const std::vector<std::string> &glosses) {
  VisualTree tree;
  tree.style = style;
  const int n = g.num_terminals();
  const double box_h = 5 * style.line_height;
  const double top = style.margin;
  const double base = top + box_h + style.node_radius * 3;

  // Measure: one column per terminal, mirrored for right-to-left.
  auto column_x = [&](int i) {
    const int col = style.right_to_left ? n - 1 - i : i;
    return style.margin + col * (style.box_width + style.box_gap);
  };
  for (int i = 0; i < n; ++i) {
    const Terminal &t = g.terminal(i);
    WordBox b;
    b.terminal = i;
    b.x = column_x(i);
    b.y = top;
    b.width = style.box_width;
    b.height = box_h;
    if (t.morph.location) b.location = t.morph.location->ToString();
    b.transliteration = Transliterate(t.morph.form);
    if (i < static_cast<int>(glosses.size())) b.gloss = glosses[i];
    b.form = t.empty ? "[" + t.morph.form + "]" : t.morph.form;
    b.pos = t.morph.pos;
    b.color = PosColor(t.morph.pos);
    b.node_x = b.x + style.box_width / 2;
    b.node_y = base;
    tree.boxes.push_back(std::move(b));
  }

  // Arrange: shortest items first; each takes one level above the
  // highest item already under its interval.
  std::vector<Item> items;
  auto pos_of = [&](NodeRef r) {
    if (r.is_terminal()) return 2 * r.index + 1;
    const Phrase &p = g.phrase(r.index);
    return p.start + p.end + 1;
  };
  for (int p = 0; p < g.num_phrases(); ++p) {
    const Phrase &x = g.phrase(p);
    items.push_back({true, p, 2 * x.start, 2 * x.end + 2});
  }
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const Edge &edge = g.edges()[e];
    const int a = pos_of(edge.dependent), b = pos_of(edge.head);
    items.push_back({false, e, std::min(a, b), std::max(a, b)});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item &a, const Item &b) {
                     if (a.hi - a.lo != b.hi - b.lo) {
                       return a.hi - a.lo < b.hi - b.lo;
                     }
                     if (a.is_bar != b.is_bar) return a.is_bar;
                     return a.lo < b.lo;
                   });
  std::vector<int> height(2 * n + 2, 0);
  std::vector<int> bar_level(g.num_phrases(), 0);
  std::vector<int> arc_level(g.edges().size(), 0);
  std::function<void(const Item &)> place = [&](const Item &it) {
    int floor_level = 0;
    if (!it.is_bar) {
      const Edge &edge = g.edges()[it.index];
      for (NodeRef r : {edge.dependent, edge.head}) {
        if (!r.is_phrase()) continue;
        if (bar_level[r.index] == 0) {
          const Phrase &x = g.phrase(r.index);
          place({true, r.index, 2 * x.start, 2 * x.end + 2});
        }
        floor_level = std::max(floor_level, bar_level[r.index]);
      }
    } else if (bar_level[it.index] != 0) {
      return;
    }
    int level = floor_level;
    for (int s = it.lo; s < it.hi; ++s) level = std::max(level, height[s]);
    ++level;
    for (int s = it.lo; s < it.hi; ++s) height[s] = level;
    (it.is_bar ? bar_level : arc_level)[it.index] = level;
  };
  for (const Item &it : items) place(it);

  auto depth = [&](int level) { return base + level * style.level_height; };
  for (int p = 0; p < g.num_phrases(); ++p) {
    const Phrase &x = g.phrase(p);
    PhraseBar bar;
    bar.phrase = p;
    bar.start = x.start;
    bar.end = x.end;
    bar.tag = x.tag;
    bar.level = bar_level[p];
    const double a = column_x(x.start), b = column_x(x.end);
    bar.x = std::min(a, b) + style.box_gap / 2;
    bar.w = std::max(a, b) + style.box_width - style.box_gap / 2 - bar.x;
    bar.h = depth(bar.level);
    bar.node_x = bar.x + bar.w / 2;
    bar.node_y = bar.h;
    tree.bars.push_back(std::move(bar));
  }
  auto anchor = [&](NodeRef r) -> std::pair<double, double> {
    if (r.is_terminal()) {
      return {tree.boxes[r.index].node_x, tree.boxes[r.index].node_y};
    }
    return {tree.bars[r.index].node_x, tree.bars[r.index].node_y};
  };
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const Edge &edge = g.edges()[e];
    Arc arc;
    arc.dependent = edge.dependent;
    arc.head = edge.head;
    arc.label = edge.label.ToString();
    arc.level = arc_level[e];
    std::tie(arc.from_x, arc.from_y) = anchor(edge.dependent);
    std::tie(arc.to_x, arc.to_y) = anchor(edge.head);
    arc.x = std::min(arc.from_x, arc.to_x);
    arc.w = std::abs(arc.from_x - arc.to_x);
    arc.h = depth(arc.level);
    tree.arcs.push_back(std::move(arc));
  }
  std::stable_sort(tree.arcs.begin(), tree.arcs.end(),
                   [](const Arc &a, const Arc &b) {
                     return std::tie(a.level, a.x) < std::tie(b.level, b.x);
                   });

  int top_level = 0;
  for (int h : height) top_level = std::max(top_level, h);
  tree.width = 2 * style.margin + std::max(n, 1) * style.box_width +
               std::max(n - 1, 0) * style.box_gap;
  tree.height = depth(top_level) + style.line_height + style.margin;
  return tree;
}

namespace {

std::string EmitSvg(const VisualTree &t) {
  const RenderStyle &s = t.style;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << Num(t.width) << "\" height=\"" << Num(t.height) << "\" viewBox=\"0 0 "
      << Num(t.width) << ' ' << Num(t.height) << "\" font-family=\""
      << XmlEscape(s.font_family) << "\" font-size=\"" << Num(s.font_size)
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g class=\"words\">\n";
  for (const WordBox &b : t.boxes) {
    const double cx = b.x + b.width / 2;
    const std::string lines[] = {b.location, b.transliteration, b.gloss,
                                 b.form, b.pos};
    out << "<g class=\"word\" data-terminal=\"" << b.terminal + 1 << "\">\n";
    for (int k = 0; k < 5; ++k) {
      out << "<text x=\"" << Num(cx) << "\" y=\""
          << Num(b.y + (k + 1) * s.line_height - 3)
          << "\" text-anchor=\"middle\">" << XmlEscape(lines[k])
          << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n<g class=\"bars\">\n";
  for (const PhraseBar &p : t.bars) {
    out << "<line x1=\"" << Num(p.x) << "\" y1=\"" << Num(p.h) << "\" x2=\""
        << Num(p.x + p.w) << "\" y2=\"" << Num(p.h)
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out << "</g>\n<g class=\"arcs\" fill=\"none\" stroke=\"#555\">\n";
  for (const Arc &a : t.arcs) {
    out << "<path d=\"M " << Num(a.from_x) << ' ' << Num(a.from_y) << " C "
        << Num(a.from_x) << ' ' << Num(a.h) << ' ' << Num(a.to_x) << ' '
        << Num(a.h) << ' ' << Num(a.to_x) << ' ' << Num(a.to_y) << "\"/>\n";
  }
  out << "</g>\n<g class=\"nodes\">\n";
  for (const WordBox &b : t.boxes) {
    out << "<circle cx=\"" << Num(b.node_x) << "\" cy=\"" << Num(b.node_y)
        << "\" r=\"" << Num(s.node_radius) << "\" fill=\"" << b.color
        << "\"/>\n";
  }
  for (const PhraseBar &p : t.bars) {
    out << "<circle cx=\"" << Num(p.node_x) << "\" cy=\"" << Num(p.node_y)
        << "\" r=\"" << Num(s.node_radius) << "\" fill=\"black\"/>\n";
  }
  out << "</g>\n<g class=\"labels\" text-anchor=\"middle\">\n";
  for (const Arc &a : t.arcs) {
    out << "<text x=\"" << Num(a.x + a.w / 2) << "\" y=\"" << Num(a.h - 3)
        << "\">"
        << XmlEscape(a.label) << "</text>\n";
  }
  for (const PhraseBar &p : t.bars) {
    out << "<text x=\"" << Num(p.node_x) << "\" y=\""
        << Num(p.h + s.line_height) << "\">(" << XmlEscape(p.tag)
        << ")</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string EmitDot(const VisualTree &t) {
  std::ostringstream out;
  out << "digraph hybrid {\n";
  out << "  rankdir=" << (t.style.right_to_left ? "RL" : "LR") << ";\n";
  out << "  node [shape=box];\n";
  for (const WordBox &b : t.boxes) {
    out << "  t" << b.terminal + 1 << " [label=\"" << DotEscape(b.form)
        << "\\n" << DotEscape(b.pos) << "\"];\n";
  }
  for (const PhraseBar &p : t.bars) {
    out << "  p" << p.phrase + 1 << " [shape=ellipse, label=\""
        << DotEscape(p.tag) << "\"];\n";
  }
  auto id = [](NodeRef r) {
    return (r.is_terminal() ? "t" : "p") + std::to_string(r.index + 1);
  };
  for (size_t i = 1; i < t.boxes.size(); ++i) {
    out << "  t" << i << " -> t" << i + 1 << " [style=invis];\n";
  }
  std::vector<const Arc *> arcs;
  for (const Arc &a : t.arcs) arcs.push_back(&a);
  std::sort(arcs.begin(), arcs.end(), [](const Arc *a, const Arc *b) {
    return std::tie(a->dependent, a->head) < std::tie(b->dependent, b->head);
  });
  for (const Arc *a : arcs) {
    out << "  " << id(a->dependent) << " -> " << id(a->head) << " [label=\""
        << DotEscape(a->label) << "\"];\n";
  }
  for (const PhraseBar &p : t.bars) {
    out << "  p" << p.phrase + 1 << " -> { ";
    for (int i = p.start; i <= p.end; ++i) out << 't' << i + 1 << ' ';
    out << "} [style=dotted, arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string Emit(const VisualTree &tree, RenderFormat format) {
  return format == RenderFormat::kDot ? EmitDot(tree) : EmitSvg(tree);
}

}  // namespace hybrid
