#include "hybrid/graph.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hybrid/error.h"

namespace hybrid {

std::string Label::ToString() const {
  std::string s = base;
  if (has_bridge()) s += "|" + bridge_pos + "|" + bridge_relation;
  if (dependent_expansion) s = "+" + s;
  if (head_expansion) s += "+";
  return s;
}

Label Label::Parse(std::string_view text) {
  Label label;
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') {
    label.dependent_expansion = true;
    body.remove_prefix(1);
  }
  if (!body.empty() && body.back() == '+') {
    label.head_expansion = true;
    body.remove_suffix(1);
  }
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t bar = body.find('|', pos);
    parts.emplace_back(body.substr(pos, bar == std::string_view::npos
                                            ? std::string_view::npos
                                            : bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  for (const auto &p : parts) {
    if (p.empty()) {
      throw ParseError("malformed relation label '" + std::string(text) + "'");
    }
  }
  if (parts.size() == 1) {
    label.base = parts[0];
  } else if (parts.size() == 3) {
    label.base = parts[0];
    label.bridge_pos = parts[1];
    label.bridge_relation = parts[2];
  } else {
    throw ParseError("malformed relation label '" + std::string(text) + "'");
  }
  return label;
}

HybridGraph::HybridGraph(const std::vector<MorphSegment> &segments) {
  for (const auto &s : segments) AddSegment(s);
}

int HybridGraph::AddSegment(MorphSegment seg, bool reference) {
  return AddTerminal(Terminal{std::move(seg), false, reference});
}

int HybridGraph::AddEmpty(std::string pos, std::string form) {
  Terminal t;
  t.morph.pos = std::move(pos);
  t.morph.form = std::move(form);
  t.empty = true;
  return AddTerminal(std::move(t));
}

int HybridGraph::AddTerminal(Terminal t) {
  terminals_.push_back(std::move(t));
  return num_terminals() - 1;
}

int HybridGraph::InsertTerminal(int anchor, Terminal t, bool extend_at_anchor) {
  if (anchor < -1 || anchor >= num_terminals()) {
    throw InvalidReferenceError("insertion anchor out of range");
  }
  const int at = anchor + 1;
  terminals_.insert(terminals_.begin() + at, std::move(t));
  for (Edge &e : edges_) {
    for (NodeRef *n : {&e.dependent, &e.head}) {
      if (n->is_terminal() && n->index >= at) ++n->index;
    }
  }
  for (Phrase &p : phrases_) {
    const bool ends_at_anchor = p.end == anchor;
    if (p.start > anchor) ++p.start;
    if (p.end > anchor) {
      ++p.end;
    } else if (ends_at_anchor && extend_at_anchor) {
      ++p.end;
    }
  }
  return at;
}

void HybridGraph::RemoveTerminal(int i) {
  CheckRef(NodeRef::Terminal(i));
  const NodeRef self = NodeRef::Terminal(i);
  std::erase_if(edges_, [&](const Edge &e) {
    return e.dependent == self || e.head == self;
  });
  for (int p = num_phrases() - 1; p >= 0; --p) {
    if (phrases_[p].start == i && phrases_[p].end == i) RemovePhrase(p);
  }
  terminals_.erase(terminals_.begin() + i);
  for (Edge &e : edges_) {
    for (NodeRef *n : {&e.dependent, &e.head}) {
      if (n->is_terminal() && n->index > i) --n->index;
    }
  }
  for (Phrase &p : phrases_) {
    if (p.start > i) --p.start;
    if (p.end >= i) --p.end;
  }
}

int HybridGraph::AddPhrase(int start, int end, std::string tag) {
  phrases_.push_back(Phrase{start, end, std::move(tag)});
  return num_phrases() - 1;
}

void HybridGraph::RemovePhrase(int i) {
  CheckRef(NodeRef::Phrase(i));
  const NodeRef self = NodeRef::Phrase(i);
  std::erase_if(edges_, [&](const Edge &e) {
    return e.dependent == self || e.head == self;
  });
  phrases_.erase(phrases_.begin() + i);
  for (Edge &e : edges_) {
    for (NodeRef *n : {&e.dependent, &e.head}) {
      if (n->is_phrase() && n->index > i) --n->index;
    }
  }
}

void HybridGraph::AddEdge(NodeRef dependent, NodeRef head, Label label) {
  CheckRef(dependent);
  CheckRef(head);
  edges_.push_back(Edge{dependent, head, std::move(label)});
}

void HybridGraph::RemoveEdge(int edge_index) {
  edges_.erase(edges_.begin() + edge_index);
}

int HybridGraph::num_segments() const {
  return num_terminals() - num_empty();
}

int HybridGraph::num_empty() const {
  return static_cast<int>(std::count_if(
      terminals_.begin(), terminals_.end(),
      [](const Terminal &t) { return t.empty; }));
}

bool HybridGraph::Exists(NodeRef n) const {
  if (n.index < 0) return false;
  return n.is_terminal() ? n.index < num_terminals() : n.index < num_phrases();
}

void HybridGraph::CheckRef(NodeRef n) const {
  if (!Exists(n)) {
    throw InvalidReferenceError(
        std::string("unknown ") + (n.is_terminal() ? "terminal " : "phrase ") +
        std::to_string(n.index));
  }
}

std::vector<MorphSegment> HybridGraph::Segments() const {
  std::vector<MorphSegment> out;
  for (const Terminal &t : terminals_) {
    if (!t.empty) out.push_back(t.morph);
  }
  return out;
}

std::optional<int> HybridGraph::HeadEdge(NodeRef n) const {
  CheckRef(n);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    if (edges_[i].dependent == n) return i;
  }
  return std::nullopt;
}

std::vector<int> HybridGraph::DependentEdges(NodeRef n) const {
  CheckRef(n);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    if (edges_[i].head == n) out.push_back(i);
  }
  return out;
}

bool HybridGraph::HasEdgeBetween(NodeRef a, NodeRef b) const {
  for (const Edge &e : edges_) {
    if ((e.dependent == a && e.head == b) || (e.dependent == b && e.head == a)) {
      return true;
    }
  }
  return false;
}

bool HybridGraph::Dominates(NodeRef ancestor, NodeRef descendant) const {
  NodeRef cur = descendant;
  for (size_t steps = 0; steps <= edges_.size(); ++steps) {
    if (cur == ancestor) return true;
    auto it = std::find_if(edges_.begin(), edges_.end(),
                           [&](const Edge &e) { return e.dependent == cur; });
    if (it == edges_.end()) return false;
    cur = it->head;
  }
  return false;
}

HybridGraph HybridGraph::Canonical() const {
  std::vector<int> order(phrases_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Phrase &x = phrases_[a], &y = phrases_[b];
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end > y.end;
    return x.tag < y.tag;
  });
  std::vector<int> rank(phrases_.size());
  HybridGraph out;
  out.terminals_ = terminals_;
  for (size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    out.phrases_.push_back(phrases_[order[i]]);
  }
  out.edges_ = edges_;
  for (Edge &e : out.edges_) {
    for (NodeRef *n : {&e.dependent, &e.head}) {
      if (n->is_phrase()) n->index = rank[n->index];
    }
  }
  std::sort(out.edges_.begin(), out.edges_.end());
  return out;
}

bool HybridGraph::operator==(const HybridGraph &other) const {
  if (terminals_ != other.terminals_) return false;
  if (phrases_.size() != other.phrases_.size()) return false;
  if (edges_.size() != other.edges_.size()) return false;
  HybridGraph a = Canonical(), b = other.Canonical();
  return a.phrases_ == b.phrases_ && a.edges_ == b.edges_;
}

std::string HybridGraph::Describe(NodeRef n) const {
  if (!Exists(n)) return "?";
  if (n.is_terminal()) {
    const Terminal &t = terminals_[n.index];
    return std::string(t.empty ? "e" : "w") + std::to_string(n.index + 1) +
           "(" + t.morph.form + ")";
  }
  const Phrase &p = phrases_[n.index];
  return p.tag + "[" + std::to_string(p.start + 1) + "-" +
         std::to_string(p.end + 1) + "]";
}

std::optional<NodeRef> HeadOf(const HybridGraph &g, NodeRef n) {
  auto e = g.HeadEdge(n);
  if (!e) return std::nullopt;
  return g.edges()[*e].head;
}

NodeRef SubgraphRoot(const HybridGraph &g, int phrase) {
  if (phrase < 0 || phrase >= g.num_phrases()) {
    throw InvalidReferenceError("unknown phrase " + std::to_string(phrase));
  }
  const Phrase &p = g.phrase(phrase);
  auto strictly_inside = [&](int q) {
    const Phrase &x = g.phrase(q);
    return q != phrase && p.Contains(x) && !(x.start == p.start && x.end == p.end);
  };
  std::vector<int> maximal;
  for (int q = 0; q < g.num_phrases(); ++q) {
    if (!strictly_inside(q)) continue;
    bool covered = false;
    for (int r = 0; r < g.num_phrases(); ++r) {
      if (r != q && strictly_inside(r) && g.phrase(r).Contains(g.phrase(q)) &&
          g.phrase(r) != g.phrase(q)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(q);
  }
  std::vector<NodeRef> units;
  for (int q : maximal) units.push_back(NodeRef::Phrase(q));
  for (int i = p.start; i <= p.end; ++i) {
    bool in_nested = std::any_of(maximal.begin(), maximal.end(),
                                 [&](int q) { return g.phrase(q).Contains(i); });
    if (!in_nested) units.push_back(NodeRef::Terminal(i));
  }
  auto inside = [&](NodeRef n) {
    return n.is_terminal() ? p.Contains(n.index) : strictly_inside(n.index);
  };
  std::vector<NodeRef> roots;
  for (NodeRef u : units) {
    auto h = HeadOf(g, u);
    if (!h || !inside(*h)) roots.push_back(u);
  }
  if (roots.size() != 1) {
    throw IllFormedPhraseError("phrase " + g.Describe(NodeRef::Phrase(phrase)) +
                               " has " + std::to_string(roots.size()) +
                               " root candidates");
  }
  return roots.front();
}

std::vector<int> Yield(const HybridGraph &g, NodeRef n) {
  if (!g.Exists(n)) {
    throw InvalidReferenceError("unknown node " + std::to_string(n.index));
  }
  std::set<int> out;
  std::set<NodeRef> seen;
  std::function<void(NodeRef)> visit = [&](NodeRef x) {
    if (!seen.insert(x).second) return;
    if (x.is_terminal()) {
      out.insert(x.index);
    } else {
      const Phrase &p = g.phrase(x.index);
      for (int i = p.start; i <= p.end; ++i) out.insert(i);
    }
    for (const Edge &e : g.edges()) {
      if (e.head == x) visit(e.dependent);
    }
  };
  visit(n);
  return {out.begin(), out.end()};
}

std::pair<int, int> SubgraphSpan(const HybridGraph &g, NodeRef n) {
  std::vector<int> y = Yield(g, n);
  if (y.back() - y.front() + 1 != static_cast<int>(y.size())) {
    throw NonProjectiveError("yield of " + g.Describe(n) + " is not contiguous");
  }
  return {y.front(), y.back()};
}

bool IsProjective(const HybridGraph &g) {
  auto contiguous = [&](NodeRef n) {
    std::vector<int> y = Yield(g, n);
    return y.empty() || y.back() - y.front() + 1 == static_cast<int>(y.size());
  };
  for (int i = 0; i < g.num_terminals(); ++i) {
    if (!contiguous(NodeRef::Terminal(i))) return false;
  }
  for (int p = 0; p < g.num_phrases(); ++p) {
    if (!contiguous(NodeRef::Phrase(p))) return false;
  }
  return true;
}

std::vector<Violation> Validate(const HybridGraph &g, const Tagset &tags) {
  std::vector<Violation> out;
  const int n = g.num_terminals();
  for (int i = 0; i < n; ++i) {
    const Terminal &t = g.terminal(i);
    const std::string who = g.Describe(NodeRef::Terminal(i));
    if (!tags.IsPos(t.morph.pos)) {
      out.push_back({"pos-tag", who + " has unknown POS '" + t.morph.pos + "'"});
    }
    if (t.morph.form.empty()) {
      out.push_back({"form", who + " has an empty form"});
    }
  }
  for (int p = 0; p < g.num_phrases(); ++p) {
    const Phrase &x = g.phrase(p);
    const std::string who = "phrase " + std::to_string(p + 1);
    if (x.start < 0 || x.end >= n || x.start > x.end) {
      out.push_back({"phrase-span", who + " span out of bounds"});
    }
    if (!tags.IsPhrase(x.tag)) {
      out.push_back({"phrase-tag", who + " has unknown tag '" + x.tag + "'"});
    }
    for (int q = p + 1; q < g.num_phrases(); ++q) {
      const Phrase &y = g.phrase(q);
      const bool disjoint = x.end < y.start || y.end < x.start;
      if (!disjoint && !x.Contains(y) && !y.Contains(x)) {
        out.push_back({"phrase-overlap", who + " partially overlaps phrase " +
                                             std::to_string(q + 1)});
      }
    }
  }
  const int nodes = n + g.num_phrases();
  auto id = [&](NodeRef r) { return r.is_terminal() ? r.index : n + r.index; };
  std::vector<std::vector<int>> heads(nodes);
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const Edge &e = g.edges()[i];
    const std::string who = "edge " + std::to_string(i + 1);
    if (!g.Exists(e.dependent) || !g.Exists(e.head)) {
      out.push_back({"edge-reference", who + " references a missing node"});
      continue;
    }
    if (e.dependent == e.head) {
      out.push_back({"self-loop", who + " has dependent equal to head"});
    }
    const Label &l = e.label;
    if (!tags.IsRelation(l.base) ||
        (l.has_bridge() &&
         (!tags.IsPos(l.bridge_pos) || !tags.IsRelation(l.bridge_relation)))) {
      out.push_back({"relation", who + " has unknown label '" + l.ToString() +
                                     "'"});
    }
    heads[id(e.dependent)].push_back(id(e.head));
  }
  for (int v = 0; v < nodes; ++v) {
    if (heads[v].size() > 1) {
      NodeRef r = v < n ? NodeRef::Terminal(v) : NodeRef::Phrase(v - n);
      out.push_back({"single-governor",
                     g.Describe(r) + " has " + std::to_string(heads[v].size()) +
                         " heads"});
    }
  }
  // Cycle detection over dependent -> head links.
  std::vector<int> color(nodes, 0);
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int h : heads[v]) {
      if (color[h] == 1) cyclic = true;
      if (color[h] == 0) dfs(h);
    }
    color[v] = 2;
  };
  for (int v = 0; v < nodes && !cyclic; ++v) {
    if (color[v] == 0) dfs(v);
  }
  if (cyclic) out.push_back({"acyclic", "edge set contains a cycle"});
  return out;
}

}  // namespace hybrid
