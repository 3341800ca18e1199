#include "hybrid/conversion.h"

#include <algorithm>
#include <functional>
#include <set>

#include "hybrid/error.h"
#include "hybrid/pronouns.h"
#include "hybrid/transition.h"

namespace hybrid {
namespace {

bool IsDroppedPronoun(const HybridGraph &g, int i) {
  const Terminal &t = g.terminal(i);
  if (!t.empty || t.morph.pos != "PRON") return false;
  const NodeRef self = NodeRef::Terminal(i);
  if (!g.DependentEdges(self).empty()) return false;
  auto e = g.HeadEdge(self);
  if (!e) return false;
  const Edge &edge = g.edges()[*e];
  return edge.label == Label("subj") && edge.head.is_terminal() &&
         g.terminal(edge.head.index).morph.pos == "V";
}

NodeRef AfterRemoval(NodeRef n, int removed) {
  if (n.is_terminal() && n.index > removed) --n.index;
  return n;
}

// Terminals of the subgraph rooted at r, skipping dependents attached to
// r through head-expanded edges (those hang off the phrase instead).
std::vector<int> PhraseYield(const HybridGraph &g, int r) {
  std::set<int> out{r};
  for (int e : g.DependentEdges(NodeRef::Terminal(r))) {
    const Edge &edge = g.edges()[e];
    if (edge.label.head_expansion) continue;
    for (int i : Yield(g, edge.dependent)) out.insert(i);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::string PhraseTagFor(const HybridGraph &g, int start, int end, int root) {
  const std::string &pos = g.terminal(root).morph.pos;
  if (pos == "P") return "PP";
  if (pos == "V") {
    for (int e : g.DependentEdges(NodeRef::Terminal(root))) {
      if (g.edges()[e].label.base == "subj") return "VS";
    }
  }
  for (const Edge &e : g.edges()) {
    if (!e.dependent.is_terminal() || !e.head.is_terminal()) continue;
    const int d = e.dependent.index, h = e.head.index;
    if (d >= start && d <= end && h >= start && h <= end &&
        (e.label.base == "pred" || e.label.base == "predx")) {
      return "NS";
    }
  }
  if (pos == "COND" || pos == "T") return "CS";
  if (pos == "SUB") return "SC";
  return "S";
}

bool NeedsDroppedPronoun(const HybridGraph &g, int terminal) {
  const Terminal &t = g.terminal(terminal);
  if (t.empty || t.morph.pos != "V" || t.morph.Get(Feature::kSpecial)) {
    return false;
  }
  for (int e : g.DependentEdges(NodeRef::Terminal(terminal))) {
    if (IsSubjectRelation(g.edges()[e].label.base)) return false;
  }
  return true;
}

PureConversion ToPureDependency(const HybridGraph &hybrid, const Tagset &tags) {
  if (auto v = Validate(hybrid, tags); !v.empty()) {
    throw ValidationError("cannot convert invalid graph: " + v.front().detail);
  }
  PureConversion out;
  HybridGraph &g = out.pure;
  g = hybrid;
  ConversionReport &report = out.report;

  // Dropped subject pronouns.
  for (int i = g.num_terminals() - 1; i >= 0; --i) {
    if (IsDroppedPronoun(g, i)) {
      g.RemoveTerminal(i);
      ++report.dropped_pronouns;
    }
  }

  // Elided heads bridging exactly one dependent to one head.
  for (int i = g.num_terminals() - 1; i >= 0; --i) {
    if (!g.terminal(i).empty) continue;
    const NodeRef e = NodeRef::Terminal(i);
    auto up = g.HeadEdge(e);
    std::vector<int> down = g.DependentEdges(e);
    bool alone = true;
    for (const Phrase &p : g.phrases()) {
      if (p.start == i && p.end == i) alone = false;
    }
    if (!up || down.size() != 1 || !alone ||
        !g.edges()[*up].label.is_plain() ||
        !g.edges()[down[0]].label.is_plain()) {
      continue;
    }
    const Edge inner = g.edges()[down[0]];
    const Edge outer = g.edges()[*up];
    Label bridged(inner.label.base);
    bridged.bridge_pos = g.terminal(i).morph.pos;
    bridged.bridge_relation = outer.label.base;
    g.RemoveTerminal(i);
    g.AddEdge(AfterRemoval(inner.dependent, i), AfterRemoval(outer.head, i),
              bridged);
    ++report.converted_empty_categories;
  }
  for (int i = 0; i < g.num_terminals(); ++i) {
    if (g.terminal(i).empty) {
      report.loss_details.push_back(
          {g.Describe(NodeRef::Terminal(i)),
           "empty category is neither a dropped pronoun nor a bridge"});
    }
  }

  // Phrases, innermost first.
  while (g.num_phrases() > 0) {
    int p = 0;
    for (int q = 1; q < g.num_phrases(); ++q) {
      const Phrase &a = g.phrase(q), &b = g.phrase(p);
      if (a.end - a.start < b.end - b.start ||
          (a.end - a.start == b.end - b.start && a.start < b.start)) {
        p = q;
      }
    }
    const NodeRef self = NodeRef::Phrase(p);
    const std::string where = g.Describe(self);
    const auto head_edge = g.HeadEdge(self);
    const auto dep_edges = g.DependentEdges(self);
    if (!head_edge && dep_edges.empty()) {
      report.loss_details.push_back({where, "phrase has no edges"});
      g.RemovePhrase(p);
      continue;
    }
    NodeRef root;
    try {
      root = SubgraphRoot(g, p);
    } catch (const IllFormedPhraseError &e) {
      report.loss_details.push_back({where, e.what()});
      g.RemovePhrase(p);
      continue;
    }
    if (head_edge && g.HeadEdge(root)) {
      report.loss_details.push_back({where, "phrase root already has a head"});
      g.RemovePhrase(p);
      continue;
    }
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
      Edge edge = g.edges()[e];
      bool touched = false;
      if (edge.dependent == self) {
        edge.dependent = root;
        edge.label.dependent_expansion = true;
        touched = true;
      }
      if (edge.head == self) {
        edge.head = root;
        edge.label.head_expansion = true;
        touched = true;
      }
      if (touched) g.SetEdge(e, edge);
    }
    g.RemovePhrase(p);
    ++report.converted_phrases;
  }
  return out;
}

void ExpandBridges(HybridGraph *graph) {
  HybridGraph &g = *graph;
  // Bridges: dependent -> EC -> head.
  while (true) {
    int e = -1;
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
      if (g.edges()[i].label.has_bridge()) {
        e = i;
        break;
      }
    }
    if (e < 0) break;
    const Edge edge = g.edges()[e];
    g.RemoveEdge(e);
    const int first = Yield(g, edge.dependent).front();
    Terminal ec;
    ec.empty = true;
    ec.morph.pos = edge.label.bridge_pos;
    ec.morph.form = kElidedForm;
    const int at = g.InsertTerminal(first - 1, std::move(ec), false);
    auto shift = [&](NodeRef n) {
      if (n.is_terminal() && n.index >= at) ++n.index;
      return n;
    };
    Label lower(edge.label.base);
    lower.dependent_expansion = edge.label.dependent_expansion;
    Label upper(edge.label.bridge_relation);
    upper.head_expansion = edge.label.head_expansion;
    g.AddEdge(shift(edge.dependent), NodeRef::Terminal(at), lower);
    g.AddEdge(NodeRef::Terminal(at), shift(edge.head), upper);
  }
}

void RestoreDroppedPronouns(HybridGraph *graph) {
  HybridGraph &g = *graph;
  for (int i = g.num_terminals() - 1; i >= 0; --i) {
    if (!NeedsDroppedPronoun(g, i)) continue;
    Terminal pron;
    pron.empty = true;
    pron.morph.pos = "PRON";
    pron.morph.form = DroppedPronounForm(g.terminal(i).morph);
    const int at = g.InsertTerminal(i, std::move(pron), true);
    g.AddEdge(NodeRef::Terminal(at), NodeRef::Terminal(i), Label("subj"));
  }
}

void MaterializePhrases(HybridGraph *graph, std::vector<LossDetail> *errors) {
  HybridGraph &g = *graph;
  auto log = [&](const std::string &where, const std::string &why) {
    if (errors) errors->push_back({where, why});
  };
  // Phrases from expansion flags.
  std::set<int> roots;
  for (const Edge &e : g.edges()) {
    if (e.label.dependent_expansion && e.dependent.is_terminal()) {
      roots.insert(e.dependent.index);
    }
    if (e.label.head_expansion && e.head.is_terminal()) {
      roots.insert(e.head.index);
    }
  }
  struct Planned {
    int root;
    Phrase span;
  };
  std::vector<Planned> planned;
  for (int r : roots) {
    std::vector<int> y = PhraseYield(g, r);
    if (y.back() - y.front() + 1 != static_cast<int>(y.size())) {
      log(g.Describe(NodeRef::Terminal(r)),
          "expanded subgraph is not contiguous; labels kept verbatim");
      continue;
    }
    planned.push_back(
        {r, Phrase{y.front(), y.back(), PhraseTagFor(g, y.front(), y.back(), r)}});
  }
  for (const Planned &plan : planned) {
    bool overlaps = false;
    for (const Phrase &p : g.phrases()) {
      const bool disjoint = p.end < plan.span.start || plan.span.end < p.start;
      if (!disjoint && !p.Contains(plan.span) && !plan.span.Contains(p)) {
        overlaps = true;
      }
    }
    const NodeRef root = NodeRef::Terminal(plan.root);
    if (overlaps) {
      log(g.Describe(root), "restored phrase would cross another phrase");
      continue;
    }
    const int p = g.AddPhrase(plan.span.start, plan.span.end, plan.span.tag);
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
      Edge edge = g.edges()[e];
      bool touched = false;
      if (edge.dependent == root && edge.label.dependent_expansion) {
        edge.dependent = NodeRef::Phrase(p);
        edge.label.dependent_expansion = false;
        touched = true;
      }
      if (edge.head == root && edge.label.head_expansion) {
        edge.head = NodeRef::Phrase(p);
        edge.label.head_expansion = false;
        touched = true;
      }
      if (touched) g.SetEdge(e, edge);
    }
  }
}

HybridGraph FromPureDependency(const HybridGraph &pure,
                               std::vector<LossDetail> *errors,
                               const Tagset &tags) {
  HybridGraph g = pure;
  ExpandBridges(&g);
  RestoreDroppedPronouns(&g);
  MaterializePhrases(&g, errors);
  if (auto v = Validate(g, tags); !v.empty()) {
    for (const Violation &x : v) {
      if (errors) errors->push_back({x.rule, x.detail});
    }
  }
  return g;
}

bool IsConvertible(const HybridGraph &hybrid, const Tagset &tags) {
  PureConversion c = ToPureDependency(hybrid, tags);
  if (c.report.lossy()) return false;
  std::vector<LossDetail> errors;
  HybridGraph back = FromPureDependency(c.pure, &errors, tags);
  return errors.empty() && back == hybrid;
}

}  // namespace hybrid
