#include "hybrid/oracle.h"

#include <algorithm>
#include <optional>

#include "hybrid/error.h"
#include "hybrid/evaluation.h"
#include "hybrid/pronouns.h"

namespace hybrid {
namespace {

// Aligns the working graph of a configuration with the gold graph.
// Segments align by ordinal; an inserted empty category aligns with the
// gold terminal directly after its predecessor's image.
class Alignment {
 public:
  Alignment(const HybridGraph &work, const HybridGraph &gold)
      : work_(work), gold_(gold) {
    std::vector<int> gold_segments;
    for (int i = 0; i < gold.num_terminals(); ++i) {
      if (!gold.terminal(i).empty) gold_segments.push_back(i);
    }
    w2g_.assign(work.num_terminals(), -1);
    g2w_.assign(gold.num_terminals(), -1);
    int ordinal = 0;
    for (int i = 0; i < work.num_terminals(); ++i) {
      int target = -1;
      if (!work.terminal(i).empty) {
        if (ordinal < static_cast<int>(gold_segments.size())) {
          target = gold_segments[ordinal];
        }
        ++ordinal;
      } else {
        const int prev = i == 0 ? -1 : w2g_[i - 1];
        const int cand = i == 0 ? 0 : (prev < 0 ? -1 : prev + 1);
        if (cand >= 0 && cand < gold.num_terminals() &&
            gold.terminal(cand).empty && g2w_[cand] < 0 &&
            gold.terminal(cand).morph.pos == work.terminal(i).morph.pos) {
          target = cand;
        }
      }
      w2g_[i] = target;
      if (target >= 0) g2w_[target] = i;
    }
    wp2gp_.assign(work.num_phrases(), -1);
    gp2wp_.assign(gold.num_phrases(), -1);
    for (int p = 0; p < work.num_phrases(); ++p) {
      const Phrase &x = work.phrase(p);
      const int a = w2g_[x.start], b = w2g_[x.end];
      if (a < 0 || b < 0) continue;
      for (int q = 0; q < gold.num_phrases(); ++q) {
        const Phrase &y = gold.phrase(q);
        if (gp2wp_[q] < 0 && y.start == a && y.end == b && y.tag == x.tag) {
          wp2gp_[p] = q;
          gp2wp_[q] = p;
          break;
        }
      }
    }
  }

  std::optional<NodeRef> ToGold(NodeRef n) const {
    int v = n.is_terminal() ? w2g_[n.index] : wp2gp_[n.index];
    if (v < 0) return std::nullopt;
    return NodeRef{n.kind, v};
  }
  std::optional<NodeRef> ToWork(NodeRef n) const {
    int v = n.is_terminal() ? g2w_[n.index] : gp2wp_[n.index];
    if (v < 0) return std::nullopt;
    return NodeRef{n.kind, v};
  }
  bool Built(const Edge &gold_edge) const {
    auto d = ToWork(gold_edge.dependent), h = ToWork(gold_edge.head);
    if (!d || !h) return false;
    for (const Edge &e : work_.edges()) {
      if (e.dependent == *d && e.head == *h && e.label == gold_edge.label) {
        return true;
      }
    }
    return false;
  }
  bool Inserted(int gold_terminal) const { return g2w_[gold_terminal] >= 0; }
  bool PhraseBuilt(int gold_phrase) const { return gp2wp_[gold_phrase] >= 0; }
  int WorkToGoldTerminal(int i) const { return w2g_[i]; }

 private:
  const HybridGraph &work_;
  const HybridGraph &gold_;
  std::vector<int> w2g_, g2w_, wp2gp_, gp2wp_;
};

class OracleView {
 public:
  OracleView(const Configuration &c, const HybridGraph &gold,
             const Tagset &tags)
      : c_(c), gold_(gold), tags_(tags), align_(c.graph(), gold) {
    roots_.assign(gold.num_phrases(), std::nullopt);
    for (int p = 0; p < gold.num_phrases(); ++p) {
      try {
        roots_[p] = SubgraphRoot(gold, p);
      } catch (const Error &) {
      }
    }
  }

  Transition Next() const {
    const auto s1 = c_.S(1), s2 = c_.S(2), s3 = c_.S(3);
    if (s1 && s2) {
      if (auto t = EdgeBetween(*s1, *s2)) return *t;
      if (Complete(*s2) && !Complete(*s1)) return Transition::Reduce(2);
    }
    if (s1) {
      if (auto t = PhraseOver(*s1)) return *t;
      if (auto t = EmptyAfter(*s1)) return *t;
      if (Complete(*s1)) return Transition::Reduce(1);
    }
    if (!c_.queue().empty()) return Transition::Shift();
    if (s1 && s3 && GoldEdge(*s1, *s3)) return Transition::Reduce(2);
    return Transition::Reduce(1);
  }

 private:
  // Unbuilt gold edge between two working nodes, oriented as in gold.
  std::optional<Edge> GoldEdge(NodeRef a, NodeRef b) const {
    auto ga = align_.ToGold(a), gb = align_.ToGold(b);
    if (!ga || !gb) return std::nullopt;
    for (const Edge &e : gold_.edges()) {
      const bool match = (e.dependent == *ga && e.head == *gb) ||
                         (e.dependent == *gb && e.head == *ga);
      if (match && !align_.Built(e)) return e;
    }
    return std::nullopt;
  }

  std::optional<Transition> EdgeBetween(NodeRef s1, NodeRef s2) const {
    auto e = GoldEdge(s1, s2);
    if (!e) return std::nullopt;
    auto g1 = align_.ToGold(s1);
    Transition t = e->head == *g1 ? Transition::Left(e->label)
                                  : Transition::Right(e->label);
    if (t.type == TransitionType::kLeft && PendingRight(*g1)) {
      return std::nullopt;
    }
    if (!IsLegal(c_, t, TransitionSet::kFull, tags_)) return std::nullopt;
    return t;
  }

  int GoldPosition(NodeRef g) const {
    return g.is_terminal() ? g.index : gold_.phrase(g.index).start;
  }
  int GoldEnd(NodeRef g) const {
    return g.is_terminal() ? g.index : gold_.phrase(g.index).end;
  }

  // Unattached gold dependents after the node.
  bool PendingRight(NodeRef g) const {
    for (const Edge &e : gold_.edges()) {
      if (e.head == g && GoldPosition(e.dependent) > GoldEnd(g) &&
          !align_.Built(e)) {
        return true;
      }
    }
    return false;
  }

  bool Complete(NodeRef w) const {
    auto g = align_.ToGold(w);
    if (!g) return true;
    for (const Edge &e : gold_.edges()) {
      if ((e.dependent == *g || e.head == *g) && !align_.Built(e)) {
        return false;
      }
    }
    if (g->is_terminal()) {
      for (int p = 0; p < gold_.num_phrases(); ++p) {
        if (roots_[p] == *g && !align_.PhraseBuilt(p)) return false;
      }
      const int next = g->index + 1;
      if (next < gold_.num_terminals() && gold_.terminal(next).empty &&
          !align_.Inserted(next)) {
        return false;
      }
    }
    return true;
  }

  std::optional<Transition> PhraseOver(NodeRef s1) const {
    if (!s1.is_terminal()) return std::nullopt;
    auto g = align_.ToGold(s1);
    if (!g) return std::nullopt;
    std::vector<int> yield = Yield(c_.graph(), s1);
    std::vector<int> mapped;
    for (int i : yield) {
      int m = align_.WorkToGoldTerminal(i);
      if (m < 0) return std::nullopt;
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped.back() - mapped.front() + 1 != static_cast<int>(mapped.size())) {
      return std::nullopt;
    }
    for (int p = 0; p < gold_.num_phrases(); ++p) {
      const Phrase &x = gold_.phrase(p);
      if (align_.PhraseBuilt(p) || roots_[p] != *g) continue;
      if (x.start != mapped.front() || x.end != mapped.back()) continue;
      Transition t = Transition::Phrase(x.tag);
      if (IsLegal(c_, t, TransitionSet::kFull, tags_)) return t;
    }
    return std::nullopt;
  }

  std::optional<Transition> EmptyAfter(NodeRef s1) const {
    if (!s1.is_terminal()) return std::nullopt;
    auto g = align_.ToGold(s1);
    if (!g) return std::nullopt;
    const int next = g->index + 1;
    if (next >= gold_.num_terminals() || !gold_.terminal(next).empty ||
        align_.Inserted(next)) {
      return std::nullopt;
    }
    const Terminal &ec = gold_.terminal(next);
    const Terminal &anchor = gold_.terminal(g->index);
    bool dropped_subject = false;
    if (ec.morph.pos == "PRON" &&
        ec.morph.form == DroppedPronounForm(anchor.morph)) {
      for (const Edge &e : gold_.edges()) {
        if (e.dependent == NodeRef::Terminal(next) && e.head == *g &&
            e.label == Label("subj")) {
          dropped_subject = true;
        }
      }
    }
    if (dropped_subject && IsLegal(c_, Transition::Pronoun(), TransitionSet::kFull, tags_)) {
      return Transition::Pronoun();
    }
    Transition t = Transition::Empty(ec.morph.pos);
    if (IsLegal(c_, t, TransitionSet::kFull, tags_)) return t;
    return std::nullopt;
  }

  const Configuration &c_;
  const HybridGraph &gold_;
  const Tagset &tags_;
  Alignment align_;
  std::vector<std::optional<NodeRef>> roots_;
};

}  // namespace

Transition OracleNext(const Configuration &config, const HybridGraph &gold,
                      const Tagset &tags) {
  Transition t = OracleView(config, gold, tags).Next();
  if (IsLegal(config, t, TransitionSet::kFull, tags)) return t;
  if (IsLegal(config, Transition::Reduce(1), TransitionSet::kFull, tags)) {
    return Transition::Reduce(1);
  }
  return Transition::Shift();
}

OracleOutcome OracleSequence(const HybridGraph &gold, const Tagset &tags) {
  OracleOutcome out;
  Configuration c = Configuration::Initial(gold.Segments());
  const int budget = StepBudget(gold.num_terminals());
  while (!c.IsTerminal()) {
    if (static_cast<int>(out.sequence.size()) >= budget) {
      out.budget_exhausted = true;
      break;
    }
    Transition t = OracleNext(c, gold, tags);
    c = Apply(c, t, TransitionSet::kFull, tags);
    out.sequence.push_back(std::move(t));
  }
  out.replayed = c.graph();
  for (int i : UnmatchedGoldEdges(gold, out.replayed)) {
    out.uncovered_edges.push_back(gold.edges()[i]);
  }
  EvalReport r = Elas(gold, out.replayed);
  out.reachable = !out.budget_exhausted && r.true_positives == r.gold_count &&
                  r.true_positives == r.predicted_count;
  return out;
}

}  // namespace hybrid
