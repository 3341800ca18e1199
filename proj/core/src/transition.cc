#include "hybrid/transition.h"

#include <algorithm>

#include "hybrid/error.h"
#include "hybrid/pronouns.h"

namespace hybrid {
namespace {

std::string Inner(std::string_view text, std::string_view name) {
  if (text.size() < name.size() + 2 || text.substr(0, name.size()) != name ||
      text[name.size()] != '(' || text.back() != ')') {
    return {};
  }
  return std::string(text.substr(name.size() + 1,
                                 text.size() - name.size() - 2));
}

// An edge between a phrase and a node inside its span would make the
// phrase part of its own yield.
bool Nested(const HybridGraph &g, NodeRef a, NodeRef b) {
  auto covers = [&](NodeRef p, NodeRef x) {
    if (!p.is_phrase()) return false;
    const Phrase &ph = g.phrase(p.index);
    if (x.is_terminal()) return ph.Contains(x.index);
    return ph.Contains(g.phrase(x.index)) || g.phrase(x.index).Contains(ph);
  };
  return covers(a, b) || covers(b, a);
}

bool CanAttach(const Configuration &c, NodeRef dep, NodeRef head,
               const Label &label, const Tagset &tags) {
  const HybridGraph &g = c.graph();
  if (dep == head) return false;
  if (!tags.IsRelation(label.base)) return false;
  if (label.has_bridge() &&
      (!tags.IsPos(label.bridge_pos) || !tags.IsRelation(label.bridge_relation))) {
    return false;
  }
  if (g.HeadEdge(dep)) return false;
  if (g.Dominates(dep, head)) return false;
  return !Nested(g, dep, head);
}

}  // namespace

std::string Transition::ToString() const {
  switch (type) {
    case TransitionType::kShift: return "SHIFT";
    case TransitionType::kReduce: return "REDUCE(" + std::to_string(n) + ")";
    case TransitionType::kLeft: return "LEFT(" + label.ToString() + ")";
    case TransitionType::kRight: return "RIGHT(" + label.ToString() + ")";
    case TransitionType::kEmpty: return "EMPTY(" + param + ")";
    case TransitionType::kPronoun: return "PRON";
    case TransitionType::kPhrase: return "PHRASE(" + param + ")";
  }
  return "?";
}

Transition Transition::Parse(std::string_view text) {
  while (!text.empty() && isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  while (!text.empty() && isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  if (text == "SHIFT") return Shift();
  if (text == "PRON") return Pronoun();
  if (text == "REDUCE(1)") return Reduce(1);
  if (text == "REDUCE(2)") return Reduce(2);
  if (auto r = Inner(text, "LEFT"); !r.empty()) return Left(Label::Parse(r));
  if (auto r = Inner(text, "RIGHT"); !r.empty()) return Right(Label::Parse(r));
  if (auto p = Inner(text, "EMPTY"); !p.empty()) return Empty(p);
  if (auto z = Inner(text, "PHRASE"); !z.empty()) return Phrase(z);
  throw ParseError("unknown transition '" + std::string(text) + "'");
}

bool IsSubjectRelation(const std::string &relation) {
  return relation == "subj" || relation == "subjx" || relation == "pass";
}

Configuration Configuration::Initial(const std::vector<MorphSegment> &sentence) {
  if (sentence.empty()) throw Error("cannot parse an empty sentence");
  Configuration c;
  c.graph_ = HybridGraph(sentence);
  for (int i = 0; i < c.graph_.num_terminals(); ++i) c.queue_.push_back(i);
  return c;
}

std::optional<NodeRef> Configuration::S(int k) const {
  if (k < 1 || k > static_cast<int>(stack_.size())) return std::nullopt;
  return stack_[stack_.size() - k];
}

std::optional<int> Configuration::Q(int k) const {
  if (k < 1 || k > static_cast<int>(queue_.size())) return std::nullopt;
  return queue_[k - 1];
}

void Configuration::ShiftIndices(int inserted_at) {
  for (int &q : queue_) {
    if (q >= inserted_at) ++q;
  }
  for (NodeRef &s : stack_) {
    if (s.is_terminal() && s.index >= inserted_at) ++s.index;
  }
}

bool IsLegal(const Configuration &c, const Transition &t, TransitionSet set,
             const Tagset &tags) {
  const size_t depth = c.stack().size();
  const HybridGraph &g = c.graph();
  switch (t.type) {
    case TransitionType::kShift:
      return !c.queue().empty();
    case TransitionType::kReduce:
      return (t.n == 1 || t.n == 2) && depth >= static_cast<size_t>(t.n);
    case TransitionType::kLeft:
      return depth >= 2 && CanAttach(c, *c.S(2), *c.S(1), t.label, tags);
    case TransitionType::kRight:
      return depth >= 2 && CanAttach(c, *c.S(1), *c.S(2), t.label, tags);
    default:
      break;
  }
  if (set == TransitionSet::kPure || depth == 0) return false;
  const NodeRef s1 = *c.S(1);
  if (!s1.is_terminal()) return false;
  switch (t.type) {
    case TransitionType::kEmpty:
      return tags.IsPos(t.param);
    case TransitionType::kPronoun: {
      if (g.terminal(s1.index).morph.pos != "V") return false;
      for (int e : g.DependentEdges(s1)) {
        if (IsSubjectRelation(g.edges()[e].label.base)) return false;
      }
      return true;
    }
    case TransitionType::kPhrase: {
      if (!tags.IsPhrase(t.param) || g.HeadEdge(s1)) return false;
      std::vector<int> y = Yield(g, s1);
      if (y.back() - y.front() + 1 != static_cast<int>(y.size())) return false;
      const Phrase span{y.front(), y.back(), t.param};
      for (const Phrase &p : g.phrases()) {
        if (p == span) return false;
        const bool disjoint = p.end < span.start || span.end < p.start;
        if (!disjoint && !p.Contains(span) && !span.Contains(p)) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

Configuration Apply(const Configuration &c, const Transition &t,
                    TransitionSet set, const Tagset &tags) {
  if (!IsLegal(c, t, set, tags)) {
    throw IllegalTransitionError("illegal transition " + t.ToString());
  }
  Configuration next = c;
  switch (t.type) {
    case TransitionType::kShift:
      next.stack_.push_back(NodeRef::Terminal(next.queue_.front()));
      next.queue_.erase(next.queue_.begin());
      break;
    case TransitionType::kReduce:
      next.stack_.erase(next.stack_.end() - t.n);
      break;
    case TransitionType::kLeft:
      next.graph_.AddEdge(*c.S(2), *c.S(1), t.label);
      break;
    case TransitionType::kRight:
      next.graph_.AddEdge(*c.S(1), *c.S(2), t.label);
      break;
    case TransitionType::kEmpty: {
      Terminal e;
      e.empty = true;
      e.morph.pos = t.param;
      e.morph.form = "*";
      const int at = next.graph_.InsertTerminal(c.S(1)->index, std::move(e),
                                                /*extend_at_anchor=*/false);
      next.ShiftIndices(at);
      next.stack_.push_back(NodeRef::Terminal(at));
      break;
    }
    case TransitionType::kPronoun: {
      const int verb = c.S(1)->index;
      Terminal e;
      e.empty = true;
      e.morph.pos = "PRON";
      e.morph.form = DroppedPronounForm(c.graph().terminal(verb).morph);
      const int at = next.graph_.InsertTerminal(verb, std::move(e),
                                                /*extend_at_anchor=*/true);
      next.ShiftIndices(at);
      next.graph_.AddEdge(NodeRef::Terminal(at), NodeRef::Terminal(verb),
                          Label("subj"));
      next.stack_.push_back(NodeRef::Terminal(at));
      break;
    }
    case TransitionType::kPhrase: {
      auto [a, b] = SubgraphSpan(c.graph(), *c.S(1));
      const int p = next.graph_.AddPhrase(a, b, t.param);
      next.stack_.push_back(NodeRef::Phrase(p));
      break;
    }
  }
  return next;
}

Configuration Replay(const std::vector<MorphSegment> &sentence,
                     const std::vector<Transition> &sequence,
                     TransitionSet set, const Tagset &tags) {
  Configuration c = Configuration::Initial(sentence);
  for (const Transition &t : sequence) c = Apply(c, t, set, tags);
  return c;
}

}  // namespace hybrid
