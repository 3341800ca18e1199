#include "hybrid/evaluation.h"

#include <cstdio>
#include <map>
#include <numeric>

#include "hybrid/error.h"

namespace hybrid {
namespace {

Ratio Reduce(int64_t num, int64_t den) {
  if (den == 0) return {0, 1};
  int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

class VertexKeys {
 public:
  VertexKeys(const HybridGraph &g, const ElasOptions &options) : g_(g) {
    int ordinal = 0;
    terminal_.resize(g.num_terminals());
    for (int i = 0; i < g.num_terminals(); ++i) {
      const Terminal &t = g.terminal(i);
      if (!t.empty) {
        terminal_[i] = "s" + std::to_string(ordinal++);
      } else {
        terminal_[i] = "e" + t.morph.pos + "/" + t.morph.form;
        if (options.strict_empty_categories) {
          terminal_[i] += "@" + std::to_string(ordinal);
        }
      }
    }
  }

  std::string Key(NodeRef n) const {
    if (n.is_terminal()) return terminal_[n.index];
    const Phrase &p = g_.phrase(n.index);
    std::string key = "p" + p.tag + "[";
    for (int i = p.start; i <= p.end; ++i) key += terminal_[i] + " ";
    return key + "]";
  }

  std::string EdgeKey(const Edge &e) const {
    return Key(e.dependent) + ">" + Key(e.head) + ":" + e.label.ToString();
  }

 private:
  const HybridGraph &g_;
  std::vector<std::string> terminal_;
};

void CheckSameSegments(const HybridGraph &a, const HybridGraph &b) {
  std::vector<MorphSegment> x = a.Segments(), y = b.Segments();
  bool same = x.size() == y.size();
  for (size_t i = 0; same && i < x.size(); ++i) same = x[i].form == y[i].form;
  if (!same) throw Error("gold and predicted segment sequences differ");
}

std::vector<int> Match(const HybridGraph &gold, const HybridGraph &pred,
                       const ElasOptions &options, EvalReport *report) {
  CheckSameSegments(gold, pred);
  VertexKeys gk(gold, options), pk(pred, options);
  std::map<std::string, int> available;
  for (const Edge &e : pred.edges()) ++available[pk.EdgeKey(e)];
  std::vector<int> unmatched;
  int64_t tp = 0;
  for (size_t i = 0; i < gold.edges().size(); ++i) {
    auto it = available.find(gk.EdgeKey(gold.edges()[i]));
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++tp;
    } else {
      unmatched.push_back(static_cast<int>(i));
    }
  }
  if (report) {
    report->true_positives = tp;
    report->gold_count = static_cast<int64_t>(gold.edges().size());
    report->predicted_count = static_cast<int64_t>(pred.edges().size());
  }
  return unmatched;
}

}  // namespace

Ratio EvalReport::precision() const {
  if (predicted_count == 0) return {true_positives == 0 ? 1 : 0, 1};
  return Reduce(true_positives, predicted_count);
}

Ratio EvalReport::recall() const {
  if (gold_count == 0) return {true_positives == 0 ? 1 : 0, 1};
  return Reduce(true_positives, gold_count);
}

Ratio EvalReport::f1() const {
  Ratio p = precision(), r = recall();
  if (p.num == 0 && r.num == 0) return {0, 1};
  return Reduce(2 * p.num * r.num, p.num * r.den + r.num * p.den);
}

std::string EvalReport::KeyValues() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "precision=%.6f\nrecall=%.6f\nf1=%.6f\ntp=%lld\ngold=%lld\n"
                "pred=%lld\n",
                precision().value(), recall().value(), f1().value(),
                static_cast<long long>(true_positives),
                static_cast<long long>(gold_count),
                static_cast<long long>(predicted_count));
  return buf;
}

EvalReport Elas(const HybridGraph &gold, const HybridGraph &predicted,
                ElasOptions options) {
  EvalReport r;
  Match(gold, predicted, options, &r);
  return r;
}

std::vector<int> UnmatchedGoldEdges(const HybridGraph &gold,
                                    const HybridGraph &predicted,
                                    ElasOptions options) {
  return Match(gold, predicted, options, nullptr);
}

EvalReport LasCounts(const HybridGraph &gold, const HybridGraph &predicted) {
  CheckSameSegments(gold, predicted);
  ElasOptions options;
  VertexKeys gk(gold, options), pk(predicted, options);
  std::vector<std::string> pred_attach;
  for (int i = 0; i < predicted.num_terminals(); ++i) {
    if (predicted.terminal(i).empty) continue;
    auto e = predicted.HeadEdge(NodeRef::Terminal(i));
    pred_attach.push_back(e ? pk.EdgeKey(predicted.edges()[*e]) : "");
  }
  EvalReport r;
  int ordinal = 0;
  for (int i = 0; i < gold.num_terminals(); ++i) {
    if (gold.terminal(i).empty) continue;
    auto e = gold.HeadEdge(NodeRef::Terminal(i));
    if (e) {
      ++r.gold_count;
      if (pred_attach[ordinal] == gk.EdgeKey(gold.edges()[*e])) {
        ++r.true_positives;
      }
    }
    if (!pred_attach[ordinal].empty()) ++r.predicted_count;
    ++ordinal;
  }
  return r;
}

Ratio Las(const HybridGraph &gold, const HybridGraph &predicted) {
  return LasCounts(gold, predicted).recall();
}

EvalReport Parseval(const std::vector<Phrase> &gold,
                    const std::vector<Phrase> &predicted) {
  std::map<Phrase, int> available;
  for (const Phrase &p : predicted) ++available[p];
  EvalReport r;
  r.gold_count = static_cast<int64_t>(gold.size());
  r.predicted_count = static_cast<int64_t>(predicted.size());
  for (const Phrase &p : gold) {
    auto it = available.find(p);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++r.true_positives;
    }
  }
  return r;
}

}  // namespace hybrid
