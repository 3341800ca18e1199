#ifndef HYBRID_GRAPH_H_
#define HYBRID_GRAPH_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hybrid/morphology.h"
#include "hybrid/tagset.h"

namespace hybrid {

enum class NodeKind { kTerminal, kPhrase };

// Addresses a terminal by its position in the ordered terminal sequence,
// or a phrase by its position in the phrase list.
struct NodeRef {
  NodeKind kind = NodeKind::kTerminal;
  int index = 0;

  static NodeRef Terminal(int i) { return {NodeKind::kTerminal, i}; }
  static NodeRef Phrase(int i) { return {NodeKind::kPhrase, i}; }
  bool is_terminal() const { return kind == NodeKind::kTerminal; }
  bool is_phrase() const { return kind == NodeKind::kPhrase; }

  auto operator<=>(const NodeRef &) const = default;
  bool operator==(const NodeRef &) const = default;
};

// A relation, possibly enriched with phrase-expansion flags and an
// ellipsis bridge. Serialized as "+r", "r+", "+r+", "r1|pos|r2" and
// combinations such as "+link|N|circ".
struct Label {
  std::string base;
  bool dependent_expansion = false;
  bool head_expansion = false;
  std::string bridge_pos;       // empty when there is no bridge
  std::string bridge_relation;  // relation from the elided node onward

  Label() = default;
  explicit Label(std::string relation) : base(std::move(relation)) {}

  bool has_bridge() const { return !bridge_pos.empty(); }
  bool is_plain() const {
    return !dependent_expansion && !head_expansion && !has_bridge();
  }
  std::string ToString() const;
  // Throws ParseError on malformed text.
  static Label Parse(std::string_view text);

  auto operator<=>(const Label &) const = default;
  bool operator==(const Label &) const = default;
};

struct Edge {
  NodeRef dependent;
  NodeRef head;
  Label label;

  auto operator<=>(const Edge &) const = default;
  bool operator==(const Edge &) const = default;
};

// Inclusive span over terminal indices.
struct Phrase {
  int start = 0;
  int end = 0;
  std::string tag;

  bool Contains(int i) const { return start <= i && i <= end; }
  bool Contains(const Phrase &o) const {
    return start <= o.start && o.end <= end;
  }
  auto operator<=>(const Phrase &) const = default;
  bool operator==(const Phrase &) const = default;
};

// A morphological segment or an empty category. Empty categories keep
// their POS and reconstructed form in the morph record.
struct Terminal {
  MorphSegment morph;
  bool empty = false;
  bool reference = false;

  bool operator==(const Terminal &) const = default;
};

struct Violation {
  std::string rule;
  std::string detail;
};

class HybridGraph {
 public:
  HybridGraph() = default;
  explicit HybridGraph(const std::vector<MorphSegment> &segments);

  // Construction.
  int AddSegment(MorphSegment seg, bool reference = false);
  int AddEmpty(std::string pos, std::string form);
  int AddTerminal(Terminal t);
  // Inserts t after terminal `anchor` (-1 = sentence initial), shifting
  // later indices. Phrases containing the anchor and extending past it
  // grow; with extend_at_anchor, phrases ending at the anchor grow too.
  int InsertTerminal(int anchor, Terminal t, bool extend_at_anchor);
  // Removes a terminal and its edges. Phrases shrink; a phrase whose
  // span would become empty is removed with its edges.
  void RemoveTerminal(int i);
  int AddPhrase(int start, int end, std::string tag);
  // Removes a phrase and its edges, renumbering later phrases.
  void RemovePhrase(int i);
  void AddEdge(NodeRef dependent, NodeRef head, Label label);
  void RemoveEdge(int edge_index);
  void SetEdge(int edge_index, Edge edge) { edges_[edge_index] = edge; }

  // Access.
  int num_terminals() const { return static_cast<int>(terminals_.size()); }
  int num_phrases() const { return static_cast<int>(phrases_.size()); }
  int num_segments() const;
  int num_empty() const;
  const std::vector<Terminal> &terminals() const { return terminals_; }
  const std::vector<Phrase> &phrases() const { return phrases_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const Terminal &terminal(int i) const { return terminals_[i]; }
  const Phrase &phrase(int i) const { return phrases_[i]; }
  bool Exists(NodeRef n) const;
  bool IsPure() const { return phrases_.empty() && num_empty() == 0; }
  std::vector<MorphSegment> Segments() const;

  // Edge queries. Throw InvalidReferenceError for unknown nodes.
  std::optional<int> HeadEdge(NodeRef n) const;
  std::vector<int> DependentEdges(NodeRef n) const;
  bool HasEdgeBetween(NodeRef a, NodeRef b) const;
  // True if `descendant` is reachable from `ancestor` by dependent links.
  bool Dominates(NodeRef ancestor, NodeRef descendant) const;

  // Structural form: phrases and edges in canonical order.
  HybridGraph Canonical() const;
  bool operator==(const HybridGraph &other) const;

  std::string Describe(NodeRef n) const;

 private:
  void CheckRef(NodeRef n) const;

  std::vector<Terminal> terminals_;
  std::vector<Phrase> phrases_;
  std::vector<Edge> edges_;
};

// δ: head of a node, empty if headless.
std::optional<NodeRef> HeadOf(const HybridGraph &g, NodeRef n);

// ω: the unique headless unit in the phrase span. Nested phrases act as
// single units. Throws IllFormedPhraseError.
NodeRef SubgraphRoot(const HybridGraph &g, int phrase);

// Terminal indices covered by a node and its transitive dependents,
// sorted. Phrase nodes contribute their span.
std::vector<int> Yield(const HybridGraph &g, NodeRef n);

// φ1, φ2: contiguous interval of the yield. Throws NonProjectiveError.
std::pair<int, int> SubgraphSpan(const HybridGraph &g, NodeRef n);

// Every node's yield is contiguous.
bool IsProjective(const HybridGraph &g);

std::vector<Violation> Validate(const HybridGraph &g,
                                const Tagset &tags = Tagset::Default());

}  // namespace hybrid

#endif  // HYBRID_GRAPH_H_
