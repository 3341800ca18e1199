#ifndef HYBRID_TRANSITION_H_
#define HYBRID_TRANSITION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/graph.h"
#include "hybrid/tagset.h"

namespace hybrid {

enum class TransitionType {
  kShift,    // Π
  kReduce,   // Λ(n)
  kLeft,     // Φ(r): head s1, dependent s2
  kRight,    // Ψ(r): head s2, dependent s1
  kEmpty,    // Θ(p)
  kPronoun,  // Γ
  kPhrase,   // Ω(z)
};

struct Transition {
  TransitionType type = TransitionType::kShift;
  int n = 0;          // reduce depth
  Label label;        // Φ/Ψ relation
  std::string param;  // Θ POS tag or Ω phrase tag

  static Transition Shift() { return {}; }
  static Transition Reduce(int n) { return {TransitionType::kReduce, n, {}, {}}; }
  static Transition Left(Label r) {
    return {TransitionType::kLeft, 0, std::move(r), {}};
  }
  static Transition Right(Label r) {
    return {TransitionType::kRight, 0, std::move(r), {}};
  }
  static Transition Left(const std::string &r) { return Left(Label(r)); }
  static Transition Right(const std::string &r) { return Right(Label(r)); }
  static Transition Empty(std::string pos) {
    return {TransitionType::kEmpty, 0, {}, std::move(pos)};
  }
  static Transition Pronoun() { return {TransitionType::kPronoun, 0, {}, {}}; }
  static Transition Phrase(std::string tag) {
    return {TransitionType::kPhrase, 0, {}, std::move(tag)};
  }

  // "SHIFT", "REDUCE(1)", "LEFT(rel)", "RIGHT(rel)", "EMPTY(pos)", "PRON",
  // "PHRASE(tag)".
  std::string ToString() const;
  static Transition Parse(std::string_view text);

  auto operator<=>(const Transition &) const = default;
  bool operator==(const Transition &) const = default;
};

// Pure restricts parsing to {Π, Λ, Φ, Ψ}.
enum class TransitionSet { kFull, kPure };

class Configuration {
 public:
  // Throws Error on an empty sentence.
  static Configuration Initial(const std::vector<MorphSegment> &sentence);

  const std::vector<int> &queue() const { return queue_; }
  // Bottom first; back() is s1.
  const std::vector<NodeRef> &stack() const { return stack_; }
  const HybridGraph &graph() const { return graph_; }

  // s_k and q_k, 1-based; empty when absent.
  std::optional<NodeRef> S(int k) const;
  std::optional<int> Q(int k) const;
  bool IsTerminal() const { return queue_.empty() && stack_.empty(); }

 private:
  friend Configuration Apply(const Configuration &, const Transition &,
                             TransitionSet, const Tagset &);
  void ShiftIndices(int inserted_at);

  std::vector<int> queue_;
  std::vector<NodeRef> stack_;
  HybridGraph graph_;
};

bool IsLegal(const Configuration &c, const Transition &t,
             TransitionSet set = TransitionSet::kFull,
             const Tagset &tags = Tagset::Default());

// Returns a new configuration. Throws IllegalTransitionError.
Configuration Apply(const Configuration &c, const Transition &t,
                    TransitionSet set = TransitionSet::kFull,
                    const Tagset &tags = Tagset::Default());

inline bool IsTerminal(const Configuration &c) { return c.IsTerminal(); }

// Relations that count as a verb's subject for Γ and pronoun restoration.
bool IsSubjectRelation(const std::string &relation);

// Replays a sequence from the initial configuration of `sentence`.
Configuration Replay(const std::vector<MorphSegment> &sentence,
                     const std::vector<Transition> &sequence,
                     TransitionSet set = TransitionSet::kFull,
                     const Tagset &tags = Tagset::Default());

}  // namespace hybrid

#endif  // HYBRID_TRANSITION_H_
