#ifndef HYBRID_ORACLE_H_
#define HYBRID_ORACLE_H_

#include <vector>

#include "hybrid/graph.h"
#include "hybrid/transition.h"

namespace hybrid {

struct OracleOutcome {
  std::vector<Transition> sequence;
  bool reachable = false;
  bool budget_exhausted = false;
  std::vector<Edge> uncovered_edges;  // gold edges missing from the replay
  HybridGraph replayed;
};

inline int StepBudget(int terminals) { return 8 * terminals + 16; }

// Next transition towards `gold`. Always legal in `config` unless the
// configuration is terminal.
Transition OracleNext(const Configuration &config, const HybridGraph &gold,
                      const Tagset &tags = Tagset::Default());

OracleOutcome OracleSequence(const HybridGraph &gold,
                             const Tagset &tags = Tagset::Default());

}  // namespace hybrid

#endif  // HYBRID_ORACLE_H_
