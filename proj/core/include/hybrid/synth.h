#ifndef HYBRID_SYNTH_H_
#define HYBRID_SYNTH_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "hybrid/treebank.h"

namespace hybrid {

// Structure mix of a synthetic corpus. "pure-dep" enables nothing;
// otherwise a comma list of +phrases, +ellipsis, +non-projective,
// +disconnected and +residue.
struct SynthProfile {
  bool phrases = false;
  bool ellipsis = false;
  bool nonprojective = false;
  bool disconnected = false;
  bool residue = false;           // phrases without edges (unconvertible)
  double nonprojective_rate = 0.1;
  double residue_rate = 0.05;

  std::string ToString() const;
  // Expected share of graphs that survive a conversion roundtrip.
  double DeclaredConvertibility() const;
};

// Throws Error on an unknown component.
SynthProfile ParseSynthProfile(std::string_view text);

// Graphs carry "# sent_id = ..." and, when injected, "# synth = ..."
// comments naming the injected shape (nonprojective or residue).
// Graph i depends only on (seed, i). Throws Error when count < 1.
TreebankDocument Generate(uint64_t seed, int count,
                          const SynthProfile &profile);

}  // namespace hybrid

#endif  // HYBRID_SYNTH_H_
