#ifndef HYBRID_FEATURE_NOTATION_H_
#define HYBRID_FEATURE_NOTATION_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/location.h"
#include "hybrid/morphology.h"
#include "hybrid/tagset.h"

namespace hybrid {

// Parses one bracketed token annotation such as
// "[w:CONJ+ l:EMPH+ POS:V PERF LEM:hadaY ROOT:hdy 1P PRON:3MP]".
// Segments receive consecutive segment numbers under `location`.
// Throws ParseError naming the offending tag and its offset.
std::vector<MorphSegment> ParseFeatureLine(
    std::string_view text, const Location &location,
    const Tagset &tags = Tagset::Default());

// Inverse of ParseFeatureLine for the segments of one token.
std::string WriteFeatureLine(const std::vector<MorphSegment> &segments);

struct FeatureSentence {
  Location verse;
  std::vector<MorphSegment> segments;
};

// Reads a feature-notation file. Two line layouts are accepted:
//   (c:v:t)<TAB>[tags]             one token per line
//   (c:v:t:s)<TAB>FORM<TAB>[tags]  one segment per line, with its form
// Consecutive lines of the same verse form one sentence. Blank lines and
// '#' comments are skipped.
std::vector<FeatureSentence> ReadFeatureFile(
    std::istream &in, const Tagset &tags = Tagset::Default());

}  // namespace hybrid

#endif  // HYBRID_FEATURE_NOTATION_H_
