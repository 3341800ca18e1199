#ifndef HYBRID_PRONOUNS_H_
#define HYBRID_PRONOUNS_H_

#include <string>

#include "hybrid/morphology.h"

namespace hybrid {

// Independent subject pronoun for a verb's person/gender/number.
// Missing phi defaults to 3MS; 1st person dual uses the plural form.
std::string DroppedPronounForm(const MorphSegment &verb);
std::string PronounForm(const std::string &person, const std::string &gender,
                        const std::string &number);

}  // namespace hybrid

#endif  // HYBRID_PRONOUNS_H_
