#include "hybrid/pronouns.h"

namespace hybrid {

std::string PronounForm(const std::string &person, const std::string &gender,
                        const std::string &number) {
  const std::string p = person.empty() ? "3" : person;
  const std::string n = number.empty() ? "S" : number;
  const bool fem = gender == "F";
  if (p == "1") return n == "S" ? ">anaA" : "naHonu";
  if (p == "2") {
    if (n == "S") return fem ? ">anti" : ">anta";
    if (n == "D") return ">antumaA";
    return fem ? ">antun~a" : ">antumo";
  }
  if (n == "S") return fem ? "hiya" : "huwa";
  if (n == "D") return "humaA";
  return fem ? "hun~a" : "humo";
}

std::string DroppedPronounForm(const MorphSegment &verb) {
  return PronounForm(verb.GetOr(Feature::kPerson),
                     verb.GetOr(Feature::kGender),
                     verb.GetOr(Feature::kNumber));
}

}  // namespace hybrid
