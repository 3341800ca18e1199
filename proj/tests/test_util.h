#ifndef HYBRID_TESTS_TEST_UTIL_H_
#define HYBRID_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hybrid/graph.h"
#include "hybrid/tagset.h"
#include "hybrid/transition.h"
#include "hybrid/treebank.h"

namespace hybrid::testing {

inline std::string FixturePath(const std::string &relative) {
  return std::string(HYBRID_FIXTURE_DIR) + "/" + relative;
}

inline std::string ReadText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline HybridGraph LoadGraph(const std::string &relative,
                             const Tagset &tags = Tagset::Default()) {
  return ReadTreebankFile(FixturePath(relative), tags).graphs.at(0);
}

inline const Tagset &EnglishTags() {
  static const Tagset tags = Tagset::Load(FixturePath("oracle/english.tagset"));
  return tags;
}

// Whitespace-separated transitions; '#' starts a comment line.
inline std::vector<Transition> LoadTransitions(const std::string &relative) {
  std::istringstream in(ReadText(FixturePath(relative)));
  std::vector<Transition> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(Transition::Parse(w));
  }
  return out;
}

inline MorphSegment Seg(const std::string &form, const std::string &pos) {
  MorphSegment s;
  s.form = form;
  s.pos = pos;
  return s;
}

}  // namespace hybrid::testing

#endif  // HYBRID_TESTS_TEST_UTIL_H_
