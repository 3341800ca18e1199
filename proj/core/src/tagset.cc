#include "hybrid/tagset.h"

#include <fstream>
#include <sstream>

#include "hybrid/error.h"

namespace hybrid {
namespace {

const char kDefaultTagset[] =
#include "default_tagset.inc"
    ;

}  // namespace

const Tagset &Tagset::Default() {
  static const Tagset *tagset = [] {
    std::istringstream in(kDefaultTagset);
    return new Tagset(Parse(in));
  }();
  return *tagset;
}

Tagset Tagset::Parse(std::istream &in) {
  Tagset t;
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      if (word.front() == '[' && word.back() == ']') {
        section = word.substr(1, word.size() - 2);
        if (section != "pos" && section != "relations" &&
            section != "phrases" && section != "copula") {
          throw ParseError("unknown tagset section '" + section + "'",
                           line_no);
        }
        continue;
      }
      if (section == "pos") {
        if (t.pos_.insert(word).second) t.pos_order_.push_back(word);
      } else if (section == "relations") {
        if (t.rel_.insert(word).second) t.rel_order_.push_back(word);
      } else if (section == "phrases") {
        if (t.phrase_.insert(word).second) t.phrase_order_.push_back(word);
      } else if (section == "copula") {
        t.copula_.insert(word);
      } else {
        throw ParseError("tag outside a section", line_no);
      }
    }
  }
  return t;
}

Tagset Tagset::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tagset file '" + path + "'");
  return Parse(in);
}

void Tagset::CheckPos(const std::string &tag) const {
  if (!IsPos(tag)) throw ValidationError("unknown POS tag '" + tag + "'");
}

void Tagset::CheckRelation(const std::string &r) const {
  if (!IsRelation(r)) throw ValidationError("unknown relation '" + r + "'");
}

void Tagset::CheckPhrase(const std::string &z) const {
  if (!IsPhrase(z)) throw ValidationError("unknown phrase tag '" + z + "'");
}

}  // namespace hybrid
