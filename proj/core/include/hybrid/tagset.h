#ifndef HYBRID_TAGSET_H_
#define HYBRID_TAGSET_H_

#include <istream>
#include <set>
#include <string>
#include <vector>

namespace hybrid {

// Closed vocabularies: POS tags, relations, phrase tags and the copula
// group. Loaded from a sectioned text file; a default is compiled in.
class Tagset {
 public:
  static const Tagset &Default();
  static Tagset Parse(std::istream &in);
  static Tagset Load(const std::string &path);

  bool IsPos(const std::string &tag) const { return pos_.count(tag) > 0; }
  bool IsRelation(const std::string &r) const { return rel_.count(r) > 0; }
  bool IsPhrase(const std::string &z) const { return phrase_.count(z) > 0; }
  bool IsCopula(const std::string &sp) const { return copula_.count(sp) > 0; }

  const std::vector<std::string> &pos_tags() const { return pos_order_; }
  const std::vector<std::string> &relations() const { return rel_order_; }
  const std::vector<std::string> &phrase_tags() const {
    return phrase_order_;
  }

  // Throws ValidationError naming the offending tag.
  void CheckPos(const std::string &tag) const;
  void CheckRelation(const std::string &r) const;
  void CheckPhrase(const std::string &z) const;

 private:
  std::set<std::string> pos_, rel_, phrase_, copula_;
  std::vector<std::string> pos_order_, rel_order_, phrase_order_;
};

}  // namespace hybrid

#endif  // HYBRID_TAGSET_H_
