#ifndef HYBRID_TREEBANK_H_
#define HYBRID_TREEBANK_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hybrid/graph.h"
#include "hybrid/tagset.h"

namespace hybrid {

struct TreebankDocument {
  std::vector<HybridGraph> graphs;
  // Comment lines preceding each graph, verbatim including the '#'.
  std::vector<std::vector<std::string>> comments;

  void Add(HybridGraph g, std::vector<std::string> notes = {}) {
    graphs.push_back(std::move(g));
    comments.push_back(std::move(notes));
  }
  size_t size() const { return graphs.size(); }
  // Value of a "# key = value" comment, if present.
  std::optional<std::string> Metadata(size_t graph,
                                      const std::string &key) const;
};

// Extended CoNLL-X:
//   ID TYPE EXTENT FORM POSTAG FEATS HEAD DEPREL   (tab separated)
// Throws ParseError citing a 1-based line number.
TreebankDocument ReadTreebank(std::istream &in,
                              const Tagset &tags = Tagset::Default());
TreebankDocument ReadTreebankFile(const std::string &path,
                                  const Tagset &tags = Tagset::Default());

void WriteGraph(const HybridGraph &g, std::ostream &out);
void WriteTreebank(const TreebankDocument &doc, std::ostream &out);
void WriteTreebankFile(const TreebankDocument &doc, const std::string &path);
std::string ToConll(const HybridGraph &g);

}  // namespace hybrid

#endif  // HYBRID_TREEBANK_H_
