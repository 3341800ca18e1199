#include "hybrid/treebank.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hybrid/error.h"

namespace hybrid {
namespace {

constexpr char kRefFeature[] = "Ref=yes";

struct Row {
  int line;
  int id;
  char type;
  std::string extent, form, postag, feats, head, deprel;
};

int ParseId(const std::string &s, int line, const char *what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      value < 1) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
  }
  return value;
}

bool IsAbsentHead(const std::string &s) {
  return s == "_" || s == "-" || s == "0" || s == "\xE2\x80\x93";
}

HybridGraph BuildGraph(const std::vector<Row> &rows, const Tagset &tags) {
  HybridGraph g;
  std::map<int, NodeRef> by_id;
  for (const Row &r : rows) {
    if (by_id.count(r.id)) {
      throw ParseError("duplicate node id " + std::to_string(r.id), r.line);
    }
    if (r.type == 'P') continue;
    if (r.extent != "_") throw ParseError("extent on a terminal row", r.line);
    if (r.form.empty() || r.form == "_") {
      throw ParseError("terminal row without a form", r.line);
    }
    Terminal t;
    t.empty = r.type == 'E';
    t.morph.form = r.form;
    t.morph.pos = r.postag;
    std::string feats = r.feats;
    if (feats == kRefFeature) {
      t.reference = true;
      feats = "_";
    } else if (feats.rfind(std::string(kRefFeature) + "|", 0) == 0) {
      t.reference = true;
      feats = feats.substr(sizeof(kRefFeature));
    }
    try {
      DecodeFeats(feats, &t.morph);
      tags.CheckPos(r.postag);
    } catch (const Error &e) {
      throw ParseError(e.what(), r.line);
    }
    by_id[r.id] = NodeRef::Terminal(g.AddTerminal(std::move(t)));
  }
  for (const Row &r : rows) {
    if (r.type != 'P') continue;
    if (by_id.count(r.id)) {
      throw ParseError("duplicate node id " + std::to_string(r.id), r.line);
    }
    size_t dash = r.extent.find('-');
    if (dash == std::string::npos) {
      throw ParseError("phrase extent must be 'i-j'", r.line);
    }
    int a = ParseId(r.extent.substr(0, dash), r.line, "extent");
    int b = ParseId(r.extent.substr(dash + 1), r.line, "extent");
    auto ia = by_id.find(a), ib = by_id.find(b);
    if (ia == by_id.end() || ib == by_id.end() ||
        ia->second.index > ib->second.index) {
      throw ParseError("extent '" + r.extent + "' out of bounds", r.line);
    }
    if (!tags.IsPhrase(r.postag)) {
      throw ParseError("unknown phrase tag '" + r.postag + "'", r.line);
    }
    by_id[r.id] = NodeRef::Phrase(
        g.AddPhrase(ia->second.index, ib->second.index, r.postag));
  }
  for (const Row &r : rows) {
    const bool no_head = IsAbsentHead(r.head);
    if (no_head) {
      if (r.deprel != "_") {
        throw ParseError("relation without a head", r.line);
      }
      continue;
    }
    int h = ParseId(r.head, r.line, "head");
    auto it = by_id.find(h);
    if (it == by_id.end()) {
      throw ParseError("dangling head reference " + r.head, r.line);
    }
    if (r.deprel == "_") throw ParseError("head without a relation", r.line);
    Label label = [&] {
      try {
        return Label::Parse(r.deprel);
      } catch (const ParseError &e) {
        throw ParseError(e.what(), r.line);
      }
    }();
    g.AddEdge(by_id[r.id], it->second, label);
  }
  auto violations = Validate(g, tags);
  if (!violations.empty()) {
    throw ParseError("invalid graph: " + violations.front().rule + ": " +
                         violations.front().detail,
                     rows.front().line);
  }
  return g;
}

}  // namespace

std::optional<std::string> TreebankDocument::Metadata(
    size_t graph, const std::string &key) const {
  if (graph >= comments.size()) return std::nullopt;
  for (const std::string &c : comments[graph]) {
    std::string body = c.substr(1);
    size_t eq = body.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    if (trim(body.substr(0, eq)) == key) return trim(body.substr(eq + 1));
  }
  return std::nullopt;
}

TreebankDocument ReadTreebank(std::istream &in, const Tagset &tags) {
  TreebankDocument doc;
  std::vector<Row> rows;
  std::vector<std::string> notes;
  std::string line;
  int line_no = 0;
  auto flush = [&] {
    if (rows.empty()) return;
    doc.Add(BuildGraph(rows, tags), std::move(notes));
    rows.clear();
    notes.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      if (!rows.empty()) throw ParseError("comment inside a graph", line_no);
      notes.push_back(line);
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    if (f.size() != 8) {
      throw ParseError("expected 8 tab-separated columns, found " +
                           std::to_string(f.size()),
                       line_no);
    }
    Row r;
    r.line = line_no;
    r.id = ParseId(f[0], line_no, "node id");
    if (f[1] != "T" && f[1] != "E" && f[1] != "P") {
      throw ParseError("node type must be T, E or P", line_no);
    }
    r.type = f[1][0];
    r.extent = f[2];
    r.form = f[3];
    r.postag = f[4];
    r.feats = f[5];
    r.head = f[6];
    r.deprel = f[7];
    if (r.type == 'P' && (r.extent == "_" || r.form != "_")) {
      throw ParseError("phrase row needs an extent and no form", line_no);
    }
    rows.push_back(std::move(r));
  }
  flush();
  return doc;
}

TreebankDocument ReadTreebankFile(const std::string &path,
                                  const Tagset &tags) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return ReadTreebank(in, tags);
}

void WriteGraph(const HybridGraph &graph, std::ostream &out) {
  const HybridGraph g = graph.Canonical();
  const int n = g.num_terminals();
  auto id_of = [&](NodeRef r) {
    return r.is_terminal() ? r.index + 1 : n + r.index + 1;
  };
  auto head_cols = [&](NodeRef self) {
    auto e = g.HeadEdge(self);
    if (!e) return std::string("_\t_");
    const Edge &edge = g.edges()[*e];
    return std::to_string(id_of(edge.head)) + "\t" + edge.label.ToString();
  };
  for (int i = 0; i < n; ++i) {
    const Terminal &t = g.terminal(i);
    std::string feats = EncodeFeats(t.morph);
    if (t.reference) {
      feats = feats == "_" ? kRefFeature : std::string(kRefFeature) + "|" + feats;
    }
    out << i + 1 << '\t' << (t.empty ? 'E' : 'T') << "\t_\t" << t.morph.form
        << '\t' << t.morph.pos << '\t' << feats << '\t'
        << head_cols(NodeRef::Terminal(i)) << '\n';
  }
  for (int p = 0; p < g.num_phrases(); ++p) {
    const Phrase &x = g.phrase(p);
    out << n + p + 1 << "\tP\t" << x.start + 1 << '-' << x.end + 1 << "\t_\t"
        << x.tag << "\t_\t" << head_cols(NodeRef::Phrase(p)) << '\n';
  }
}

void WriteTreebank(const TreebankDocument &doc, std::ostream &out) {
  for (size_t i = 0; i < doc.graphs.size(); ++i) {
    if (i < doc.comments.size()) {
      for (const std::string &c : doc.comments[i]) out << c << '\n';
    }
    WriteGraph(doc.graphs[i], out);
    out << '\n';
  }
}

void WriteTreebankFile(const TreebankDocument &doc, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  WriteTreebank(doc, out);
  if (!out) throw Error("write failed for '" + path + "'");
}

std::string ToConll(const HybridGraph &g) {
  std::ostringstream out;
  WriteGraph(g, out);
  return out.str();
}

}  // namespace hybrid
