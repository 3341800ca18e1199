#include "hybrid/classifier.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>

#include "hybrid/error.h"

namespace hybrid {
namespace {

uint64_t BaseKey(int a) { return static_cast<uint64_t>(a + 1) << 32; }
uint64_t PairKey(int a, int b) {
  return BaseKey(a) | static_cast<uint32_t>(b + 1);
}

bool InSlot(const std::string &p, char slot) {
  return p.size() > 3 && p[0] == 's' && p[1] == slot && p[2] == ':';
}

std::string FormatWeight(float w) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(w));
  return buf;
}

}  // namespace

int AveragedPerceptron::Predicate(const std::string &name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? -1 : it->second;
}

std::vector<int> AveragedPerceptron::Rows(const FeatureVector &features,
                                          bool grow) {
  std::vector<int> ids;
  std::vector<int> s1, s2;
  for (const std::string &f : features) {
    int id = Predicate(f);
    if (id < 0) {
      if (!grow) continue;
      id = static_cast<int>(predicates_.size());
      predicates_.emplace(f, id);
    }
    ids.push_back(id);
    if (InSlot(f, '1')) s1.push_back(id);
    if (InSlot(f, '2')) s2.push_back(id);
  }
  std::vector<uint64_t> keys;
  keys.reserve(ids.size() + s1.size() * s2.size());
  for (int id : ids) keys.push_back(BaseKey(id));
  for (int a : s1) {
    for (int b : s2) keys.push_back(PairKey(a, b));
  }
  std::vector<int> rows;
  rows.reserve(keys.size());
  for (uint64_t k : keys) {
    auto it = rows_.find(k);
    if (it != rows_.end()) {
      rows.push_back(it->second);
    } else if (grow) {
      const int row = static_cast<int>(rows_.size());
      rows_.emplace(k, row);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<int> AveragedPerceptron::Rows(const FeatureVector &features) const {
  return const_cast<AveragedPerceptron *>(this)->Rows(features, false);
}

void AveragedPerceptron::Fit(const std::vector<Example> &examples) {
  if (examples.empty()) throw TrainingError("no training examples");
  std::map<int, int> local;
  for (const Example &e : examples) local.emplace(e.label, 0);
  labels_.clear();
  for (auto &[label, index] : local) {
    index = static_cast<int>(labels_.size());
    labels_.push_back(label);
  }
  const int k = num_labels();
  std::vector<std::vector<int>> rows;
  std::vector<int> gold;
  rows.reserve(examples.size());
  for (const Example &e : examples) {
    rows.push_back(Rows(e.features, true));
    gold.push_back(local[e.label]);
  }
  const size_t n_rows = rows_.size();
  std::vector<float> w(n_rows * k, 0.0f);
  std::vector<double> u(n_rows * k, 0.0);
  std::vector<size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options_.seed);
  double c = 1;
  std::vector<double> scores(k);
  if (k > 1) {
    for (int epoch = 0; epoch < options_.epochs; ++epoch) {
      for (size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng() % i]);
      }
      int mistakes = 0;
      for (size_t idx : order) {
        std::fill(scores.begin(), scores.end(), 0.0);
        for (int r : rows[idx]) {
          const float *row = &w[static_cast<size_t>(r) * k];
          for (int y = 0; y < k; ++y) scores[y] += row[y];
        }
        int best = 0;
        for (int y = 1; y < k; ++y) {
          if (scores[y] > scores[best]) best = y;
        }
        const int g = gold[idx];
        if (best != g) {
          ++mistakes;
          for (int r : rows[idx]) {
            const size_t base = static_cast<size_t>(r) * k;
            w[base + g] += 1.0f;
            w[base + best] -= 1.0f;
            u[base + g] += c;
            u[base + best] -= c;
          }
        }
        c += 1;
      }
      if (mistakes == 0) {
        // Weights are fixed from here on; count the skipped epochs.
        c += static_cast<double>(options_.epochs - epoch - 1) * order.size();
        break;
      }
    }
  }
  weights_.assign(n_rows * k, 0.0f);
  for (size_t i = 0; i < weights_.size(); ++i) {
    weights_[i] = static_cast<float>(w[i] - u[i] / c);
  }
}

std::vector<std::pair<int, double>> AveragedPerceptron::Score(
    const FeatureVector &features) const {
  const int k = num_labels();
  std::vector<double> scores(k, 0.0);
  for (int r : Rows(features)) {
    const float *row = &weights_[static_cast<size_t>(r) * k];
    for (int y = 0; y < k; ++y) scores[y] += row[y];
  }
  std::vector<std::pair<int, double>> out;
  for (int y = 0; y < k; ++y) out.emplace_back(labels_[y], scores[y]);
  return out;
}

int AveragedPerceptron::num_weights() const {
  return static_cast<int>(
      std::count_if(weights_.begin(), weights_.end(),
                    [](float w) { return w != 0.0f; }));
}

void AveragedPerceptron::Save(std::ostream &out) const {
  const int k = num_labels();
  std::vector<std::pair<std::string, int>> preds(predicates_.begin(),
                                                 predicates_.end());
  std::sort(preds.begin(), preds.end(),
            [](const auto &a, const auto &b) { return a.second < b.second; });
  // Only rows with a non-zero weight are kept.
  std::vector<std::pair<uint64_t, int>> rows(rows_.begin(), rows_.end());
  std::sort(rows.begin(), rows.end());
  std::vector<std::pair<uint64_t, int>> kept;
  for (const auto &[key, row] : rows) {
    const float *w = &weights_[static_cast<size_t>(row) * k];
    if (std::any_of(w, w + k, [](float x) { return x != 0.0f; })) {
      kept.emplace_back(key, row);
    }
  }
  out << "perceptron " << options_.epochs << ' ' << options_.seed << '\n';
  out << "labels " << k;
  for (int l : labels_) out << ' ' << l;
  out << '\n';
  out << "predicates " << preds.size() << '\n';
  for (const auto &[name, id] : preds) out << name << '\n';
  out << "rows " << kept.size() << '\n';
  for (const auto &[key, row] : kept) {
    out << key;
    const float *w = &weights_[static_cast<size_t>(row) * k];
    for (int y = 0; y < k; ++y) out << ' ' << FormatWeight(w[y]);
    out << '\n';
  }
}

std::unique_ptr<AveragedPerceptron> AveragedPerceptron::Load(std::istream &in) {
  auto fail = [](const std::string &why) -> std::unique_ptr<AveragedPerceptron> {
    throw ParseError("model: " + why);
  };
  std::string word;
  PerceptronOptions options;
  if (!(in >> word >> options.epochs >> options.seed) || word != "perceptron") {
    return fail("expected perceptron header");
  }
  auto p = std::make_unique<AveragedPerceptron>(options);
  int k = 0;
  if (!(in >> word >> k) || word != "labels" || k < 0) {
    return fail("expected labels");
  }
  p->labels_.resize(k);
  for (int &l : p->labels_) in >> l;
  size_t n = 0;
  if (!(in >> word >> n) || word != "predicates") {
    return fail("expected predicates");
  }
  std::string line;
  std::getline(in, line);
  for (size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) return fail("truncated predicate table");
    p->predicates_.emplace(line, static_cast<int>(i));
  }
  if (!(in >> word >> n) || word != "rows") return fail("expected rows");
  p->weights_.assign(n * k, 0.0f);
  for (size_t i = 0; i < n; ++i) {
    uint64_t key = 0;
    if (!(in >> key)) return fail("truncated weights");
    p->rows_.emplace(key, static_cast<int>(i));
    for (int y = 0; y < k; ++y) {
      if (!(in >> p->weights_[i * k + y])) return fail("truncated weights");
    }
  }
  return p;
}

}  // namespace hybrid
