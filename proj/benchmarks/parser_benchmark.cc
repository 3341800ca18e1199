#include <sstream>

#include <benchmark/benchmark.h>

#include "hybrid/conversion.h"
#include "hybrid/engine.h"
#include "hybrid/evaluation.h"
#include "hybrid/model.h"
#include "hybrid/oracle.h"
#include "hybrid/synth.h"
#include "hybrid/treebank.h"

namespace hybrid {
namespace {

const TreebankDocument &Corpus() {
  static const TreebankDocument doc =
      Generate(17, 200, ParseSynthProfile("+phrases,+ellipsis"));
  return doc;
}

const Model &Trained(Pipeline pipeline) {
  static const Model integrated = [] {
    TrainingOptions o;
    return Train(Corpus(), o);
  }();
  static const Model multistep = [] {
    TrainingOptions o;
    o.pipeline = Pipeline::kMultiStep;
    return Train(Corpus(), o);
  }();
  return pipeline == Pipeline::kIntegrated ? integrated : multistep;
}

void BM_Oracle(benchmark::State &state) {
  const auto &doc = Corpus();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OracleSequence(doc.graphs[i++ % doc.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Oracle);

void BM_Parse(benchmark::State &state) {
  const Pipeline pipeline =
      state.range(0) == 0 ? Pipeline::kIntegrated : Pipeline::kMultiStep;
  const Model &m = Trained(pipeline);
  const auto &doc = Corpus();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parse(m, doc.graphs[i++ % doc.size()].Segments()));
  }
  state.SetLabel(PipelineName(pipeline));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Parse)->Arg(0)->Arg(1);

void BM_Train(benchmark::State &state) {
  TrainingOptions o;
  o.epochs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Train(Corpus(), o));
}
BENCHMARK(BM_Train)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RoundTrip(benchmark::State &state) {
  const auto &doc = Corpus();
  size_t i = 0;
  for (auto _ : state) {
    const HybridGraph &g = doc.graphs[i++ % doc.size()];
    benchmark::DoNotOptimize(FromPureDependency(ToPureDependency(g).pure));
  }
}
BENCHMARK(BM_RoundTrip);

void BM_ReadWrite(benchmark::State &state) {
  std::ostringstream text;
  WriteTreebank(Corpus(), text);
  const std::string corpus = text.str();
  for (auto _ : state) {
    std::istringstream in(corpus);
    std::ostringstream out;
    WriteTreebank(ReadTreebank(in), out);
    benchmark::DoNotOptimize(out.str());
  }
  state.SetBytesProcessed(state.iterations() * corpus.size());
}
BENCHMARK(BM_ReadWrite)->Unit(benchmark::kMillisecond);

void BM_Elas(benchmark::State &state) {
  const auto &doc = Corpus();
  size_t i = 0;
  for (auto _ : state) {
    const HybridGraph &g = doc.graphs[i++ % doc.size()];
    benchmark::DoNotOptimize(Elas(g, g));
  }
}
BENCHMARK(BM_Elas);

}  // namespace
}  // namespace hybrid

BENCHMARK_MAIN();
