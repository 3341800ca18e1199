#include "hybrid/engine.h"

#include <optional>

#include "hybrid/oracle.h"

namespace hybrid {
namespace {

// Steps needed to empty a configuration with forced Π/Λ(1).
int DrainCost(const Configuration &c) {
  return 2 * static_cast<int>(c.queue().size()) +
         static_cast<int>(c.stack().size());
}

// Greedy loop that always finishes within the step budget: a predicted
// step is taken only if a forced drain afterwards still fits.
Configuration RunGreedy(const Model &model,
                        const std::vector<MorphSegment> &sentence,
                        TransitionSet set, ParseReport *report) {
  Configuration c = Configuration::Initial(sentence);
  report->budget = StepBudget(static_cast<int>(sentence.size()));
  while (!c.IsTerminal()) {
    const int steps = static_cast<int>(report->trace.size());
    Transition t;
    std::optional<Configuration> next;
    if (!report->budget_exhausted) {
      t = model.Predict(c);
      next = Apply(c, t, set, model.tagset());
      if (steps + 1 + DrainCost(*next) > report->budget) {
        report->budget_exhausted = true;
        next.reset();
      }
    }
    if (!next) {
      t = c.stack().empty() ? Transition::Shift() : Transition::Reduce(1);
      next = Apply(c, t, set, model.tagset());
    }
    c = std::move(*next);
    report->trace.push_back(std::move(t));
  }
  return c;
}

HybridGraph Bare(const HybridGraph &g) {
  HybridGraph out;
  for (const Terminal &t : g.terminals()) out.AddTerminal(t);
  return out;
}

}  // namespace

ParseResult ParseIntegrated(const Model &model,
                            const std::vector<MorphSegment> &sentence) {
  ParseResult out;
  Configuration c =
      RunGreedy(model, sentence, TransitionSet::kFull, &out.report);
  out.graph = c.graph();
  if (!Validate(out.graph, model.tagset()).empty()) {
    out.report.reconstruction_errors.push_back(
        {"graph", "invalid parse replaced by its terminals"});
    out.graph = Bare(out.graph);
  }
  return out;
}

ParseResult ParseMultiStep(const Model &model,
                           const std::vector<MorphSegment> &sentence) {
  ParseResult out;
  Configuration c =
      RunGreedy(model, sentence, TransitionSet::kPure, &out.report);
  out.report.pure = c.graph();
  out.graph = FromPureDependency(out.report.pure,
                                 &out.report.reconstruction_errors,
                                 model.tagset());
  if (!Validate(out.graph, model.tagset()).empty()) {
    out.graph = out.report.pure;
    if (!Validate(out.graph, model.tagset()).empty()) {
      out.graph = Bare(out.graph);
    }
  }
  return out;
}

ParseResult Parse(const Model &model, const std::vector<MorphSegment> &sentence) {
  return model.pipeline() == Pipeline::kMultiStep
             ? ParseMultiStep(model, sentence)
             : ParseIntegrated(model, sentence);
}

}  // namespace hybrid
