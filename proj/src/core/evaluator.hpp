// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "po.hpp"

namespace atlk {

enum class Semantics { Po, Fo };
enum class Algorithm { Basic, Improved, Auto };

// Recursive bottom-up evaluator. Boolean, CTL and epistemic operators are
// shared between the two semantics; strategic operators go through the
// fixpoint engine (fo) or the uniform-strategy algorithms (po). [[G]] under
// po is the set-level complement of <<G>> on the negated path form.
class Evaluator {
 public:
  Evaluator(const Model& m, Semantics sem = Semantics::Po, Algorithm alg = Algorithm::Auto);

  StateSet eval(const FormulaPtr& f);

  // Coalition agent names to indices; throws UnknownAgent.
  std::vector<int> bindAgents(const std::vector<std::string>& names) const;

  const CoalitionIndex& index(const std::vector<int>& gamma);
  const StateSet& fairStates();  // states with at least one fair path
  const StateSet& knowDomain();  // reachable & fair

  // <<G>>psi with operand sets already evaluated, in the current semantics.
  StateSet evalCan(const std::vector<int>& gamma, const PathQuery& q);

  const Model& model() const { return m_; }
  EngineStats& stats() { return stats_; }
  PoStats& poStats() { return poStats_; }

 private:
  StateSet evalUncached(const FormulaPtr& f);
  PathQuery makeQuery(const FormulaPtr& f);
  StateSet evalKnow(const FormulaPtr& f);

  const Model& m_;
  Semantics sem_;
  Algorithm alg_;
  EngineStats stats_;
  PoStats poStats_;
  std::map<std::string, StateSet> cache_;  // keyed on canonical printing
  std::map<std::vector<int>, std::unique_ptr<CoalitionIndex>> indices_;
  std::unique_ptr<StateSet> fairStates_;
  std::unique_ptr<StateSet> knowDomain_;
};

}  // namespace atlk
