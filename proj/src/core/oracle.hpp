// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "evaluator.hpp"

namespace atlk {

// Brute-force reference implementations. Deliberately a different route from
// the engines: explicit strategy enumeration plus Tarjan-SCC fair-lasso graph
// search, no mu-calculus fixpoints.

// A strategy for a coalition: one coalition action (as per-agent parts,
// aligned with the sorted coalition) per state.
using StrategyMap = std::vector<std::vector<int>>;

inline constexpr std::uint64_t kDefaultStrategyCap = 1u << 20;

// All per-agent-uniform coalition strategies, as total state -> action maps.
// Throws CapExceeded when countUniform(gamma) exceeds the cap.
std::vector<StrategyMap> enumerateUniform(const Model& m, const std::vector<int>& gamma,
                                          std::uint64_t cap = kDefaultStrategyCap);

// All global (not necessarily uniform) coalition strategies: any choice of an
// enabled coalition action per state. Throws CapExceeded past the cap.
std::vector<StrategyMap> enumerateGlobal(const Model& m, const std::vector<int>& gamma,
                                         std::uint64_t cap = kDefaultStrategyCap);

// Transition graph after fixing a strategy: keeps (s, a, s') iff a completes
// the strategy's choice at s.
struct PrunedModel {
  const Model* base;
  std::vector<std::vector<std::size_t>> succ;  // sorted, deduplicated

  // States from which a fair path exists, by SCC analysis restricted to
  // `allowed` (a fair lasso must eventually stay inside it).
  StateSet fairContinuation(const StateSet& allowed) const;
  StateSet fairContinuation() const;
};

PrunedModel prune(const Model& m, const std::vector<int>& gamma, const StrategyMap& f);

// True iff every fair path from s in pm satisfies the path query. Vacuously
// true when no fair path starts at s.
bool holdsAllFairPaths(const PrunedModel& pm, std::size_t s, const PathQuery& q);

// {s | exists uniform strategy f: every s' in equivUnion(s, gamma) satisfies
// the query on all fair paths of prune(f)}.
StateSet oracleEvalPo(const Model& m, const std::vector<int>& gamma, const PathQuery& q,
                      std::uint64_t cap = kDefaultStrategyCap);

// Same with global strategies and no equivalence filter (fo semantics).
StateSet oracleEvalFoCan(const Model& m, const std::vector<int>& gamma, const PathQuery& q,
                         std::uint64_t cap = kDefaultStrategyCap);

// Full-formula oracle evaluation under the given semantics.
StateSet oracleEval(const Model& m, const FormulaPtr& f, Semantics sem,
                    std::uint64_t cap = kDefaultStrategyCap);

}  // namespace atlk
