// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "formula.hpp"
#include "model.hpp"

namespace atlk {

struct EngineStats {
  std::uint64_t fixpointIterations = 0;
};

// Set of (state, coalition-action) pairs for a fixed coalition, stored as a
// bit-vector indexed by state * actCount + coalitionAction.
struct PairSet {
  std::vector<int> agents;   // the shared coalition, strictly increasing
  std::size_t nStates = 0;
  std::size_t actCount = 1;  // product of the coalition agents' declared actions
  StateSet bits;             // length nStates * actCount

  static PairSet empty(const std::vector<int>& agents, std::size_t nStates, std::size_t actCount) {
    PairSet p{agents, nStates, actCount, StateSet(nStates * actCount)};
    return p;
  }

  bool test(std::size_t s, std::size_t ca) const { return bits.test(s * actCount + ca); }
  void set(std::size_t s, std::size_t ca, bool v = true) { bits.set(s * actCount + ca, v); }
  bool any() const { return bits.any(); }
  std::size_t count() const { return bits.count(); }

  // States covered by at least one pair.
  StateSet stateProjection() const {
    StateSet out(nStates);
    for (auto i = bits.find_first(); i != StateSet::npos; i = bits.find_next(i))
      out.set(i / actCount);
    return out;
  }
};

// Per-coalition view of a model: for each state, the enabled coalition
// actions together with the union image over all completing joint actions.
// Both pre-image operators only depend on that union.
class CoalitionIndex {
 public:
  CoalitionIndex(const Model& m, std::vector<int> agents);

  const Model& model() const { return *model_; }
  const std::vector<int>& agents() const { return agents_; }
  std::size_t actCount() const { return actCount_; }

  struct Group {
    std::size_t ca;
    StateSet post;
  };
  const std::vector<Group>& groups(std::size_t s) const { return byState_[s]; }

  std::size_t caOfJoint(std::size_t joint) const;
  int caPart(std::size_t ca, std::size_t k) const;  // action of agents()[k]
  std::string caName(std::size_t ca) const;

  PairSet allEnabledPairs() const;
  PairSet emptyPairs() const { return PairSet::empty(agents_, model_->stateCount(), actCount_); }

 private:
  const Model* model_;
  std::vector<int> agents_;
  std::size_t actCount_;
  std::vector<std::size_t> caStride_;
  std::vector<std::vector<Group>> byState_;
};

// One-step pre-image operators, optionally restricted to a strategy relation.
//
//   forced: states where, whatever enabled coalition action (allowed by the
//           restriction) is chosen, some completion reaches Z.
//   exists: states with an (allowed) coalition action whose every completion
//           stays inside Z.
struct PreOps {
  const CoalitionIndex& ci;
  const PairSet* strat = nullptr;

  StateSet forced(const StateSet& Z) const;
  StateSet exists(const StateSet& Z) const;
  StateSet covered() const;
};

// [G]G phi. With empty F this degenerates to the unfair greatest fixpoint
// nu Z. phi & Pre(Z).
StateSet forcedGlobally(const PreOps& pre, const StateSet& phi, EngineStats& st);

// [G][phi1 U phi2] and [G][phi1 W phi2]; `fair` is forcedGlobally(pre, S).
StateSet forcedUntil(const PreOps& pre, const StateSet& a, const StateSet& b, const StateSet& fair,
                     EngineStats& st);
StateSet forcedWeak(const PreOps& pre, const StateSet& a, const StateSet& b, const StateSet& fair,
                    EngineStats& st);

// Path query with operand sets already evaluated: a is the single operand of
// X/G, (a, b) the operands of U/W.
struct PathQuery {
  PKind kind;
  StateSet a;
  StateSet b;
};
PathQuery negateQuery(const Model& m, const PathQuery& q);

// Fair_[G] of the (optionally restricted) pre operators.
StateSet fairForced(const PreOps& pre, EngineStats& st);

// [G]psi per the displayed equations.
StateSet evalForced(const PreOps& pre, const PathQuery& q, EngineStats& st);

// <G>psi. X and G use the displayed dual forms; U and W are computed as
// complements of the forced forms on path-negated operands. Restricted runs
// are additionally clipped to states the strategy covers.
StateSet evalExists(const PreOps& pre, const PathQuery& q, EngineStats& st);

// StatesActions_G|strats(Z): pairs of strats whose state lies in Z.
PairSet statesActions(const CoalitionIndex& ci, const PairSet& strats, const StateSet& Z);

// Pre^ac: pairs of strats whose every completion stays inside `target`
// (respectively, the state projection of Zp).
PairSet preExistsAcInto(const CoalitionIndex& ci, const PairSet& strats, const StateSet& target);
PairSet preExistsAc(const CoalitionIndex& ci, const PairSet& strats, const PairSet& Zp);

// Pairs <s, aG> from which the coalition can force every outcome to be
// unfair while staying inside strats. Empty when F is empty.
PairSet unfairForcible(const CoalitionIndex& ci, const PairSet& strats, EngineStats& st);

// Action-coupled <G>psi: the exists-form fixpoints lifted to pair sets.
// Returns the pairs <s, aG> such that some global strategy within strats that
// plays aG at s wins psi from s; unfairForcible pairs are included so that
// vacuous wins expose the actions they commit to. Expects strats to cover
// every state (the improved algorithm only ever narrows per-class choices).
PairSet evalExistsAc(const CoalitionIndex& ci, const PairSet& strats, const PathQuery& q,
                     EngineStats& st);

}  // namespace atlk
