// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stateset.hpp"
#include "types.hpp"

namespace atlk {

// Per-agent declaration: local state space, action alphabet, and a total
// protocol mapping each local state to a nonempty subset of the actions.
struct AgentDecl {
  std::string name;
  std::vector<std::string> locals;
  std::vector<std::string> actions;
  std::vector<std::vector<int>> protocol;  // indexed by local-state index

  int localIndex(const std::string& s) const;
  int actionIndex(const std::string& a) const;
};

// One transition row, in local/action index form (agent declaration order).
struct TransitionDecl {
  std::vector<int> from;
  std::vector<int> action;
  std::vector<int> to;
};

// Coalition action: action choices for an ordered set of agents. The empty
// coalition (arity 0) is legal and denotes the empty tuple.
struct CoalitionAction {
  std::vector<int> agents;  // strictly increasing agent indices
  std::vector<int> parts;   // aligned with agents
};

bool completes(const CoalitionAction& ca, const std::vector<int>& jointParts);

// Explicit multi-agent model M = <Ag, S, Act, T, I, {~i}, V, F>.
//
// The state universe is the full product S1 x ... x Sn; states are interned
// densely in lexicographic order of the declared local-state product (agent 0
// most significant). Joint actions are interned the same way. Immutable after
// build and shareable across threads.
class Model {
 public:
  static Model build(std::vector<AgentDecl> agents,
                     const std::vector<TransitionDecl>& transitions,
                     const std::vector<std::vector<int>>& init,
                     const std::map<std::string, std::vector<std::vector<int>>>& labels,
                     const std::vector<std::vector<std::vector<int>>>& fairness);

  int agentCount() const { return static_cast<int>(agents_.size()); }
  const AgentDecl& agent(int i) const { return agents_[i]; }
  int agentIndex(const std::string& name) const;  // -1 if unknown

  std::size_t stateCount() const { return stateCount_; }
  std::size_t jointCount() const { return jointCount_; }

  int localOf(std::size_t state, int agent) const {
    return static_cast<int>(state / stateStride_[agent] % agents_[agent].locals.size());
  }
  int actionPartOf(std::size_t joint, int agent) const {
    return static_cast<int>(joint / actStride_[agent] % agents_[agent].actions.size());
  }
  std::size_t stateOf(const std::vector<int>& locals) const;
  std::size_t jointOf(const std::vector<int>& parts) const;

  std::string stateName(std::size_t state) const;
  std::string jointActionName(std::size_t joint) const;

  // Outgoing transitions of a state, sorted by joint-action index.
  const std::vector<std::pair<std::size_t, StateSet>>& transitionsFrom(std::size_t s) const {
    return trans_[s];
  }

  // img(s, a): successors of s under joint action a (empty if not enabled).
  StateSet img(std::size_t s, std::size_t joint) const;

  // Agent-i actions occurring in some transition from s. Equal to
  // protocol(s_i) on every validated model.
  std::vector<int> enabledAgent(std::size_t s, int agent) const;

  // Gamma-projections of joint actions having a transition from s. For the
  // empty coalition: the singleton empty tuple (every state is serial).
  std::vector<CoalitionAction> enabledCoalition(std::size_t s,
                                                const std::vector<int>& gamma) const;

  // All states sharing agent i's local state with s.
  const StateSet& equivClass(std::size_t s, int agent) const {
    return localMask_[agent][localOf(s, agent)];
  }
  // Union over i in gamma of equivClass(s, i). gamma must be nonempty.
  StateSet equivUnion(std::size_t s, const std::vector<int>& gamma) const;

  const StateSet& localMask(int agent, int local) const { return localMask_[agent][local]; }

  const StateSet& initSet() const { return init_; }
  const StateSet& reachable() const { return reachable_; }
  const std::map<std::string, StateSet>& labels() const { return labels_; }
  const StateSet* label(const std::string& atom) const;
  const std::vector<StateSet>& fairness() const { return fairness_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  StateSet emptySet() const { return StateSet(stateCount_); }
  StateSet fullSet() const { return ~StateSet(stateCount_); }

 private:
  Model() = default;
  void validate();
  void computeReachable();

  std::vector<AgentDecl> agents_;
  std::size_t stateCount_ = 0;
  std::size_t jointCount_ = 0;
  std::vector<std::size_t> stateStride_;
  std::vector<std::size_t> actStride_;
  std::vector<std::vector<std::pair<std::size_t, StateSet>>> trans_;
  std::vector<std::vector<StateSet>> localMask_;  // [agent][local]
  StateSet init_;
  StateSet reachable_;
  std::map<std::string, StateSet> labels_;
  std::vector<StateSet> fairness_;
  std::vector<std::string> warnings_;
};

}  // namespace atlk
