// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "po.hpp"

#include <algorithm>

namespace atlk {

namespace {

struct Conflict {
  std::size_t agentPos;  // position k within the coalition
  int local;             // local state of agents[k] the conflict is about
};

// Scans pairs in (state, coalition-action) order and reports the first pair
// that disagrees with an earlier pair on some coalition agent's action at a
// shared local state; the lowest such agent position wins.
std::optional<Conflict> findConflict(const CoalitionIndex& ci, const PairSet& p) {
  const Model& m = ci.model();
  const auto& gamma = ci.agents();
  std::vector<std::vector<int>> firstPart(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k)
    firstPart[k].assign(m.agent(gamma[k]).locals.size(), -1);
  for (auto i = p.bits.find_first(); i != StateSet::npos; i = p.bits.find_next(i)) {
    std::size_t s = i / p.actCount, ca = i % p.actCount;
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      int l = m.localOf(s, gamma[k]);
      int part = ci.caPart(ca, k);
      int& seen = firstPart[k][l];
      if (seen < 0)
        seen = part;
      else if (seen != part)
        return Conflict{k, l};
    }
  }
  return std::nullopt;
}

// Pairs of p whose state has local `local` for coalition agent position k.
PairSet classPairs(const CoalitionIndex& ci, const PairSet& p, const Conflict& c) {
  PairSet out = ci.emptyPairs();
  const StateSet& mask = ci.model().localMask(ci.agents()[c.agentPos], c.local);
  for (auto i = p.bits.find_first(); i != StateSet::npos; i = p.bits.find_next(i))
    if (mask.test(i / p.actCount)) out.bits.set(i);
  return out;
}

void splitRec(const CoalitionIndex& ci, PairSet strats,
              const std::function<void(const PairSet&)>& fn) {
  auto conflict = findConflict(ci, strats);
  if (!conflict) {
    fn(strats);
    return;
  }
  PairSet cls = classPairs(ci, strats, *conflict);
  PairSet rest = strats;
  rest.bits -= cls.bits;
  std::vector<bool> tried(ci.model().agent(ci.agents()[conflict->agentPos]).actions.size(), false);
  for (auto i = cls.bits.find_first(); i != StateSet::npos; i = cls.bits.find_next(i))
    tried[ci.caPart(i % cls.actCount, conflict->agentPos)] = true;
  for (std::size_t part = 0; part < tried.size(); ++part) {
    if (!tried[part]) continue;
    PairSet branch = rest;
    for (auto i = cls.bits.find_first(); i != StateSet::npos; i = cls.bits.find_next(i))
      if (ci.caPart(i % cls.actCount, conflict->agentPos) == static_cast<int>(part))
        branch.bits.set(i);
    splitRec(ci, std::move(branch), fn);
  }
}

}  // namespace

void forEachSplit(const CoalitionIndex& ci, const PairSet& strats,
                  const std::function<void(const PairSet&)>& fn) {
  if (ci.agents().empty()) throw Error(ErrorKind::EmptyCoalition, "split requires a coalition");
  if (!strats.any()) return;
  splitRec(ci, strats, fn);
}

std::vector<PairSet> split(const CoalitionIndex& ci, const PairSet& strats) {
  std::vector<PairSet> out;
  forEachSplit(ci, strats, [&](const PairSet& s) { out.push_back(s); });
  return out;
}

std::uint64_t countUniform(const Model& m, const std::vector<int>& gamma) {
  std::uint64_t n = 1;
  for (int i : gamma)
    for (const auto& acts : m.agent(i).protocol) n *= acts.size();
  return n;
}

StateSet uniformFilter(const Model& m, const std::vector<int>& gamma, const StateSet& W) {
  StateSet out = W;
  for (int i : gamma) {
    StateSet good = m.emptySet();
    for (std::size_t l = 0; l < m.agent(i).locals.size(); ++l)
      if (m.localMask(i, l).is_subset_of(W)) good |= m.localMask(i, l);
    out &= good;
  }
  return out;
}

StateSet evalPoBasic(const CoalitionIndex& ci, const PathQuery& q, EngineStats& st, PoStats& ps) {
  StateSet result = ci.model().emptySet();
  forEachSplit(ci, ci.allEnabledPairs(), [&](const PairSet& strat) {
    ++ps.strategiesEnumerated;
    PreOps pre{ci, &strat};
    StateSet w = evalExists(pre, q, st);
    result |= uniformFilter(ci.model(), ci.agents(), w);
  });
  return result;
}

StateSet evalPoImproved(const CoalitionIndex& ci, const PairSet& strats, const PathQuery& q,
                        EngineStats& st, PoStats& ps) {
  const Model& m = ci.model();
  PairSet z = evalExistsAc(ci, strats, q, st);
  if (!z.any()) {
    ++ps.branchesPruned;
    return m.emptySet();
  }
  auto conflict = findConflict(ci, z);
  if (!conflict) {
    // Conflict-free: z is (part of) a single uniform strategy, and the per-
    // agent action for a state's equivalence-union neighbours need only agree
    // componentwise, which conflict-freeness already guarantees. A state
    // qualifies iff its whole equivalence union is covered by z.
    ++ps.strategiesEnumerated;
    return uniformFilter(m, ci.agents(), z.stateProjection());
  }
  // Branch over the actions z proposes for the conflicting class. A decision
  // binds the whole class, across all states: the remaining strategy relation
  // keeps covering every state, so fairness commitments stay meaningful, and
  // winning certificates only ever use pairs that reappear in the narrowed z.
  PairSet cls = classPairs(ci, z, *conflict);
  StateSet result = m.emptySet();
  const StateSet& mask = m.localMask(ci.agents()[conflict->agentPos], conflict->local);
  std::vector<bool> present(m.agent(ci.agents()[conflict->agentPos]).actions.size(), false);
  for (auto i = cls.bits.find_first(); i != StateSet::npos; i = cls.bits.find_next(i))
    present[ci.caPart(i % cls.actCount, conflict->agentPos)] = true;
  for (std::size_t part = 0; part < present.size(); ++part) {
    if (!present[part]) continue;
    PairSet branch = strats;
    for (auto i = strats.bits.find_first(); i != StateSet::npos; i = strats.bits.find_next(i))
      if (mask.test(i / strats.actCount) &&
          ci.caPart(i % strats.actCount, conflict->agentPos) != static_cast<int>(part))
        branch.bits.reset(i);
    result |= evalPoImproved(ci, branch, q, st, ps);
  }
  return result;
}

}  // namespace atlk
