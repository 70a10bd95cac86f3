// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fo.hpp"

namespace atlk {

struct PoStats {
  std::uint64_t strategiesEnumerated = 0;  // split leaves / restricted evaluations
  std::uint64_t branchesPruned = 0;        // improved-algorithm branches dropped early
};

// All maximal conflict-free subsets of strats. Two pairs <s,aG>, <s',a'G>
// conflict iff some coalition agent i has s_i = s'_i but aG and a'G differ at
// i; conflict-free subsets are exactly the tuples of per-agent uniform
// strategies inside strats. Deterministic branch order: the conflict with the
// lowest state index (then lowest coalition-action index) is resolved first,
// actions tried in declaration order.
std::vector<PairSet> split(const CoalitionIndex& ci, const PairSet& strats);
void forEachSplit(const CoalitionIndex& ci, const PairSet& strats,
                  const std::function<void(const PairSet&)>& fn);

// Number of uniform coalition strategies: product over the coalition agents'
// local states of the protocol sizes. Equals split(all enabled pairs).size().
std::uint64_t countUniform(const Model& m, const std::vector<int>& gamma);

// {s in W | equivUnion(s, gamma) subset of W}.
StateSet uniformFilter(const Model& m, const std::vector<int>& gamma, const StateSet& W);

// <G>psi under partial observability, by enumerating the uniform strategies
// and keeping the states whose whole equivalence-union wins.
StateSet evalPoBasic(const CoalitionIndex& ci, const PathQuery& q, EngineStats& st, PoStats& ps);

// <G>psi by alternated filtering (action-coupled fixpoints) and splitting.
StateSet evalPoImproved(const CoalitionIndex& ci, const PairSet& strats, const PathQuery& q,
                        EngineStats& st, PoStats& ps);

}  // namespace atlk
