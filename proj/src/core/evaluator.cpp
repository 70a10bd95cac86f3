// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "evaluator.hpp"

#include <algorithm>

namespace atlk {

Evaluator::Evaluator(const Model& m, Semantics sem, Algorithm alg)
    : m_(m), sem_(sem), alg_(alg) {}

std::vector<int> Evaluator::bindAgents(const std::vector<std::string>& names) const {
  std::vector<int> out;
  for (const auto& n : names) {
    int i = m_.agentIndex(n);
    if (i < 0) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + n + "'");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const CoalitionIndex& Evaluator::index(const std::vector<int>& gamma) {
  auto it = indices_.find(gamma);
  if (it == indices_.end())
    it = indices_.emplace(gamma, std::make_unique<CoalitionIndex>(m_, gamma)).first;
  return *it->second;
}

const StateSet& Evaluator::fairStates() {
  if (!fairStates_) {
    PreOps pre{index({}), nullptr};
    fairStates_ = std::make_unique<StateSet>(fairForced(pre, stats_));
  }
  return *fairStates_;
}

const StateSet& Evaluator::knowDomain() {
  if (!knowDomain_)
    knowDomain_ = std::make_unique<StateSet>(m_.reachable() & fairStates());
  return *knowDomain_;
}

StateSet Evaluator::eval(const FormulaPtr& f) {
  std::string key = printFormula(f);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  StateSet r = evalUncached(f);
  cache_.emplace(std::move(key), r);
  return r;
}

PathQuery Evaluator::makeQuery(const FormulaPtr& f) {
  PathQuery q{f->path, eval(f->lhs), m_.emptySet()};
  if (f->path == PKind::Until || f->path == PKind::WeakUntil) q.b = eval(f->rhs);
  return q;
}

StateSet Evaluator::evalCan(const std::vector<int>& gamma, const PathQuery& q) {
  const CoalitionIndex& ci = index(gamma);
  if (sem_ == Semantics::Fo) {
    PreOps pre{ci, nullptr};
    return evalExists(pre, q, stats_);
  }
  if (alg_ == Algorithm::Basic) return evalPoBasic(ci, q, stats_, poStats_);
  return evalPoImproved(ci, ci.allEnabledPairs(), q, stats_, poStats_);
}

StateSet Evaluator::evalKnow(const FormulaPtr& f) {
  StateSet phi = eval(f->lhs);
  const StateSet& dom = knowDomain();
  auto knowOne = [&](int agent, const StateSet& target) {
    StateSet out = m_.emptySet();
    for (std::size_t l = 0; l < m_.agent(agent).locals.size(); ++l) {
      const StateSet& mask = m_.localMask(agent, l);
      if ((dom & mask).is_subset_of(target)) out |= mask;
    }
    return out;
  };
  auto everyKnows = [&](const std::vector<int>& gamma, const StateSet& target) {
    StateSet out = m_.fullSet();
    for (int i : gamma) out &= knowOne(i, target);
    return out;
  };
  switch (f->kind) {
    case FKind::Know:
      return knowOne(bindAgents({f->name}).front(), phi);
    case FKind::GroupKnow: {
      auto gamma = bindAgents(f->agents);
      if (gamma.empty()) throw Error(ErrorKind::EmptyCoalition, "GK requires a coalition");
      return everyKnows(gamma, phi);
    }
    case FKind::DistKnow: {
      auto gamma = bindAgents(f->agents);
      if (gamma.empty()) throw Error(ErrorKind::EmptyCoalition, "DK requires a coalition");
      StateSet out = m_.emptySet();
      for (std::size_t s = 0; s < m_.stateCount(); ++s) {
        StateSet cls = m_.equivClass(s, gamma.front());
        for (std::size_t k = 1; k < gamma.size(); ++k) cls &= m_.equivClass(s, gamma[k]);
        if ((dom & cls).is_subset_of(phi)) out.set(s);
      }
      return out;
    }
    case FKind::CommonKnow: {
      auto gamma = bindAgents(f->agents);
      if (gamma.empty()) throw Error(ErrorKind::EmptyCoalition, "CK requires a coalition");
      StateSet z = m_.fullSet();
      for (;;) {
        StateSet next = everyKnows(gamma, phi & z);
        if (next == z) return z;
        z = std::move(next);
      }
    }
    default:
      return m_.emptySet();
  }
}

StateSet Evaluator::evalUncached(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True:
      return m_.fullSet();
    case FKind::False:
      return m_.emptySet();
    case FKind::Atom: {
      const StateSet* l = m_.label(f->name);
      if (!l) throw Error(ErrorKind::UndeclaredSymbol, "unknown atom '" + f->name + "'");
      return *l;
    }
    case FKind::Not:
      return ~eval(f->lhs);
    case FKind::And:
      return eval(f->lhs) & eval(f->rhs);
    case FKind::Or:
      return eval(f->lhs) | eval(f->rhs);
    case FKind::Implies:
      return ~eval(f->lhs) | eval(f->rhs);
    case FKind::Iff: {
      StateSet l = eval(f->lhs), r = eval(f->rhs);
      return (l & r) | (~l & ~r);
    }
    case FKind::Know:
    case FKind::GroupKnow:
    case FKind::DistKnow:
    case FKind::CommonKnow:
      return evalKnow(f);
    case FKind::ExistsPath: {
      PreOps pre{index({}), nullptr};
      return evalForced(pre, makeQuery(f), stats_);
    }
    case FKind::ForallPath: {
      PreOps pre{index({}), nullptr};
      return evalExists(pre, makeQuery(f), stats_);
    }
    case FKind::CoalitionCan:
      return evalCan(bindAgents(f->agents), makeQuery(f));
    case FKind::CoalitionForced: {
      auto gamma = bindAgents(f->agents);
      if (sem_ == Semantics::Fo) {
        PreOps pre{index(gamma), nullptr};
        return evalForced(pre, makeQuery(f), stats_);
      }
      return ~evalCan(gamma, negateQuery(m_, makeQuery(f)));
    }
  }
  return m_.emptySet();
}

}  // namespace atlk
