// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace atlk {

namespace {

StateSet emptyLike(const Model& m) { return StateSet(m.stateCount()); }

}  // namespace

std::vector<StrategyMap> enumerateUniform(const Model& m, const std::vector<int>& gamma,
                                          std::uint64_t cap) {
  if (countUniform(m, gamma) > cap)
    throw Error(ErrorKind::CapExceeded, "uniform strategy count exceeds cap");
  // One choice slot per (coalition agent, local state); a slot ranges over
  // the protocol of that local state.
  struct Slot {
    int agent;
    int local;
    const std::vector<int>* options;
  };
  std::vector<Slot> slots;
  for (int i : gamma)
    for (std::size_t l = 0; l < m.agent(i).locals.size(); ++l)
      slots.push_back({i, static_cast<int>(l), &m.agent(i).protocol[l]});

  std::vector<StrategyMap> out;
  std::vector<std::size_t> pick(slots.size(), 0);
  for (;;) {
    StrategyMap f(m.stateCount(), std::vector<int>(gamma.size()));
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      // slot index for (gamma[k], local l) within the flat slot list
      std::size_t base = 0;
      for (std::size_t j = 0; j < k; ++j) base += m.agent(gamma[j]).locals.size();
      for (std::size_t s = 0; s < m.stateCount(); ++s) {
        const Slot& slot = slots[base + m.localOf(s, gamma[k])];
        f[s][k] = (*slot.options)[pick[base + m.localOf(s, gamma[k])]];
      }
    }
    out.push_back(std::move(f));
    std::size_t k = slots.size();
    while (k > 0) {
      --k;
      if (++pick[k] < slots[k].options->size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (slots.empty()) return out;
  }
}

std::vector<StrategyMap> enumerateGlobal(const Model& m, const std::vector<int>& gamma,
                                         std::uint64_t cap) {
  // Distinct enabled coalition actions per state, as part tuples.
  std::vector<std::vector<std::vector<int>>> options(m.stateCount());
  std::uint64_t total = 1;
  for (std::size_t s = 0; s < m.stateCount(); ++s) {
    for (const auto& [a, post] : m.transitionsFrom(s)) {
      std::vector<int> parts;
      for (int i : gamma) parts.push_back(m.actionPartOf(a, i));
      if (std::find(options[s].begin(), options[s].end(), parts) == options[s].end())
        options[s].push_back(std::move(parts));
    }
    total *= options[s].size();
    if (total > cap) throw Error(ErrorKind::CapExceeded, "global strategy count exceeds cap");
  }
  std::vector<StrategyMap> out;
  std::vector<std::size_t> pick(m.stateCount(), 0);
  for (;;) {
    StrategyMap f(m.stateCount());
    for (std::size_t s = 0; s < m.stateCount(); ++s) f[s] = options[s][pick[s]];
    out.push_back(std::move(f));
    std::size_t s = m.stateCount();
    for (;;) {
      if (s == 0) return out;
      --s;
      if (++pick[s] < options[s].size()) break;
      pick[s] = 0;
    }
  }
}

PrunedModel prune(const Model& m, const std::vector<int>& gamma, const StrategyMap& f) {
  PrunedModel pm{&m, std::vector<std::vector<std::size_t>>(m.stateCount())};
  for (std::size_t s = 0; s < m.stateCount(); ++s) {
    StateSet succ = emptyLike(m);
    for (const auto& [a, post] : m.transitionsFrom(s)) {
      bool match = true;
      for (std::size_t k = 0; k < gamma.size(); ++k)
        if (m.actionPartOf(a, gamma[k]) != f[s][k]) {
          match = false;
          break;
        }
      if (match) succ |= post;
    }
    pm.succ[s] = toIndices(succ);
  }
  return pm;
}

StateSet PrunedModel::fairContinuation(const StateSet& allowed) const {
  const Model& m = *base;
  std::size_t n = m.stateCount();
  // Tarjan over the subgraph induced on `allowed`.
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> onStack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> sccs;
  int counter = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    onStack[v] = true;
    for (std::size_t w : succ[v]) {
      if (!allowed.test(w)) continue;
      if (idx[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onStack[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      sccs.emplace_back();
      for (;;) {
        std::size_t w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        comp[w] = static_cast<int>(sccs.size()) - 1;
        sccs.back().push_back(w);
        if (w == v) break;
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (allowed.test(v) && idx[v] < 0) dfs(v);

  // Fair SCC: contains an internal edge and intersects every constraint.
  StateSet seeds = emptyLike(m);
  for (const auto& scc : sccs) {
    bool hasEdge = scc.size() > 1;
    if (!hasEdge)
      for (std::size_t w : succ[scc.front()])
        if (w == scc.front()) {
          hasEdge = true;
          break;
        }
    if (!hasEdge) continue;
    bool fair = true;
    for (const auto& fc : m.fairness()) {
      bool hit = false;
      for (std::size_t v : scc)
        if (fc.test(v)) {
          hit = true;
          break;
        }
      if (!hit) {
        fair = false;
        break;
      }
    }
    if (fair)
      for (std::size_t v : scc) seeds.set(v);
  }

  // Backward reachability within `allowed`.
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!allowed.test(v)) continue;
    for (std::size_t w : succ[v])
      if (allowed.test(w)) pred[w].push_back(v);
  }
  StateSet out = seeds;
  auto seedIdx = toIndices(seeds);
  std::deque<std::size_t> work(seedIdx.begin(), seedIdx.end());
  while (!work.empty()) {
    std::size_t v = work.front();
    work.pop_front();
    for (std::size_t p : pred[v])
      if (!out.test(p)) {
        out.set(p);
        work.push_back(p);
      }
  }
  return out;
}

StateSet PrunedModel::fairContinuation() const { return fairContinuation(~emptyLike(*base)); }

namespace {

// Forward reachability from s staying inside `allowed` (s assumed allowed).
StateSet reachWithin(const PrunedModel& pm, std::size_t s, const StateSet& allowed) {
  StateSet out = emptyLike(*pm.base);
  out.set(s);
  std::deque<std::size_t> work{s};
  while (!work.empty()) {
    std::size_t v = work.front();
    work.pop_front();
    for (std::size_t w : pm.succ[v])
      if (allowed.test(w) && !out.test(w)) {
        out.set(w);
        work.push_back(w);
      }
  }
  return out;
}

}  // namespace

bool holdsAllFairPaths(const PrunedModel& pm, std::size_t s, const PathQuery& q) {
  const Model& m = *pm.base;
  StateSet fairCont = pm.fairContinuation();
  switch (q.kind) {
    case PKind::Next: {
      for (std::size_t w : pm.succ[s])
        if (fairCont.test(w) && !q.a.test(w)) return false;
      return true;
    }
    case PKind::Globally: {
      StateSet r = reachWithin(pm, s, m.fullSet());
      return !(r & ~q.a & fairCont).any();
    }
    case PKind::WeakUntil: {
      if (q.b.test(s)) return true;
      StateSet r = reachWithin(pm, s, ~q.b);
      return !(r & ~q.a & fairCont).any();
    }
    case PKind::Until: {
      if (q.b.test(s)) return true;
      StateSet notB = ~q.b;
      StateSet r = reachWithin(pm, s, notB);
      if ((r & ~q.a & fairCont).any()) return false;
      // A fair lasso that never reaches b also violates the until.
      StateSet trapped = pm.fairContinuation(notB);
      return !(r & trapped).any();
    }
  }
  return true;
}

StateSet oracleEvalPo(const Model& m, const std::vector<int>& gamma, const PathQuery& q,
                      std::uint64_t cap) {
  StateSet out = emptyLike(m);
  for (const auto& f : enumerateUniform(m, gamma, cap)) {
    PrunedModel pm = prune(m, gamma, f);
    StateSet holds = emptyLike(m);
    for (std::size_t s = 0; s < m.stateCount(); ++s)
      if (holdsAllFairPaths(pm, s, q)) holds.set(s);
    out |= uniformFilter(m, gamma, holds);
  }
  return out;
}

StateSet oracleEvalFoCan(const Model& m, const std::vector<int>& gamma, const PathQuery& q,
                         std::uint64_t cap) {
  StateSet out = emptyLike(m);
  for (const auto& f : enumerateGlobal(m, gamma, cap)) {
    PrunedModel pm = prune(m, gamma, f);
    for (std::size_t s = 0; s < m.stateCount(); ++s)
      if (!out.test(s) && holdsAllFairPaths(pm, s, q)) out.set(s);
  }
  return out;
}

namespace {

struct OracleCtx {
  const Model& m;
  Semantics sem;
  std::uint64_t cap;
  PrunedModel base;      // unpruned graph (empty-coalition strategy)
  StateSet fairStates;   // states with some fair path
  StateSet dom;          // reachable & fair

  StateSet eval(const FormulaPtr& f);
};

StateSet OracleCtx::eval(const FormulaPtr& f) {
  auto bind = [&](const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& n : names) {
      int i = m.agentIndex(n);
      if (i < 0) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + n + "'");
      out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto query = [&](const FormulaPtr& g) {
    PathQuery q{g->path, eval(g->lhs), StateSet(m.stateCount())};
    if (g->path == PKind::Until || g->path == PKind::WeakUntil) q.b = eval(g->rhs);
    return q;
  };
  auto knowOne = [&](int agent, const StateSet& phi) {
    StateSet out = StateSet(m.stateCount());
    for (std::size_t s = 0; s < m.stateCount(); ++s)
      if ((dom & m.equivClass(s, agent)).is_subset_of(phi)) out.set(s);
    return out;
  };
  switch (f->kind) {
    case FKind::True:
      return m.fullSet();
    case FKind::False:
      return m.emptySet();
    case FKind::Atom: {
      const StateSet* l = m.label(f->name);
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
      return knowOne(bind({f->name}).front(), eval(f->lhs));
    case FKind::GroupKnow:
    case FKind::DistKnow:
    case FKind::CommonKnow: {
      auto gamma = bind(f->agents);
      if (gamma.empty()) throw Error(ErrorKind::EmptyCoalition, "knowledge coalition is empty");
      StateSet phi = eval(f->lhs);
      if (f->kind == FKind::DistKnow) {
        StateSet out = m.emptySet();
        for (std::size_t s = 0; s < m.stateCount(); ++s) {
          StateSet cls = m.equivClass(s, gamma.front());
          for (std::size_t k = 1; k < gamma.size(); ++k) cls &= m.equivClass(s, gamma[k]);
          if ((dom & cls).is_subset_of(phi)) out.set(s);
        }
        return out;
      }
      auto everyKnows = [&](const StateSet& target) {
        StateSet out = m.fullSet();
        for (int i : gamma) out &= knowOne(i, target);
        return out;
      };
      if (f->kind == FKind::GroupKnow) return everyKnows(phi);
      StateSet z = m.fullSet();
      for (;;) {
        StateSet next = everyKnows(phi & z);
        if (next == z) return z;
        z = std::move(next);
      }
    }
    case FKind::ExistsPath: {
      // E psi: some fair path satisfies psi.
      PathQuery q = negateQuery(m, query(f));
      StateSet out = m.emptySet();
      for (std::size_t s = 0; s < m.stateCount(); ++s)
        if (!holdsAllFairPaths(base, s, q)) out.set(s);
      return out;
    }
    case FKind::ForallPath: {
      PathQuery q = query(f);
      StateSet out = m.emptySet();
      for (std::size_t s = 0; s < m.stateCount(); ++s)
        if (holdsAllFairPaths(base, s, q)) out.set(s);
      return out;
    }
    case FKind::CoalitionCan: {
      auto gamma = bind(f->agents);
      PathQuery q = query(f);
      return sem == Semantics::Fo ? oracleEvalFoCan(m, gamma, q, cap)
                                  : oracleEvalPo(m, gamma, q, cap);
    }
    case FKind::CoalitionForced: {
      auto gamma = bind(f->agents);
      PathQuery q = negateQuery(m, query(f));
      return sem == Semantics::Fo ? ~oracleEvalFoCan(m, gamma, q, cap)
                                  : ~oracleEvalPo(m, gamma, q, cap);
    }
  }
  return m.emptySet();
}

}  // namespace

StateSet oracleEval(const Model& m, const FormulaPtr& f, Semantics sem, std::uint64_t cap) {
  StrategyMap empty(m.stateCount());
  OracleCtx ctx{m, sem, cap, prune(m, {}, empty), m.emptySet(), m.emptySet()};
  ctx.fairStates = ctx.base.fairContinuation();
  ctx.dom = m.reachable() & ctx.fairStates;
  return ctx.eval(f);
}

}  // namespace atlk
