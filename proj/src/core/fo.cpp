// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "fo.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace atlk {

CoalitionIndex::CoalitionIndex(const Model& m, std::vector<int> agents)
    : model_(&m), agents_(std::move(agents)) {
  std::sort(agents_.begin(), agents_.end());
  agents_.erase(std::unique(agents_.begin(), agents_.end()), agents_.end());

  caStride_.assign(agents_.size(), 1);
  std::size_t n = 1;
  for (int k = static_cast<int>(agents_.size()) - 1; k >= 0; --k) {
    caStride_[k] = n;
    n *= m.agent(agents_[k]).actions.size();
  }
  actCount_ = n;

  byState_.resize(m.stateCount());
  for (std::size_t s = 0; s < m.stateCount(); ++s) {
    std::map<std::size_t, StateSet> groups;
    for (const auto& [a, post] : m.transitionsFrom(s)) {
      auto [it, fresh] = groups.try_emplace(caOfJoint(a), m.emptySet());
      it->second |= post;
    }
    for (auto& [ca, post] : groups) byState_[s].push_back({ca, std::move(post)});
  }
}

std::size_t CoalitionIndex::caOfJoint(std::size_t joint) const {
  std::size_t ca = 0;
  for (std::size_t k = 0; k < agents_.size(); ++k)
    ca += static_cast<std::size_t>(model_->actionPartOf(joint, agents_[k])) * caStride_[k];
  return ca;
}

int CoalitionIndex::caPart(std::size_t ca, std::size_t k) const {
  return static_cast<int>(ca / caStride_[k] % model_->agent(agents_[k]).actions.size());
}

std::string CoalitionIndex::caName(std::size_t ca) const {
  std::ostringstream os;
  for (std::size_t k = 0; k < agents_.size(); ++k) {
    if (k) os << ',';
    os << model_->agent(agents_[k]).actions[caPart(ca, k)];
  }
  return os.str();
}

PairSet CoalitionIndex::allEnabledPairs() const {
  PairSet p = emptyPairs();
  for (std::size_t s = 0; s < model_->stateCount(); ++s)
    for (const auto& g : byState_[s]) p.set(s, g.ca);
  return p;
}

StateSet PreOps::forced(const StateSet& Z) const {
  StateSet out = ci.model().emptySet();
  for (std::size_t s = 0; s < ci.model().stateCount(); ++s) {
    bool any = false, ok = true;
    for (const auto& g : ci.groups(s)) {
      if (strat && !strat->test(s, g.ca)) continue;
      any = true;
      if (!g.post.intersects(Z)) {
        ok = false;
        break;
      }
    }
    if (any && ok) out.set(s);
  }
  return out;
}

StateSet PreOps::exists(const StateSet& Z) const {
  StateSet out = ci.model().emptySet();
  for (std::size_t s = 0; s < ci.model().stateCount(); ++s) {
    for (const auto& g : ci.groups(s)) {
      if (strat && !strat->test(s, g.ca)) continue;
      if (g.post.is_subset_of(Z)) {
        out.set(s);
        break;
      }
    }
  }
  return out;
}

StateSet PreOps::covered() const {
  if (!strat) return ci.model().fullSet();
  StateSet out = ci.model().emptySet();
  for (std::size_t s = 0; s < ci.model().stateCount(); ++s)
    for (const auto& g : ci.groups(s))
      if (strat->test(s, g.ca)) {
        out.set(s);
        break;
      }
  return out;
}

StateSet forcedGlobally(const PreOps& pre, const StateSet& phi, EngineStats& st) {
  const auto& fairness = pre.ci.model().fairness();
  StateSet Z = pre.ci.model().fullSet();
  if (fairness.empty()) {
    for (;;) {
      ++st.fixpointIterations;
      StateSet next = phi & pre.forced(Z);
      if (next == Z) return Z;
      Z = std::move(next);
    }
  }
  for (;;) {
    ++st.fixpointIterations;
    StateSet next = phi;
    for (const auto& f : fairness) {
      StateSet y = pre.ci.model().emptySet();
      for (;;) {
        ++st.fixpointIterations;
        StateSet ynext = (Z & f) | (phi & pre.forced(y));
        if (ynext == y) break;
        y = std::move(ynext);
      }
      next &= pre.forced(y);
    }
    if (next == Z) return Z;
    Z = std::move(next);
  }
}

StateSet fairForced(const PreOps& pre, EngineStats& st) {
  return forcedGlobally(pre, pre.ci.model().fullSet(), st);
}

StateSet forcedUntil(const PreOps& pre, const StateSet& a, const StateSet& b, const StateSet& fair,
                     EngineStats& st) {
  StateSet base = b & fair;
  StateSet Z = pre.ci.model().emptySet();
  for (;;) {
    ++st.fixpointIterations;
    StateSet next = base | (a & pre.forced(Z));
    if (next == Z) return Z;
    Z = std::move(next);
  }
}

StateSet forcedWeak(const PreOps& pre, const StateSet& a, const StateSet& b, const StateSet& fair,
                    EngineStats& st) {
  const auto& fairness = pre.ci.model().fairness();
  if (fairness.empty()) {
    StateSet Z = pre.ci.model().fullSet();
    for (;;) {
      ++st.fixpointIterations;
      StateSet next = b | (a & pre.forced(Z));
      if (next == Z) return Z;
      Z = std::move(next);
    }
  }
  StateSet base = b & fair;
  StateSet Z = pre.ci.model().fullSet();
  for (;;) {
    ++st.fixpointIterations;
    StateSet inner = pre.ci.model().fullSet();
    for (const auto& f : fairness) {
      StateSet y = pre.ci.model().emptySet();
      for (;;) {
        ++st.fixpointIterations;
        StateSet ynext = base | (Z & f) | (a & pre.forced(y));
        if (ynext == y) break;
        y = std::move(ynext);
      }
      inner &= pre.forced(y);
    }
    StateSet next = base | (a & inner);
    if (next == Z) return Z;
    Z = std::move(next);
  }
}

PathQuery negateQuery(const Model& m, const PathQuery& q) {
  switch (q.kind) {
    case PKind::Next:
      return {PKind::Next, ~q.a, m.emptySet()};
    case PKind::Globally:
      return {PKind::Until, m.fullSet(), ~q.a};
    case PKind::Until:
      return {PKind::WeakUntil, ~q.b, ~q.a & ~q.b};
    case PKind::WeakUntil:
      return {PKind::Until, ~q.b, ~q.a & ~q.b};
  }
  return q;
}

StateSet evalForced(const PreOps& pre, const PathQuery& q, EngineStats& st) {
  StateSet fair = fairForced(pre, st);
  switch (q.kind) {
    case PKind::Next:
      return pre.forced(q.a & fair);
    case PKind::Globally:
      return forcedGlobally(pre, q.a, st);
    case PKind::Until:
      return forcedUntil(pre, q.a, q.b, fair, st);
    case PKind::WeakUntil:
      return forcedWeak(pre, q.a, q.b, fair, st);
  }
  return pre.ci.model().emptySet();
}

StateSet evalExists(const PreOps& pre, const PathQuery& q, EngineStats& st) {
  StateSet fair = fairForced(pre, st);
  switch (q.kind) {
    case PKind::Next:
      return pre.exists(q.a | ~fair);
    case PKind::Globally: {
      StateSet bound = q.a | ~fair;
      StateSet Z = pre.ci.model().fullSet();
      for (;;) {
        ++st.fixpointIterations;
        StateSet next = bound & pre.exists(Z);
        if (next == Z) return Z;
        Z = std::move(next);
      }
    }
    case PKind::Until:
    case PKind::WeakUntil: {
      StateSet r = ~evalForced(pre, negateQuery(pre.ci.model(), q), st);
      if (pre.strat) r &= pre.covered();
      return r;
    }
  }
  return pre.ci.model().emptySet();
}

PairSet statesActions(const CoalitionIndex& ci, const PairSet& strats, const StateSet& Z) {
  PairSet out = ci.emptyPairs();
  for (std::size_t s = 0; s < ci.model().stateCount(); ++s) {
    if (!Z.test(s)) continue;
    for (const auto& g : ci.groups(s))
      if (strats.test(s, g.ca)) out.set(s, g.ca);
  }
  return out;
}

PairSet preExistsAcInto(const CoalitionIndex& ci, const PairSet& strats, const StateSet& target) {
  PairSet out = ci.emptyPairs();
  for (std::size_t s = 0; s < ci.model().stateCount(); ++s)
    for (const auto& g : ci.groups(s))
      if (strats.test(s, g.ca) && g.post.is_subset_of(target)) out.set(s, g.ca);
  return out;
}

PairSet preExistsAc(const CoalitionIndex& ci, const PairSet& strats, const PairSet& Zp) {
  return preExistsAcInto(ci, strats, Zp.stateProjection());
}

PairSet unfairForcible(const CoalitionIndex& ci, const PairSet& strats, EngineStats& st) {
  const Model& m = ci.model();
  const auto& fairness = m.fairness();
  PairSet uf = ci.emptyPairs();
  if (fairness.empty()) return uf;
  // mu N. U_f Pre^ac(nu W. StatesActions(proj(N) | ~f) & Pre^ac(proj(W)))
  // (the De Morgan dual of the fair-forced fixpoint, lifted to pairs): the
  // coalition commits to actions along which every completion eventually
  // avoids some fairness constraint forever. The inner W pairs re-enter N via
  // the outer pre-image, so N carries the whole commitment.
  for (;;) {
    ++st.fixpointIterations;
    PairSet acc = uf;
    StateSet nproj = uf.stateProjection();
    for (const auto& f : fairness) {
      PairSet w = statesActions(ci, strats, nproj | ~f);
      for (;;) {
        ++st.fixpointIterations;
        PairSet wnext = w;
        wnext.bits &= preExistsAcInto(ci, strats, w.stateProjection()).bits;
        if (wnext.bits == w.bits) break;
        w = std::move(wnext);
      }
      acc.bits |= preExistsAcInto(ci, strats, w.stateProjection()).bits;
    }
    if (acc.bits == uf.bits) return uf;
    uf = std::move(acc);
  }
}

PairSet evalExistsAc(const CoalitionIndex& ci, const PairSet& strats, const PathQuery& q,
                     EngineStats& st) {
  const Model& m = ci.model();

  // Pairs that win vacuously: committing to them leaves no fair outcome at
  // all. They are folded into the result so that the unfairness commitments
  // take part in conflict detection like any other winning action.
  PairSet uf = unfairForcible(ci, strats, st);
  StateSet notFair = uf.stateProjection();

  auto lift = [&](const StateSet& o) { return statesActions(ci, strats, o); };

  switch (q.kind) {
    case PKind::Next: {
      // The obligation is discharged one step ahead: successors either satisfy
      // the operand outright or carry an unfairness commitment of their own.
      PairSet z = preExistsAcInto(ci, strats, q.a | notFair);
      z.bits |= uf.bits;
      return z;
    }
    case PKind::Globally:
    case PKind::WeakUntil: {
      // nu Zp. UF | lift(b) | (lift(a) & Pre^ac(proj(Zp)));  G is W with b = {}
      StateSet bset = q.kind == PKind::WeakUntil ? q.b : m.emptySet();
      PairSet tpairs = lift(bset);
      tpairs.bits |= uf.bits;
      PairSet apairs = lift(q.a);
      PairSet Z = strats;
      for (;;) {
        ++st.fixpointIterations;
        PairSet next = Z;
        next.bits = tpairs.bits |
                    (apairs.bits & preExistsAcInto(ci, strats, Z.stateProjection()).bits);
        if (next.bits == Z.bits) return Z;
        Z = std::move(next);
      }
    }
    case PKind::Until: {
      const auto& fairness = m.fairness();
      PairSet tpairs = lift(q.b);
      tpairs.bits |= uf.bits;
      PairSet apairs = lift(q.a);
      PairSet bound = tpairs;
      bound.bits |= apairs.bits;
      PairSet Z = ci.emptyPairs();
      if (fairness.empty()) {
        // mu Zp. lift(b) | (lift(a) & Pre^ac(proj(Zp)))
        for (;;) {
          ++st.fixpointIterations;
          PairSet next = Z;
          next.bits = tpairs.bits |
                      (apairs.bits & preExistsAcInto(ci, strats, Z.stateProjection()).bits);
          if (next.bits == Z.bits) return Z;
          Z = std::move(next);
        }
      }
      // mu Zp. T | (bound & U_f Pre^ac(proj(
      //        nu Yp. bound & (Zp | pairs at ~f) & (T | Pre^ac(proj(Yp))))))
      // with T = lift(b) | UF: every fair outcome must reach b through a;
      // dwelling inside a is allowed only while some constraint is starved.
      for (;;) {
        ++st.fixpointIterations;
        PairSet acc = tpairs;
        for (const auto& f : fairness) {
          PairSet escape = lift(~f);
          PairSet y = bound;
          for (;;) {
            ++st.fixpointIterations;
            PairSet ynext = y;
            ynext.bits = bound.bits & (Z.bits | escape.bits) &
                         (tpairs.bits | preExistsAcInto(ci, strats, y.stateProjection()).bits);
            if (ynext.bits == y.bits) break;
            y = std::move(ynext);
          }
          acc.bits |= bound.bits & preExistsAcInto(ci, strats, y.stateProjection()).bits;
        }
        PairSet next = Z;
        next.bits = acc.bits;
        if (next.bits == Z.bits) return Z;
        Z = std::move(next);
      }
    }
  }
  return ci.emptyPairs();
}

}  // namespace atlk
