// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "model.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace atlk {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::EmptyProtocol: return "EmptyProtocol";
    case ErrorKind::EnabledConsistencyViolation: return "EnabledConsistencyViolation";
    case ErrorKind::NonSerialState: return "NonSerialState";
    case ErrorKind::ProtocolMismatch: return "ProtocolMismatch";
    case ErrorKind::EmptyCoalition: return "EmptyCoalition";
    case ErrorKind::UnknownAgent: return "UnknownAgent";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Validation: return "ValidationError";
  }
  return "Error";
}

int AgentDecl::localIndex(const std::string& s) const {
  for (std::size_t i = 0; i < locals.size(); ++i)
    if (locals[i] == s) return static_cast<int>(i);
  return -1;
}

int AgentDecl::actionIndex(const std::string& a) const {
  for (std::size_t i = 0; i < actions.size(); ++i)
    if (actions[i] == a) return static_cast<int>(i);
  return -1;
}

bool completes(const CoalitionAction& ca, const std::vector<int>& jointParts) {
  for (std::size_t k = 0; k < ca.agents.size(); ++k)
    if (jointParts[ca.agents[k]] != ca.parts[k]) return false;
  return true;
}

int Model::agentIndex(const std::string& name) const {
  for (int i = 0; i < agentCount(); ++i)
    if (agents_[i].name == name) return i;
  return -1;
}

std::size_t Model::stateOf(const std::vector<int>& locals) const {
  std::size_t s = 0;
  for (int i = 0; i < agentCount(); ++i) s += static_cast<std::size_t>(locals[i]) * stateStride_[i];
  return s;
}

std::size_t Model::jointOf(const std::vector<int>& parts) const {
  std::size_t a = 0;
  for (int i = 0; i < agentCount(); ++i) a += static_cast<std::size_t>(parts[i]) * actStride_[i];
  return a;
}

std::string Model::stateName(std::size_t state) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < agentCount(); ++i) {
    if (i) os << ',';
    os << agents_[i].locals[localOf(state, i)];
  }
  os << ')';
  return os.str();
}

std::string Model::jointActionName(std::size_t joint) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < agentCount(); ++i) {
    if (i) os << ',';
    os << agents_[i].actions[actionPartOf(joint, i)];
  }
  os << ')';
  return os.str();
}

StateSet Model::img(std::size_t s, std::size_t joint) const {
  for (const auto& [a, post] : trans_[s])
    if (a == joint) return post;
  return emptySet();
}

std::vector<int> Model::enabledAgent(std::size_t s, int agent) const {
  std::set<int> acts;
  for (const auto& [a, post] : trans_[s]) acts.insert(actionPartOf(a, agent));
  return std::vector<int>(acts.begin(), acts.end());
}

std::vector<CoalitionAction> Model::enabledCoalition(std::size_t s,
                                                     const std::vector<int>& gamma) const {
  std::set<std::vector<int>> parts;
  for (const auto& [a, post] : trans_[s]) {
    std::vector<int> p;
    p.reserve(gamma.size());
    for (int i : gamma) p.push_back(actionPartOf(a, i));
    parts.insert(std::move(p));
  }
  std::vector<CoalitionAction> out;
  for (const auto& p : parts) out.push_back(CoalitionAction{gamma, p});
  return out;
}

StateSet Model::equivUnion(std::size_t s, const std::vector<int>& gamma) const {
  if (gamma.empty()) throw Error(ErrorKind::EmptyCoalition, "equivUnion: empty coalition");
  StateSet u = emptySet();
  for (int i : gamma) u |= equivClass(s, i);
  return u;
}

const StateSet* Model::label(const std::string& atom) const {
  auto it = labels_.find(atom);
  return it == labels_.end() ? nullptr : &it->second;
}

Model Model::build(std::vector<AgentDecl> agents,
                   const std::vector<TransitionDecl>& transitions,
                   const std::vector<std::vector<int>>& init,
                   const std::map<std::string, std::vector<std::vector<int>>>& labels,
                   const std::vector<std::vector<std::vector<int>>>& fairness) {
  Model m;
  if (agents.empty()) throw Error(ErrorKind::Validation, "model needs at least one agent");

  std::set<std::string> names;
  for (const auto& ag : agents) {
    if (!names.insert(ag.name).second)
      throw Error(ErrorKind::Validation, "duplicate agent '" + ag.name + "'");
    if (ag.locals.empty())
      throw Error(ErrorKind::Validation, "agent '" + ag.name + "' has no local states");
    if (ag.actions.empty())
      throw Error(ErrorKind::Validation, "agent '" + ag.name + "' has no actions");
    std::set<std::string> seen(ag.locals.begin(), ag.locals.end());
    if (seen.size() != ag.locals.size())
      throw Error(ErrorKind::Validation, "agent '" + ag.name + "' has duplicate local states");
    std::set<std::string> acts(ag.actions.begin(), ag.actions.end());
    if (acts.size() != ag.actions.size())
      throw Error(ErrorKind::Validation, "agent '" + ag.name + "' has duplicate actions");
    if (ag.protocol.size() != ag.locals.size())
      throw Error(ErrorKind::Validation, "agent '" + ag.name + "' protocol is not total");
    for (std::size_t l = 0; l < ag.protocol.size(); ++l) {
      if (ag.protocol[l].empty())
        throw Error(ErrorKind::EmptyProtocol, "agent '" + ag.name + "' protocol for local state '" +
                                                  ag.locals[l] + "' is empty");
      for (int a : ag.protocol[l])
        if (a < 0 || a >= static_cast<int>(ag.actions.size()))
          throw Error(ErrorKind::UndeclaredSymbol,
                      "agent '" + ag.name + "' protocol references an undeclared action");
    }
  }

  m.agents_ = std::move(agents);
  const int n = m.agentCount();
  m.stateStride_.assign(n, 1);
  m.actStride_.assign(n, 1);
  std::size_t ns = 1, na = 1;
  for (int i = n - 1; i >= 0; --i) {
    m.stateStride_[i] = ns;
    m.actStride_[i] = na;
    ns *= m.agents_[i].locals.size();
    na *= m.agents_[i].actions.size();
  }
  m.stateCount_ = ns;
  m.jointCount_ = na;

  auto checkTuple = [&](const std::vector<int>& t, bool isState, const char* what) {
    if (static_cast<int>(t.size()) != n)
      throw Error(ErrorKind::Validation, std::string(what) + ": tuple arity mismatch");
    for (int i = 0; i < n; ++i) {
      std::size_t lim = isState ? m.agents_[i].locals.size() : m.agents_[i].actions.size();
      if (t[i] < 0 || t[i] >= static_cast<int>(lim))
        throw Error(ErrorKind::UndeclaredSymbol, std::string(what) + ": undeclared symbol");
    }
  };

  // transitions, deduplicated by (state, joint action) with union of targets
  std::vector<std::map<std::size_t, StateSet>> tmap(ns);
  for (const auto& t : transitions) {
    checkTuple(t.from, true, "transition source");
    checkTuple(t.action, false, "transition action");
    checkTuple(t.to, true, "transition target");
    std::size_t s = m.stateOf(t.from), a = m.jointOf(t.action), d = m.stateOf(t.to);
    auto [it, fresh] = tmap[s].try_emplace(a, m.emptySet());
    it->second.set(d);
  }
  m.trans_.resize(ns);
  for (std::size_t s = 0; s < ns; ++s)
    for (auto& [a, post] : tmap[s]) m.trans_[s].emplace_back(a, std::move(post));

  m.localMask_.resize(n);
  for (int i = 0; i < n; ++i) {
    m.localMask_[i].assign(m.agents_[i].locals.size(), m.emptySet());
    for (std::size_t s = 0; s < ns; ++s) m.localMask_[i][m.localOf(s, i)].set(s);
  }

  m.init_ = m.emptySet();
  for (const auto& t : init) {
    checkTuple(t, true, "init state");
    m.init_.set(m.stateOf(t));
  }

  for (const auto& [atom, states] : labels) {
    StateSet set = m.emptySet();
    for (const auto& t : states) {
      checkTuple(t, true, "label state");
      set.set(m.stateOf(t));
    }
    m.labels_.emplace(atom, std::move(set));
  }

  for (const auto& c : fairness) {
    StateSet set = m.emptySet();
    for (const auto& t : c) {
      checkTuple(t, true, "fairness state");
      set.set(m.stateOf(t));
    }
    if (set.none())
      m.warnings_.push_back("fairness constraint is empty: no path is fair");
    m.fairness_.push_back(std::move(set));
  }

  m.validate();
  m.computeReachable();
  return m;
}

void Model::validate() {
  const int n = agentCount();

  // seriality: every state of the full product has some enabled joint action
  for (std::size_t s = 0; s < stateCount_; ++s) {
    bool serial = false;
    for (const auto& [a, post] : trans_[s])
      if (post.any()) { serial = true; break; }
    if (!serial)
      throw Error(ErrorKind::NonSerialState, "state " + stateName(s) + " has no transition");
  }

  // enabled(s, i) derived from T must equal protocol(s_i). A mismatch where
  // two equivalent states differ is the paper's restriction on T; otherwise
  // the format's protocol block disagrees with the transitions.
  for (int i = 0; i < n; ++i) {
    const auto& ag = agents_[i];
    for (std::size_t s = 0; s < stateCount_; ++s) {
      std::vector<int> enabled = enabledAgent(s, i);
      std::vector<int> proto = ag.protocol[localOf(s, i)];
      std::sort(proto.begin(), proto.end());
      if (enabled == proto) continue;
      forEachBit(localMask_[i][localOf(s, i)], [&](std::size_t s2) {
        if (s2 != s && enabledAgent(s2, i) != enabled)
          throw Error(ErrorKind::EnabledConsistencyViolation,
                      "agent '" + ag.name + "' has different enabled actions in equivalent states " +
                          stateName(s) + " and " + stateName(s2));
      });
      throw Error(ErrorKind::ProtocolMismatch,
                  "agent '" + ag.name + "': transitions from " + stateName(s) +
                      " enable a different action set than the protocol declares");
    }
  }
}

void Model::computeReachable() {
  reachable_ = init_;
  auto seeds = toIndices(init_);
  std::deque<std::size_t> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    for (const auto& [a, post] : trans_[s])
      forEachBit(post, [&](std::size_t d) {
        if (!reachable_.test(d)) {
          reachable_.set(d);
          work.push_back(d);
        }
      });
  }
}

}  // namespace atlk
