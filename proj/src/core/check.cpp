// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "check.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace atlk {

namespace {

// One winning uniform strategy for a top-level <<G>>psi query: the first
// strategy in deterministic split order whose filtered winning set covers all
// initial states. Lines are `class(local_i,...) -> action_i,...`, one per
// tuple of coalition local states.
std::vector<std::string> findWitness(Evaluator& ev, const FormulaPtr& f) {
  const Model& m = ev.model();
  auto gamma = ev.bindAgents(f->agents);
  const CoalitionIndex& ci = ev.index(gamma);
  PathQuery q{f->path, ev.eval(f->lhs), m.emptySet()};
  if (f->path == PKind::Until || f->path == PKind::WeakUntil) q.b = ev.eval(f->rhs);

  std::vector<std::string> lines;
  bool found = false;
  forEachSplit(ci, ci.allEnabledPairs(), [&](const PairSet& strat) {
    if (found) return;
    PreOps pre{ci, &strat};
    StateSet w = evalExists(pre, q, ev.stats());
    if (!m.initSet().is_subset_of(uniformFilter(m, gamma, w))) return;
    found = true;
    // Enumerate the coalition-local tuples; every state in a tuple's class
    // carries the same coalition action (the strategy is conflict-free).
    std::vector<int> locals(gamma.size(), 0);
    for (;;) {
      std::vector<int> full(m.agentCount(), 0);
      for (std::size_t k = 0; k < gamma.size(); ++k) full[gamma[k]] = locals[k];
      std::size_t rep = m.stateOf(full);
      std::size_t chosen = 0;
      bool has = false;
      for (std::size_t ca = 0; ca < strat.actCount; ++ca)
        if (strat.test(rep, ca)) {
          chosen = ca;
          has = true;
          break;
        }
      std::ostringstream os;
      os << "class(";
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        if (k) os << ',';
        os << m.agent(gamma[k]).locals[locals[k]];
      }
      os << ") -> " << (has ? ci.caName(chosen) : "-");
      lines.push_back(os.str());
      std::size_t k = gamma.size();
      for (;;) {
        if (k == 0) return;
        --k;
        if (++locals[k] < static_cast<int>(m.agent(gamma[k]).locals.size())) break;
        locals[k] = 0;
      }
    }
  });
  return lines;
}

}  // namespace

CheckResult check(const Model& m, const FormulaPtr& f, const CheckOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.formulaText = printFormula(f);
  r.sat = m.emptySet();

  Evaluator ev(m, opts.semantics, opts.algorithm);
  r.sat = ev.eval(f);
  r.holdsInAllInit = m.initSet().is_subset_of(r.sat);

  StateSet display = r.sat;
  if (opts.reachableOnly) display &= m.reachable();
  forEachBit(display, [&](std::size_t s) { r.satNames.push_back(m.stateName(s)); });

  if (opts.collectWitness && f->kind == FKind::CoalitionCan && opts.semantics == Semantics::Po)
    r.witnessLines = findWitness(ev, f);

  r.diag.strategiesEnumerated = ev.poStats().strategiesEnumerated;
  r.diag.branchesPruned = ev.poStats().branchesPruned;
  r.diag.fixpointIterations = ev.stats().fixpointIterations;

  if (opts.runOracle) {
    r.oracleRan = true;
    r.oracleMatch = oracleEval(m, f, opts.semantics, opts.strategyCap) == r.sat;
  }

  r.diag.elapsedMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string renderText(const Model& m, const CheckResult& r, bool verbose) {
  std::ostringstream os;
  os << "formula: " << r.formulaText << "\n";
  os << "holds in all initial states: " << (r.holdsInAllInit ? "yes" : "no") << "\n";
  os << "satisfying states (" << r.satNames.size() << "):";
  for (const auto& s : r.satNames) os << ' ' << s;
  os << "\n";
  if (!r.witnessLines.empty()) {
    os << "witness strategy:\n";
    for (const auto& l : r.witnessLines) os << "  " << l << "\n";
  }
  if (r.oracleRan) os << "oracle: " << (r.oracleMatch ? "MATCH" : "MISMATCH") << "\n";
  if (verbose) {
    os << "diagnostics: strategiesEnumerated=" << r.diag.strategiesEnumerated
       << " branchesPruned=" << r.diag.branchesPruned
       << " fixpointIterations=" << r.diag.fixpointIterations << " elapsedMs=" << r.diag.elapsedMs
       << "\n";
    for (const auto& w : m.warnings()) os << "warning: " << w << "\n";
  }
  return os.str();
}

std::string renderJson(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["formula"] = r.formulaText;
  j["holdsInAllInit"] = r.holdsInAllInit;
  j["satStates"] = r.satNames;
  j["diagnostics"] = {{"strategiesEnumerated", r.diag.strategiesEnumerated},
                      {"branchesPruned", r.diag.branchesPruned},
                      {"fixpointIterations", r.diag.fixpointIterations}};
  if (!r.witnessLines.empty()) j["witness"] = r.witnessLines;
  if (r.oracleRan) j["oracle"] = r.oracleMatch ? "match" : "mismatch";
  return j.dump(2) + "\n";
}

}  // namespace atlk
