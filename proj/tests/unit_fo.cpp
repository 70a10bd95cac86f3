// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "test_util.hpp"

using namespace atlk;
using namespace atlk::test;

TEST_CASE("pre-image operators on m1/m2") {
  Model m1 = loadFixture("m1.amf");
  EngineStats st;
  CoalitionIndex cg(m1, {0});
  PreOps pre{cg, nullptr};
  StateSet y = namedStates(m1, {"(y)"});

  CHECK(pre.forced(y) == y);               // from x, action a stays at x
  CHECK(pre.forced(m1.emptySet()) == m1.emptySet());
  CHECK(pre.forced(m1.fullSet()) == m1.fullSet());
  CHECK(pre.exists(y) == m1.fullSet());    // x reaches y via b
  CHECK(pre.exists(m1.fullSet()) == m1.fullSet());

  Model m2 = loadFixture("m2.amf");
  CoalitionIndex ce(m2, {});
  PreOps pre0{ce, nullptr};
  StateSet uw = namedStates(m2, {"(u,w)"});
  CHECK(pre0.exists(uw) == uw);  // empty coalition: all successors inside Z
}

TEST_CASE("duality of pre and of the four operator forms") {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    Model m = randomModel(seed);
    Rng rng(seed + 1000);
    for (const auto& gamma : allCoalitions(m)) {
      CoalitionIndex ci(m, gamma);
      PreOps pre{ci, nullptr};
      EngineStats st;
      for (int t = 0; t < 4; ++t) {
        StateSet z = randomQuery(m, rng).a;
        CHECK(pre.exists(z) == ~pre.forced(~z));
      }
      for (int t = 0; t < 6; ++t) {
        PathQuery q = randomQuery(m, rng);
        CHECK(evalExists(pre, q, st) == ~evalForced(pre, negateQuery(m, q), st));
      }
    }
  }
}

TEST_CASE("fairness degeneracy") {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    Model m = randomModel(seed * 7 + 3, 2, 3, 2);
    if (!m.fairness().empty()) continue;
    for (const auto& gamma : allCoalitions(m)) {
      CoalitionIndex ci(m, gamma);
      PreOps pre{ci, nullptr};
      EngineStats st;
      CHECK(fairForced(pre, st) == m.fullSet());
    }
  }
  // a single empty constraint kills all fair paths
  const char* text = R"(
    agent g { states: x, y; actions: a, b; protocol { x: a, b; y: a, b; } }
    transitions { (x)-[a]->(x); (x)-[b]->(y); (y)-[a]->(y); (y)-[b]->(y); }
    labels { p: (y); }
    init { (x); }
    fairness { }
  )";
  Model m = loadModel(text);
  CoalitionIndex ci(m, {0});
  PreOps pre{ci, nullptr};
  EngineStats st;
  CHECK(fairForced(pre, st) == m.emptySet());
}

TEST_CASE("m1 fixpoint point checks") {
  Model m = loadFixture("m1.amf");
  Evaluator fo(m, Semantics::Fo);
  StateSet y = namedStates(m, {"(y)"});

  CHECK(fo.eval(parseFormula("EG p")) == y);
  CHECK(fo.eval(parseFormula("E[true U p]")) == m.fullSet());
  CHECK(fo.eval(parseFormula("<<g>> G p")) == y);
  CHECK(fo.eval(parseFormula("[[g]] G p")) == y);
  CHECK(fo.eval(parseFormula("AX true")) == m.fullSet());
  CHECK(fo.eval(parseFormula("!p | p")) == m.fullSet());
  CHECK(fo.eval(parseFormula("<<g>> X true")) == m.fullSet());
}

TEST_CASE("m2 fixpoint point checks") {
  Model m = loadFixture("m2.amf");
  Evaluator fo(m, Semantics::Fo);
  CHECK(fo.eval(parseFormula("<<g>> X q")) == m.fullSet());
  CHECK(fo.eval(parseFormula("DK<g,e> q")) == namedStates(m, {"(u,w)"}));
  CHECK(fo.eval(parseFormula("K<e> true")) == m.fullSet());
}

TEST_CASE("restricted pre and restricted evaluation on m2") {
  Model m = loadFixture("m2.amf");
  CoalitionIndex ci(m, {0});
  EngineStats st;
  StateSet uw = namedStates(m, {"(u,w)"});

  int a = m.agent(0).actionIndex("a"), b = m.agent(0).actionIndex("b");
  PairSet stratB = ci.emptyPairs(), stratA = ci.emptyPairs();
  for (std::size_t s = 0; s < m.stateCount(); ++s) {
    stratB.set(s, static_cast<std::size_t>(b));
    stratA.set(s, static_cast<std::size_t>(a));
  }
  PreOps preB{ci, &stratB}, preA{ci, &stratA};
  CHECK(preB.exists(uw) == m.fullSet());
  CHECK(preA.exists(uw) == uw);

  PathQuery xq{PKind::Next, uw, m.emptySet()};
  CHECK(evalExists(preB, xq, st) == m.fullSet());
  CHECK(evalExists(preA, xq, st) == uw);

  PairSet none = ci.emptyPairs();
  PreOps preNone{ci, &none};
  for (PKind k : {PKind::Next, PKind::Globally, PKind::Until, PKind::WeakUntil}) {
    PathQuery q{k, uw, uw};
    CHECK(evalExists(preNone, q, st) == m.emptySet());
  }
}

TEST_CASE("action-coupled pre and evaluation on m2") {
  Model m = loadFixture("m2.amf");
  CoalitionIndex ci(m, {0});
  EngineStats st;
  std::size_t uv = m.stateOf({0, 0}), uw = m.stateOf({0, 1});
  std::size_t a = static_cast<std::size_t>(m.agent(0).actionIndex("a"));
  std::size_t b = static_cast<std::size_t>(m.agent(0).actionIndex("b"));

  PairSet all = ci.allEnabledPairs();
  CHECK(all.count() == 4);

  // StatesActions with Z={(u,w)}
  PairSet sa = statesActions(ci, all, namedStates(m, {"(u,w)"}));
  CHECK(sa.count() == 2);
  CHECK(sa.test(uw, a));
  CHECK(sa.test(uw, b));

  // Pre^ac with Zp = both (u,w) pairs
  PairSet pa = preExistsAc(ci, all, sa);
  CHECK(pa.count() == 3);
  CHECK(pa.test(uv, b));
  CHECK(pa.test(uw, a));
  CHECK(pa.test(uw, b));
  CHECK(!pa.test(uv, a));
  CHECK(!preExistsAc(ci, all, ci.emptyPairs()).any());
  CHECK(preExistsAc(ci, all, all).bits == all.bits);

  PathQuery xq{PKind::Next, namedStates(m, {"(u,w)"}), m.emptySet()};
  PairSet z = evalExistsAc(ci, all, xq, st);
  CHECK(z.bits == pa.bits);
  CHECK(!evalExistsAc(ci, ci.emptyPairs(), xq, st).any());
}

TEST_CASE("ac state projection agrees with plain exists evaluation") {
  const char* fixtures[] = {"m1.amf", "m2.amf", "cg_oneround.amf"};
  for (const char* name : fixtures) {
    Model m = loadFixture(name);
    const char* atom = std::string(name) == "m1.amf" ? "p" : (std::string(name) == "m2.amf" ? "q" : "win");
    StateSet a = *m.label(atom);
    CoalitionIndex ci(m, {0});
    PreOps pre{ci, nullptr};
    EngineStats st;
    std::vector<PathQuery> queries = {
        {PKind::Next, a, m.emptySet()},
        {PKind::Globally, a, m.emptySet()},
        {PKind::Until, ~a, a},
        {PKind::WeakUntil, ~a, a},
        {PKind::Until, m.fullSet(), a},
    };
    for (const auto& q : queries) {
      PairSet z = evalExistsAc(ci, ci.allEnabledPairs(), q, st);
      CHECK(z.stateProjection() == evalExists(pre, q, st));
    }
  }
}
