// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "types.hpp"

namespace atlk {

enum class FKind {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Know,         // K<i>
  GroupKnow,    // GK<G> (everybody knows)
  DistKnow,     // DK<G>
  CommonKnow,   // CK<G>
  ExistsPath,   // E psi
  ForallPath,   // A psi
  CoalitionCan,     // <<G>> psi
  CoalitionForced,  // [[G]] psi
};

// Path operator attached to a quantified node. `F phi` is surface syntax only
// and is eliminated at parse time into Until(true, phi).
enum class PKind { Next, Globally, Until, WeakUntil };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string name;                 // Atom name, Know agent
  std::vector<std::string> agents;  // coalition for GK/DK/CK/<<>>/[[]]
  PKind path = PKind::Next;         // for path-quantified kinds
  FormulaPtr lhs;                   // operand / left path operand
  FormulaPtr rhs;                   // right operand (And..Iff, Until/WeakUntil)
};

FormulaPtr mkConst(bool v);
FormulaPtr mkAtom(std::string name);
FormulaPtr mkNot(FormulaPtr f);
FormulaPtr mkBinary(FKind kind, FormulaPtr l, FormulaPtr r);
FormulaPtr mkKnow(FKind kind, std::vector<std::string> agents, FormulaPtr f);
FormulaPtr mkPath(FKind kind, std::vector<std::string> agents, PKind path, FormulaPtr l,
                  FormulaPtr r = nullptr);

// A bare path formula, used by negatePath and by engine entry points.
struct PathTerm {
  PKind kind;
  FormulaPtr lhs;
  FormulaPtr rhs;  // only for Until/WeakUntil
};

// psi' such that on every infinite path, psi' holds iff psi fails:
//   !X p         -> X !p
//   !G p         -> [true U !p]
//   ![p U q]     -> [!q W (!p & !q)]
//   ![p W q]     -> [!q U (!p & !q)]
PathTerm negatePath(const PathTerm& psi);

FormulaPtr parseFormula(const std::string& text);
std::string printFormula(const FormulaPtr& f);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

}  // namespace atlk
