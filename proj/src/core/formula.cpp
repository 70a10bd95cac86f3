// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "formula.hpp"

#include <cctype>
#include <cstring>
#include <ostream>
#include <sstream>

namespace atlk {

FormulaPtr mkConst(bool v) {
  auto f = std::make_shared<Formula>();
  f->kind = v ? FKind::True : FKind::False;
  return f;
}

FormulaPtr mkAtom(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Atom;
  f->name = std::move(name);
  return f;
}

FormulaPtr mkNot(FormulaPtr x) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Not;
  f->lhs = std::move(x);
  return f;
}

FormulaPtr mkBinary(FKind kind, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr mkKnow(FKind kind, std::vector<std::string> agents, FormulaPtr x) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  if (kind == FKind::Know)
    f->name = agents.at(0);
  else
    f->agents = std::move(agents);
  f->lhs = std::move(x);
  return f;
}

FormulaPtr mkPath(FKind kind, std::vector<std::string> agents, PKind path, FormulaPtr l,
                  FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->agents = std::move(agents);
  f->path = path;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

PathTerm negatePath(const PathTerm& psi) {
  switch (psi.kind) {
    case PKind::Next:
      return {PKind::Next, mkNot(psi.lhs), nullptr};
    case PKind::Globally:
      return {PKind::Until, mkConst(true), mkNot(psi.lhs)};
    case PKind::Until:
      return {PKind::WeakUntil, mkNot(psi.rhs),
              mkBinary(FKind::And, mkNot(psi.lhs), mkNot(psi.rhs))};
    case PKind::WeakUntil:
      return {PKind::Until, mkNot(psi.rhs),
              mkBinary(FKind::And, mkNot(psi.lhs), mkNot(psi.rhs))};
  }
  return psi;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->agents != b->agents) return false;
  switch (a->kind) {
    case FKind::ExistsPath:
    case FKind::ForallPath:
    case FKind::CoalitionCan:
    case FKind::CoalitionForced:
      if (a->path != b->path) return false;
      break;
    default:
      break;
  }
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

namespace {

struct Token {
  enum Type { Ident, Punct, End } type = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    skipWs();
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_.type = Token::End;
      cur_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        step();
      cur_.type = Token::Ident;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    cur_.type = Token::Punct;
    for (const char* p : {"<->", "->", "<<", ">>", "[[", "]]"}) {
      if (text_.compare(pos_, std::strlen(p), p) == 0) {
        cur_.text = p;
        for (std::size_t i = 0; i < std::strlen(p); ++i) step();
        return;
      }
    }
    cur_.text = std::string(1, c);
    step();
  }

  void skipWs() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = iff();
    if (lex_.peek().type != Token::End) fail("end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = lex_.peek();
    std::ostringstream os;
    os << "formula syntax error at " << t.line << ":" << t.col << ": expected " << expected
       << ", got '" << (t.type == Token::End ? "<eof>" : t.text) << "'";
    throw Error(ErrorKind::Syntax, os.str(), t.line, t.col);
  }

  bool eatPunct(const std::string& p) {
    if (lex_.peek().type == Token::Punct && lex_.peek().text == p) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expectPunct(const std::string& p) {
    if (!eatPunct(p)) fail("'" + p + "'");
  }

  bool peekIs(Token::Type ty, const std::string& text) const {
    return lex_.peek().type == ty && lex_.peek().text == text;
  }

  std::string expectIdent() {
    if (lex_.peek().type != Token::Ident) fail("identifier");
    return lex_.take().text;
  }

  FormulaPtr iff() {
    FormulaPtr f = impl();
    while (eatPunct("<->")) f = mkBinary(FKind::Iff, f, impl());
    return f;
  }

  FormulaPtr impl() {
    FormulaPtr f = orExpr();
    if (eatPunct("->")) return mkBinary(FKind::Implies, f, impl());
    return f;
  }

  FormulaPtr orExpr() {
    FormulaPtr f = andExpr();
    while (eatPunct("|")) f = mkBinary(FKind::Or, f, andExpr());
    return f;
  }

  FormulaPtr andExpr() {
    FormulaPtr f = unary();
    while (eatPunct("&")) f = mkBinary(FKind::And, f, unary());
    return f;
  }

  std::vector<std::string> identList() {
    std::vector<std::string> names{expectIdent()};
    while (eatPunct(",")) names.push_back(expectIdent());
    return names;
  }

  // ("X"|"G"|"F") unary | "[" formula ("U"|"W") formula "]"
  void pathOp(PKind& kind, FormulaPtr& l, FormulaPtr& r) {
    if (eatPunct("[")) {
      l = iff();
      std::string op = expectIdent();
      if (op == "U")
        kind = PKind::Until;
      else if (op == "W")
        kind = PKind::WeakUntil;
      else
        fail("'U' or 'W'");
      r = iff();
      expectPunct("]");
      return;
    }
    if (lex_.peek().type != Token::Ident) fail("'X', 'G', 'F' or '['");
    std::string op = lex_.take().text;
    if (op == "X") {
      kind = PKind::Next;
      l = unary();
    } else if (op == "G") {
      kind = PKind::Globally;
      l = unary();
    } else if (op == "F") {
      kind = PKind::Until;
      l = mkConst(true);
      r = unary();
    } else {
      fail("'X', 'G', 'F' or '['");
    }
  }

  FormulaPtr quantified(FKind kind, std::vector<std::string> agents) {
    PKind p{};
    FormulaPtr l, r;
    pathOp(p, l, r);
    return mkPath(kind, std::move(agents), p, std::move(l), std::move(r));
  }

  FormulaPtr unary() {
    if (eatPunct("!")) return mkNot(unary());
    if (eatPunct("(")) {
      FormulaPtr f = iff();
      expectPunct(")");
      return f;
    }
    if (eatPunct("<<")) {
      auto agents = identList();
      expectPunct(">>");
      return quantified(FKind::CoalitionCan, std::move(agents));
    }
    if (eatPunct("[[")) {
      auto agents = identList();
      expectPunct("]]");
      return quantified(FKind::CoalitionForced, std::move(agents));
    }
    if (lex_.peek().type != Token::Ident) fail("formula");
    std::string id = lex_.take().text;
    if (id == "true") return mkConst(true);
    if (id == "false") return mkConst(false);
    if (id == "EX") return mkPath(FKind::ExistsPath, {}, PKind::Next, unary());
    if (id == "EG") return mkPath(FKind::ExistsPath, {}, PKind::Globally, unary());
    if (id == "EF") return mkPath(FKind::ExistsPath, {}, PKind::Until, mkConst(true), unary());
    if (id == "AX") return mkPath(FKind::ForallPath, {}, PKind::Next, unary());
    if (id == "AG") return mkPath(FKind::ForallPath, {}, PKind::Globally, unary());
    if (id == "AF") return mkPath(FKind::ForallPath, {}, PKind::Until, mkConst(true), unary());
    if ((id == "E" || id == "A") && peekIs(Token::Punct, "[")) {
      PKind p{};
      FormulaPtr l, r;
      pathOp(p, l, r);
      return mkPath(id == "E" ? FKind::ExistsPath : FKind::ForallPath, {}, p, std::move(l),
                    std::move(r));
    }
    if (id == "K" && peekIs(Token::Punct, "<")) {
      expectPunct("<");
      std::string agent = expectIdent();
      expectPunct(">");
      return mkKnow(FKind::Know, {agent}, unary());
    }
    if ((id == "GK" || id == "DK" || id == "CK") && peekIs(Token::Punct, "<")) {
      expectPunct("<");
      auto agents = identList();
      expectPunct(">");
      FKind k = id == "GK" ? FKind::GroupKnow : id == "DK" ? FKind::DistKnow : FKind::CommonKnow;
      return mkKnow(k, std::move(agents), unary());
    }
    return mkAtom(id);
  }

  Lexer lex_;
};

void printInto(std::ostream& os, const FormulaPtr& f);

void printPath(std::ostream& os, const Formula& f) {
  switch (f.path) {
    case PKind::Next:
      os << "X ";
      printInto(os, f.lhs);
      break;
    case PKind::Globally:
      os << "G ";
      printInto(os, f.lhs);
      break;
    case PKind::Until:
    case PKind::WeakUntil:
      os << "[";
      printInto(os, f.lhs);
      os << (f.path == PKind::Until ? " U " : " W ");
      printInto(os, f.rhs);
      os << "]";
      break;
  }
}

void printList(std::ostream& os, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ",";
    os << names[i];
  }
}

void printInto(std::ostream& os, const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True: os << "true"; break;
    case FKind::False: os << "false"; break;
    case FKind::Atom: os << f->name; break;
    case FKind::Not:
      os << "!";
      printInto(os, f->lhs);
      break;
    case FKind::And:
    case FKind::Or:
    case FKind::Implies:
    case FKind::Iff: {
      const char* op = f->kind == FKind::And   ? " & "
                       : f->kind == FKind::Or  ? " | "
                       : f->kind == FKind::Implies ? " -> "
                                                   : " <-> ";
      os << "(";
      printInto(os, f->lhs);
      os << op;
      printInto(os, f->rhs);
      os << ")";
      break;
    }
    case FKind::Know:
      os << "K<" << f->name << "> ";
      printInto(os, f->lhs);
      break;
    case FKind::GroupKnow:
    case FKind::DistKnow:
    case FKind::CommonKnow:
      os << (f->kind == FKind::GroupKnow ? "GK<" : f->kind == FKind::DistKnow ? "DK<" : "CK<");
      printList(os, f->agents);
      os << "> ";
      printInto(os, f->lhs);
      break;
    case FKind::ExistsPath:
    case FKind::ForallPath: {
      bool ex = f->kind == FKind::ExistsPath;
      if (f->path == PKind::Next) {
        os << (ex ? "EX " : "AX ");
        printInto(os, f->lhs);
      } else if (f->path == PKind::Globally) {
        os << (ex ? "EG " : "AG ");
        printInto(os, f->lhs);
      } else {
        os << (ex ? "E " : "A ");
        printPath(os, *f);
      }
      break;
    }
    case FKind::CoalitionCan:
      os << "<<";
      printList(os, f->agents);
      os << ">> ";
      printPath(os, *f);
      break;
    case FKind::CoalitionForced:
      os << "[[";
      printList(os, f->agents);
      os << "]] ";
      printPath(os, *f);
      break;
  }
}

}  // namespace

FormulaPtr parseFormula(const std::string& text) { return Parser(text).parse(); }

std::string printFormula(const FormulaPtr& f) {
  std::ostringstream os;
  printInto(os, f);
  return os.str();
}

}  // namespace atlk
