// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "amf.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace atlk {

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
    if (std::isalnum(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        step();
      cur_.type = Token::Ident;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    cur_.type = Token::Punct;
    if (text_.compare(pos_, 2, "-[") == 0) {
      cur_.text = "-[";
      step(); step();
      return;
    }
    if (text_.compare(pos_, 3, "]->") == 0) {
      cur_.text = "]->";
      step(); step(); step();
      return;
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

// A tuple slot: a name, or a wildcard.
struct Slot {
  std::string name;
  bool wildcard = false;
};

struct RawTransition {
  std::vector<Slot> from, action;
  std::vector<std::string> to;
  int line = 1, col = 1;
};

class AmfParser {
 public:
  explicit AmfParser(const std::string& text) : lex_(text) {}

  Model parse() {
    bool sawTransitions = false, sawInit = false;
    while (lex_.peek().type != Token::End) {
      std::string kw = expectIdent();
      if (kw == "agent") {
        parseAgent();
      } else if (kw == "transitions") {
        if (sawTransitions) fail("duplicate transitions block");
        sawTransitions = true;
        parseTransitions();
      } else if (kw == "labels") {
        parseLabels();
      } else if (kw == "init") {
        if (sawInit) fail("duplicate init block");
        sawInit = true;
        parseInit();
      } else if (kw == "fairness") {
        parseFairness();
      } else {
        fail("expected 'agent', 'transitions', 'labels', 'init' or 'fairness'");
      }
    }
    if (!sawTransitions) fail("missing transitions block");
    if (!sawInit) fail("missing init block");
    return assemble();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    const Token& t = lex_.peek();
    std::ostringstream os;
    os << "model syntax error at " << t.line << ":" << t.col << ": " << msg;
    throw Error(ErrorKind::Syntax, os.str(), t.line, t.col);
  }

  std::string expectIdent() {
    if (lex_.peek().type != Token::Ident) fail("expected identifier");
    return lex_.take().text;
  }

  void expectPunct(const std::string& p) {
    if (lex_.peek().type != Token::Punct || lex_.peek().text != p) fail("expected '" + p + "'");
    lex_.take();
  }

  bool eatPunct(const std::string& p) {
    if (lex_.peek().type == Token::Punct && lex_.peek().text == p) {
      lex_.take();
      return true;
    }
    return false;
  }

  std::vector<std::string> identList() {
    std::vector<std::string> out{expectIdent()};
    while (eatPunct(",")) out.push_back(expectIdent());
    return out;
  }

  void parseAgent() {
    AgentDecl ag;
    ag.name = expectIdent();
    for (const auto& other : agents_)
      if (other.name == ag.name) fail("duplicate agent '" + ag.name + "'");
    expectPunct("{");
    expectKeyword("states");
    expectPunct(":");
    ag.locals = identList();
    expectPunct(";");
    expectKeyword("actions");
    expectPunct(":");
    ag.actions = identList();
    expectPunct(";");
    expectKeyword("protocol");
    expectPunct("{");
    ag.protocol.assign(ag.locals.size(), {});
    std::set<int> defined;
    while (!eatPunct("}")) {
      std::string local = expectIdent();
      int l = ag.localIndex(local);
      if (l < 0) fail("undeclared local state '" + local + "'");
      if (!defined.insert(l).second) fail("duplicate protocol entry for '" + local + "'");
      expectPunct(":");
      for (const auto& a : identList()) {
        int ai = ag.actionIndex(a);
        if (ai < 0) fail("undeclared action '" + a + "'");
        ag.protocol[l].push_back(ai);
      }
      expectPunct(";");
    }
    expectPunct("}");
    if (defined.size() != ag.locals.size())
      fail("protocol of agent '" + ag.name + "' is not total");
    agents_.push_back(std::move(ag));
  }

  void expectKeyword(const std::string& kw) {
    if (lex_.peek().type != Token::Ident || lex_.peek().text != kw) fail("expected '" + kw + "'");
    lex_.take();
  }

  std::vector<Slot> slotTuple(bool allowWildcard) {
    expectPunct("(");
    std::vector<Slot> out;
    do {
      if (allowWildcard && eatPunct("_")) {
        out.push_back({"", true});
      } else {
        out.push_back({expectIdent(), false});
      }
    } while (eatPunct(","));
    expectPunct(")");
    return out;
  }

  std::vector<std::string> nameTuple() {
    std::vector<std::string> out;
    for (auto& s : slotTuple(false)) out.push_back(std::move(s.name));
    return out;
  }

  void parseTransitions() {
    expectPunct("{");
    while (!eatPunct("}")) {
      RawTransition t;
      t.line = lex_.peek().line;
      t.col = lex_.peek().col;
      t.from = slotTuple(true);
      expectPunct("-[");
      do {
        if (eatPunct("_"))
          t.action.push_back({"", true});
        else
          t.action.push_back({expectIdent(), false});
      } while (eatPunct(","));
      expectPunct("]->");
      t.to = nameTuple();
      expectPunct(";");
      rawTransitions_.push_back(std::move(t));
    }
  }

  void parseLabels() {
    expectPunct("{");
    while (!eatPunct("}")) {
      std::string atom = expectIdent();
      expectPunct(":");
      auto& states = labels_[atom];
      do {
        states.push_back(nameTuple());
      } while (eatPunct(","));
      expectPunct(";");
    }
  }

  void parseInit() {
    expectPunct("{");
    while (!eatPunct("}")) {
      init_.push_back(nameTuple());
      expectPunct(";");
    }
  }

  void parseFairness() {
    expectPunct("{");
    if (lex_.peek().type == Token::Ident && lex_.peek().text == "label") {
      lex_.take();
      expectPunct(":");
      fairnessByLabel_.push_back(expectIdent());
      expectPunct(";");
      expectPunct("}");
      fairness_.push_back({});  // placeholder, resolved in assemble()
      fairnessIsLabel_.push_back(true);
      return;
    }
    std::vector<std::vector<std::string>> constraint;
    if (!(lex_.peek().type == Token::Punct && lex_.peek().text == "}")) {
      do {
        constraint.push_back(nameTuple());
      } while (eatPunct(","));
      expectPunct(";");
    }
    expectPunct("}");
    fairness_.push_back(std::move(constraint));
    fairnessIsLabel_.push_back(false);
  }

  std::vector<int> resolveState(const std::vector<std::string>& tuple, int line, int col) const {
    if (tuple.size() != agents_.size())
      throw Error(ErrorKind::Syntax, "state tuple arity mismatch", line, col);
    std::vector<int> out(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      int l = agents_[i].localIndex(tuple[i]);
      if (l < 0)
        throw Error(ErrorKind::UndeclaredSymbol,
                    "undeclared local state '" + tuple[i] + "' for agent '" + agents_[i].name + "'",
                    line, col);
      out[i] = l;
    }
    return out;
  }

  Model assemble() {
    if (agents_.empty()) throw Error(ErrorKind::Syntax, "no agent declared");
    const int n = static_cast<int>(agents_.size());

    std::vector<TransitionDecl> transitions;
    for (const auto& raw : rawTransitions_) {
      if (static_cast<int>(raw.from.size()) != n || static_cast<int>(raw.action.size()) != n)
        throw Error(ErrorKind::Syntax, "transition tuple arity mismatch", raw.line, raw.col);
      std::vector<int> to = resolveState(raw.to, raw.line, raw.col);

      // expand source-local wildcards, then action wildcards over the
      // protocol of the expanded source state
      std::vector<int> from(n);
      std::function<void(int)> expandFrom = [&](int i) {
        if (i == n) {
          std::vector<int> act(n);
          std::function<void(int)> expandAct = [&](int j) {
            if (j == n) {
              transitions.push_back({from, act, to});
              return;
            }
            if (raw.action[j].wildcard) {
              for (int a : agents_[j].protocol[from[j]]) {
                act[j] = a;
                expandAct(j + 1);
              }
            } else {
              int a = agents_[j].actionIndex(raw.action[j].name);
              if (a < 0)
                throw Error(ErrorKind::UndeclaredSymbol,
                            "undeclared action '" + raw.action[j].name + "'", raw.line, raw.col);
              act[j] = a;
              expandAct(j + 1);
            }
          };
          expandAct(0);
          return;
        }
        if (raw.from[i].wildcard) {
          for (std::size_t l = 0; l < agents_[i].locals.size(); ++l) {
            from[i] = static_cast<int>(l);
            expandFrom(i + 1);
          }
        } else {
          int l = agents_[i].localIndex(raw.from[i].name);
          if (l < 0)
            throw Error(ErrorKind::UndeclaredSymbol,
                        "undeclared local state '" + raw.from[i].name + "'", raw.line, raw.col);
          from[i] = l;
          expandFrom(i + 1);
        }
      };
      expandFrom(0);
    }

    std::vector<std::vector<int>> init;
    for (const auto& t : init_) init.push_back(resolveState(t, 1, 1));

    std::map<std::string, std::vector<std::vector<int>>> labels;
    for (const auto& [atom, states] : labels_) {
      auto& out = labels[atom];
      for (const auto& t : states) out.push_back(resolveState(t, 1, 1));
    }

    std::vector<std::vector<std::vector<int>>> fairness;
    std::size_t labelIdx = 0;
    for (std::size_t c = 0; c < fairness_.size(); ++c) {
      if (fairnessIsLabel_[c]) {
        const std::string& atom = fairnessByLabel_[labelIdx++];
        auto it = labels_.find(atom);
        if (it == labels_.end())
          throw Error(ErrorKind::UndeclaredSymbol, "fairness references unknown label '" + atom + "'");
        std::vector<std::vector<int>> constraint;
        for (const auto& t : it->second) constraint.push_back(resolveState(t, 1, 1));
        fairness.push_back(std::move(constraint));
      } else {
        std::vector<std::vector<int>> constraint;
        for (const auto& t : fairness_[c]) constraint.push_back(resolveState(t, 1, 1));
        fairness.push_back(std::move(constraint));
      }
    }

    return Model::build(agents_, transitions, init, labels, fairness);
  }

  Lexer lex_;
  std::vector<AgentDecl> agents_;
  std::vector<RawTransition> rawTransitions_;
  std::map<std::string, std::vector<std::vector<std::string>>> labels_;
  std::vector<std::vector<std::string>> init_;
  std::vector<std::vector<std::vector<std::string>>> fairness_;
  std::vector<bool> fairnessIsLabel_;
  std::vector<std::string> fairnessByLabel_;
};

}  // namespace

Model loadModel(const std::string& text) { return AmfParser(text).parse(); }

Model loadModelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Validation, "cannot open model file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return loadModel(os.str());
}

std::string printModel(const Model& m) {
  std::ostringstream os;
  for (int i = 0; i < m.agentCount(); ++i) {
    const auto& ag = m.agent(i);
    os << "agent " << ag.name << " {\n  states: ";
    for (std::size_t l = 0; l < ag.locals.size(); ++l) os << (l ? ", " : "") << ag.locals[l];
    os << ";\n  actions: ";
    for (std::size_t a = 0; a < ag.actions.size(); ++a) os << (a ? ", " : "") << ag.actions[a];
    os << ";\n  protocol {\n";
    for (std::size_t l = 0; l < ag.locals.size(); ++l) {
      os << "    " << ag.locals[l] << ": ";
      for (std::size_t k = 0; k < ag.protocol[l].size(); ++k)
        os << (k ? ", " : "") << ag.actions[ag.protocol[l][k]];
      os << ";\n";
    }
    os << "  }\n}\n";
  }
  os << "transitions {\n";
  for (std::size_t s = 0; s < m.stateCount(); ++s) {
    for (const auto& [a, post] : m.transitionsFrom(s)) {
      forEachBit(post, [&](std::size_t d) {
        os << "  " << m.stateName(s) << " -[";
        for (int i = 0; i < m.agentCount(); ++i)
          os << (i ? "," : "") << m.agent(i).actions[m.actionPartOf(a, i)];
        os << "]-> " << m.stateName(d) << ";\n";
      });
    }
  }
  os << "}\n";
  if (!m.labels().empty()) {
    os << "labels {\n";
    for (const auto& [atom, set] : m.labels()) {
      os << "  " << atom << ": ";
      bool first = true;
      forEachBit(set, [&](std::size_t s) {
        os << (first ? "" : ", ") << m.stateName(s);
        first = false;
      });
      os << ";\n";
    }
    os << "}\n";
  }
  os << "init {\n";
  forEachBit(m.initSet(), [&](std::size_t s) { os << "  " << m.stateName(s) << ";\n"; });
  os << "}\n";
  for (const auto& f : m.fairness()) {
    os << "fairness { ";
    bool first = true;
    forEachBit(f, [&](std::size_t s) {
      os << (first ? "" : ", ") << m.stateName(s);
      first = false;
    });
    os << "; }\n";
  }
  return os.str();
}

}  // namespace atlk
