#include "pi2cut/sexpr.h"

#include <cctype>

#include "pi2cut/error.h"

namespace pi2cut {

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  std::vector<SExpr> ReadAll() {
    std::vector<SExpr> out;
    SkipSpace();
    while (pos_ < text_.size()) {
      out.push_back(Read());
      SkipSpace();
    }
    return out;
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        break;
      }
    }
  }

  SExpr Read() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      e.is_list = true;
      Advance();
      for (;;) {
        SkipSpace();
        if (pos_ >= text_.size())
          throw ParseError("unterminated list", e.line, e.col);
        if (text_[pos_] == ')') {
          Advance();
          break;
        }
        e.items.push_back(Read());
      }
      return e;
    }
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c)))
        break;
      e.atom += c;
      Advance();
    }
    return e;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool IsIdentifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'' &&
        c != '-' && c != '.')
      return false;
  return true;
}

}  // namespace

std::vector<SExpr> ReadSExprs(const std::string& text) {
  return Reader(text).ReadAll();
}

SExpr ReadSingleSExpr(const std::string& text) {
  std::vector<SExpr> all = ReadSExprs(text);
  if (all.size() != 1)
    throw ParseError("expected exactly one expression, found " +
                     std::to_string(all.size()));
  return all[0];
}

void FailAt(const SExpr& e, const std::string& msg) {
  throw ParseError(msg, e.line, e.col);
}

bool ParseContext::IsVariable(const std::string& name) const {
  if (variables.count(name)) return true;
  if (reserved_are_variables && IsReservedVariable(name)) return true;
  return unknown_are_variables && sig && !sig->HasFunction(name) &&
         !sig->HasPredicate(name);
}

Term ParseTerm(const SExpr& e, const ParseContext& ctx) {
  if (!e.is_list) {
    if (!IsIdentifier(e.atom)) FailAt(e, "bad identifier '" + e.atom + "'");
    if (ctx.IsVariable(e.atom)) return Term::Var(e.atom);
    if (ctx.sig) {
      int ar = ctx.sig->FunctionArity(e.atom);
      if (ar < 0) FailAt(e, "unknown symbol '" + e.atom + "'");
      if (ar != 0)
        FailAt(e, "function '" + e.atom + "' expects " + std::to_string(ar) +
                      " arguments");
    }
    return Term::App(e.atom);
  }
  if (e.items.empty() || e.items[0].is_list)
    FailAt(e, "expected a function application");
  const std::string& f = e.items[0].atom;
  if (ctx.IsVariable(f)) FailAt(e, "variable '" + f + "' applied to arguments");
  std::vector<Term> args;
  for (size_t i = 1; i < e.items.size(); ++i)
    args.push_back(ParseTerm(e.items[i], ctx));
  if (ctx.sig) {
    int ar = ctx.sig->FunctionArity(f);
    if (ar < 0) FailAt(e, "unknown function symbol '" + f + "'");
    if (ar != static_cast<int>(args.size()))
      FailAt(e, "function '" + f + "' expects " + std::to_string(ar) +
                    " arguments, got " + std::to_string(args.size()));
  }
  return Term::App(f, std::move(args));
}

Formula ParseFormula(const SExpr& e, const ParseContext& ctx) {
  if (!e.is_list) {
    if (ctx.sig) {
      int ar = ctx.sig->PredicateArity(e.atom);
      if (ar < 0) FailAt(e, "unknown predicate '" + e.atom + "'");
      if (ar != 0) FailAt(e, "predicate '" + e.atom + "' needs arguments");
    }
    if (!IsIdentifier(e.atom)) FailAt(e, "bad identifier '" + e.atom + "'");
    return Formula::Atom(e.atom);
  }
  if (e.items.empty() || e.items[0].is_list) FailAt(e, "expected a formula");
  const std::string& head = e.items[0].atom;
  size_t n = e.items.size() - 1;
  if (head == "not") {
    if (n != 1) FailAt(e, "'not' takes one argument");
    return Formula::Not(ParseFormula(e.items[1], ctx));
  }
  if (head == "and" || head == "or") {
    if (n < 2) FailAt(e, "'" + head + "' takes at least two arguments");
    std::vector<Formula> parts;
    for (size_t i = 1; i < e.items.size(); ++i)
      parts.push_back(ParseFormula(e.items[i], ctx));
    return head == "and" ? Formula::AndAll(parts) : Formula::OrAll(parts);
  }
  if (head == "imp") {
    if (n != 2) FailAt(e, "'imp' takes two arguments");
    return Formula::Imp(ParseFormula(e.items[1], ctx),
                        ParseFormula(e.items[2], ctx));
  }
  if (head == "forall" || head == "exists") {
    if (n != 2 || e.items[1].is_list) FailAt(e, "expected (" + head + " v A)");
    const std::string& v = e.items[1].atom;
    if (ctx.sig && ctx.sig->FunctionArity(v) >= 0)
      FailAt(e.items[1], "bound variable clashes with symbol '" + v + "'");
    ParseContext inner = ctx;
    inner.variables.insert(v);
    Formula body = ParseFormula(e.items[2], inner);
    return head == "forall" ? Formula::Forall(v, body)
                            : Formula::Exists(v, body);
  }
  std::vector<Term> args;
  for (size_t i = 1; i < e.items.size(); ++i)
    args.push_back(ParseTerm(e.items[i], ctx));
  if (ctx.sig) {
    int ar = ctx.sig->PredicateArity(head);
    if (ar < 0) FailAt(e, "unknown predicate '" + head + "'");
    if (ar != static_cast<int>(args.size()))
      FailAt(e, "predicate '" + head + "' expects " + std::to_string(ar) +
                    " arguments, got " + std::to_string(args.size()));
  }
  return Formula::Atom(head, std::move(args));
}

Literal ParseLiteral(const SExpr& e, const ParseContext& ctx) {
  Formula f = ParseFormula(e, ctx);
  if (f.is_atom()) return Literal(true, f);
  if (f.conn() == Conn::kNot && f.sub(0).is_atom())
    return Literal(false, f.sub(0));
  FailAt(e, "expected a literal");
}

}  // namespace pi2cut
