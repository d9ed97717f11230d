#include "pi2cut/formula.h"

#include <algorithm>
#include <functional>

#include "pi2cut/error.h"

namespace pi2cut {

struct Formula::Node {
  Conn conn;
  std::string name;  // predicate or bound variable
  std::vector<Term> terms;
  std::vector<Formula> subs;
  std::string text;
  size_t hash;
  bool qfree;
  int symbols;
};

namespace {

const char* ConnWord(Conn c) {
  switch (c) {
    case Conn::kNot: return "not";
    case Conn::kAnd: return "and";
    case Conn::kOr: return "or";
    case Conn::kImp: return "imp";
    case Conn::kForall: return "forall";
    case Conn::kExists: return "exists";
    default: return "";
  }
}

}  // namespace

Formula::Formula() : Formula(Atom("_")) {}

Formula Formula::Atom(const std::string& pred, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::kAtom;
  n->name = pred;
  n->qfree = true;
  n->symbols = 1;
  if (args.empty()) {
    n->text = pred;
  } else {
    n->text = "(" + pred;
    for (const Term& t : args) {
      n->text += ' ';
      n->text += t.text();
      n->symbols += t.size();
    }
    n->text += ')';
  }
  n->terms = std::move(args);
  n->hash = std::hash<std::string>()(n->text);
  return Formula(std::move(n));
}

Formula Formula::Make(Conn c, std::vector<Formula> subs, std::string var) {
  auto n = std::make_shared<Node>();
  n->conn = c;
  n->name = std::move(var);
  n->qfree = c != Conn::kForall && c != Conn::kExists;
  n->symbols = (c == Conn::kForall || c == Conn::kExists) ? 2 : 1;
  n->text = "(";
  n->text += ConnWord(c);
  if (!n->name.empty()) n->text += " " + n->name;
  if (c == Conn::kAnd || c == Conn::kOr) {
    // Flatten right-nested chains of the same connective.
    n->text += ' ';
    n->text += subs[0].text();
    const Formula* rest = &subs[1];
    while (rest->conn() == c) {
      n->text += ' ';
      n->text += rest->sub(0).text();
      rest = &rest->sub(1);
    }
    n->text += ' ';
    n->text += rest->text();
  } else {
    for (const Formula& s : subs) {
      n->text += ' ';
      n->text += s.text();
    }
  }
  n->text += ')';
  for (const Formula& s : subs) {
    n->qfree = n->qfree && s.quantifier_free();
    n->symbols += s.symbols();
  }
  n->subs = std::move(subs);
  n->hash = std::hash<std::string>()(n->text);
  return Formula(std::move(n));
}

Formula Formula::Not(Formula a) { return Make(Conn::kNot, {std::move(a)}, ""); }
Formula Formula::And(Formula a, Formula b) {
  return Make(Conn::kAnd, {std::move(a), std::move(b)}, "");
}
Formula Formula::Or(Formula a, Formula b) {
  return Make(Conn::kOr, {std::move(a), std::move(b)}, "");
}
Formula Formula::Imp(Formula a, Formula b) {
  return Make(Conn::kImp, {std::move(a), std::move(b)}, "");
}
Formula Formula::Forall(const std::string& var, Formula body) {
  return Make(Conn::kForall, {std::move(body)}, var);
}
Formula Formula::Exists(const std::string& var, Formula body) {
  return Make(Conn::kExists, {std::move(body)}, var);
}

Formula Formula::AndAll(const std::vector<Formula>& parts) {
  if (parts.empty()) throw ShapeError("empty conjunction");
  Formula f = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) f = And(parts[i], f);
  return f;
}

Formula Formula::OrAll(const std::vector<Formula>& parts) {
  if (parts.empty()) throw ShapeError("empty disjunction");
  Formula f = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) f = Or(parts[i], f);
  return f;
}

Conn Formula::conn() const { return node_->conn; }
const std::string& Formula::pred() const { return node_->name; }
const std::vector<Term>& Formula::terms() const { return node_->terms; }
const Formula& Formula::sub(int i) const { return node_->subs[i]; }
const std::string& Formula::var() const { return node_->name; }
const std::string& Formula::text() const { return node_->text; }
size_t Formula::hash() const { return node_->hash; }
bool Formula::quantifier_free() const { return node_->qfree; }
int Formula::symbols() const { return node_->symbols; }

bool Formula::operator==(const Formula& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Formula::operator<=>(const Formula& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (auto c = text() <=> o.text(); c != 0) return c;
  if (auto c = conn() <=> o.conn(); c != 0) return c;
  for (size_t i = 0; i < node_->terms.size(); ++i)
    if (auto c = node_->terms[i] <=> o.node_->terms[i]; c != 0) return c;
  for (size_t i = 0; i < node_->subs.size(); ++i)
    if (auto c = node_->subs[i] <=> o.node_->subs[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

void Formula::CollectFreeVars(std::set<std::string>& out) const {
  switch (conn()) {
    case Conn::kAtom:
      for (const Term& t : terms()) t.CollectVars(out);
      return;
    case Conn::kForall:
    case Conn::kExists: {
      std::set<std::string> inner;
      sub(0).CollectFreeVars(inner);
      inner.erase(var());
      out.insert(inner.begin(), inner.end());
      return;
    }
    default:
      for (const Formula& s : node_->subs) s.CollectFreeVars(out);
  }
}

void Formula::CollectAtoms(std::set<Formula>& out) const {
  if (is_atom()) {
    out.insert(*this);
    return;
  }
  for (const Formula& s : node_->subs) s.CollectAtoms(out);
}

bool Formula::ContainsVar(const std::string& v) const {
  std::set<std::string> fv;
  CollectFreeVars(fv);
  return fv.count(v) > 0;
}

Formula Substitute(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  switch (f.conn()) {
    case Conn::kAtom: {
      std::vector<Term> ts;
      ts.reserve(f.terms().size());
      for (const Term& t : f.terms()) ts.push_back(Substitute(t, s));
      return Formula::Atom(f.pred(), std::move(ts));
    }
    case Conn::kNot:
      return Formula::Not(Substitute(f.sub(0), s));
    case Conn::kAnd:
      return Formula::And(Substitute(f.sub(0), s), Substitute(f.sub(1), s));
    case Conn::kOr:
      return Formula::Or(Substitute(f.sub(0), s), Substitute(f.sub(1), s));
    case Conn::kImp:
      return Formula::Imp(Substitute(f.sub(0), s), Substitute(f.sub(1), s));
    case Conn::kForall:
    case Conn::kExists: {
      Substitution inner = s;
      inner.erase(f.var());
      std::set<std::string> body_free = FreeVars(f.sub(0));
      for (const auto& [v, t] : inner) {
        if (body_free.count(v) && t.ContainsVar(f.var()))
          throw CaptureError("substituting " + t.text() + " for " + v +
                             " would be captured by " + f.var());
      }
      Formula body = Substitute(f.sub(0), inner);
      return f.conn() == Conn::kForall ? Formula::Forall(f.var(), body)
                                       : Formula::Exists(f.var(), body);
    }
  }
  return f;
}

std::set<std::string> FreeVars(const Formula& f) {
  std::set<std::string> out;
  f.CollectFreeVars(out);
  return out;
}

void CheckFormula(const Formula& f, const Signature& sig) {
  if (f.is_atom()) {
    int ar = sig.PredicateArity(f.pred());
    if (ar < 0) throw ArityError("undeclared predicate " + f.pred());
    if (ar != static_cast<int>(f.terms().size()))
      throw ArityError("predicate " + f.pred() + " expects " +
                       std::to_string(ar) + " arguments in " + f.text());
    for (const Term& t : f.terms()) CheckTerm(t, sig);
    return;
  }
  CheckFormula(f.sub(0), sig);
  if (f.conn() == Conn::kAnd || f.conn() == Conn::kOr ||
      f.conn() == Conn::kImp)
    CheckFormula(f.sub(1), sig);
}

Literal::Literal(bool positive, Formula atom)
    : positive_(positive), atom_(std::move(atom)) {
  if (!atom_.is_atom()) throw ShapeError("literal over non-atom " + atom_.text());
  text_ = positive_ ? atom_.text() : "(not " + atom_.text() + ")";
}

Literal Literal::FromFormula(const Formula& f) {
  if (f.is_atom()) return Literal(true, f);
  if (f.conn() == Conn::kNot && f.sub(0).is_atom())
    return Literal(false, f.sub(0));
  throw ShapeError("not a literal: " + f.text());
}

Formula Literal::ToFormula() const {
  return positive_ ? atom_ : Formula::Not(atom_);
}

std::strong_ordering Literal::operator<=>(const Literal& o) const {
  if (auto c = text_ <=> o.text_; c != 0) return c;
  if (auto c = positive_ <=> o.positive_; c != 0) return c;
  return atom_ <=> o.atom_;
}

Literal Substitute(const Literal& l, const Substitution& s) {
  return Literal(l.positive(), Substitute(l.atom(), s));
}

std::set<std::string> FreeVars(const Literal& l) { return FreeVars(l.atom()); }

std::set<Literal> DualSet(const std::set<Literal>& s) {
  std::set<Literal> out;
  for (const Literal& l : s) out.insert(l.Dual());
  return out;
}

Clause MakeClause(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

ClauseSet MakeClauseSet(std::vector<Clause> clauses) {
  for (Clause& c : clauses) c = MakeClause(std::move(c));
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  return clauses;
}

std::string ClauseText(const Clause& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].text();
  }
  return s + "}";
}

std::string ClauseSetText(const ClauseSet& cs) {
  std::string s = "{";
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += ClauseText(cs[i]);
  }
  return s + "}";
}

size_t LiteralCount(const ClauseSet& cs) {
  size_t n = 0;
  for (const Clause& c : cs) n += c.size();
  return n;
}

Formula DnfOf(const ClauseSet& cs) {
  if (cs.empty()) throw ShapeError("DNF of the empty clause set");
  std::vector<Formula> disjuncts;
  for (const Clause& c : cs) {
    if (c.empty()) throw ShapeError("DNF of a set containing the empty clause");
    std::vector<Literal> lits(c.begin(), c.end());
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Formula> parts;
    for (const Literal& l : lits) parts.push_back(l.ToFormula());
    disjuncts.push_back(Formula::AndAll(parts));
  }
  std::sort(disjuncts.begin(), disjuncts.end());
  disjuncts.erase(std::unique(disjuncts.begin(), disjuncts.end()),
                  disjuncts.end());
  return Formula::OrAll(disjuncts);
}

}  // namespace pi2cut
