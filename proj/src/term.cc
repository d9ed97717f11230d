#include "pi2cut/term.h"

#include <cctype>
#include <functional>

#include "pi2cut/error.h"

namespace pi2cut {

bool IsReservedVariable(const std::string& name) {
  return name == kAlpha || name == kCutX || name == kCutY ||
         BetaIndex(name) > 0;
}

bool IsReservedName(const std::string& name) {
  static const std::set<std::string> kWords = {
      "tau", kWrapF, kWrapG, "not", "and", "or", "imp", "forall", "exists"};
  return IsReservedVariable(name) || kWords.count(name) > 0;
}

std::string BetaName(int j) { return "b" + std::to_string(j); }

int BetaIndex(const std::string& name) {
  if (name.size() < 2 || name[0] != 'b' || name[1] == '0') return 0;
  int v = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
    v = v * 10 + (name[i] - '0');
    if (v > 100000) return 0;
  }
  return v;
}

void Signature::AddFunction(const std::string& name, int arity) {
  if (IsReservedName(name))
    throw ArityError("reserved name used as function symbol: " + name);
  if (arity < 0) throw ArityError("negative arity for " + name);
  if (predicates_.count(name) || functions_.count(name))
    throw ArityError("symbol declared twice: " + name);
  functions_[name] = arity;
}

void Signature::AddPredicate(const std::string& name, int arity) {
  if (IsReservedName(name))
    throw ArityError("reserved name used as predicate symbol: " + name);
  if (arity < 0) throw ArityError("negative arity for " + name);
  if (predicates_.count(name) || functions_.count(name))
    throw ArityError("symbol declared twice: " + name);
  predicates_[name] = arity;
}

bool Signature::HasFunction(const std::string& name) const {
  return functions_.count(name) > 0;
}
bool Signature::HasPredicate(const std::string& name) const {
  return predicates_.count(name) > 0;
}
int Signature::FunctionArity(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? -1 : it->second;
}
int Signature::PredicateArity(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? -1 : it->second;
}

struct Term::Node {
  bool var;
  std::string name;
  std::vector<Term> args;
  std::string text;
  size_t hash;
  int size;
};

Term::Term() : Term(Var("_")) {}

Term Term::Var(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->var = true;
  n->name = name;
  n->text = name;
  n->hash = std::hash<std::string>()(n->text) ^ 0x9e3779b97f4a7c15ULL;
  n->size = 1;
  return Term(std::move(n));
}

Term Term::App(const std::string& symbol, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->var = false;
  n->name = symbol;
  n->size = 1;
  if (args.empty()) {
    n->text = symbol;
  } else {
    n->text = "(" + symbol;
    for (const Term& a : args) {
      n->text += ' ';
      n->text += a.text();
      n->size += a.size();
    }
    n->text += ')';
  }
  n->args = std::move(args);
  n->hash = std::hash<std::string>()(n->text);
  return Term(std::move(n));
}

bool Term::is_var() const { return node_->var; }
const std::string& Term::name() const { return node_->name; }
const std::vector<Term>& Term::args() const { return node_->args; }
const std::string& Term::text() const { return node_->text; }
size_t Term::hash() const { return node_->hash; }
int Term::size() const { return node_->size; }

bool Term::operator==(const Term& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Term::operator<=>(const Term& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (auto c = text() <=> o.text(); c != 0) return c;
  // Same text: a variable and a constant may print alike.
  if (is_var() != o.is_var())
    return is_var() ? std::strong_ordering::less
                    : std::strong_ordering::greater;
  for (size_t i = 0; i < args().size(); ++i)
    if (auto c = args()[i] <=> o.args()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool Term::Contains(const Term& sub) const {
  if (size() < sub.size()) return false;
  if (*this == sub) return true;
  for (const Term& a : args())
    if (a.Contains(sub)) return true;
  return false;
}

bool Term::ContainsVar(const std::string& v) const {
  if (is_var()) return name() == v;
  for (const Term& a : args())
    if (a.ContainsVar(v)) return true;
  return false;
}

void Term::CollectVars(std::set<std::string>& out) const {
  if (is_var()) {
    out.insert(name());
    return;
  }
  for (const Term& a : args()) a.CollectVars(out);
}

Term Substitute(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  if (t.is_var()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(Substitute(a, s));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::App(t.name(), std::move(args)) : t;
}

std::set<std::string> FreeVars(const Term& t) {
  std::set<std::string> out;
  t.CollectVars(out);
  return out;
}

void CheckTerm(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  int ar = sig.FunctionArity(t.name());
  if (ar < 0) throw ArityError("undeclared function symbol " + t.name());
  if (ar != static_cast<int>(t.args().size()))
    throw ArityError("function " + t.name() + " expects " +
                     std::to_string(ar) + " arguments in " + t.text());
  for (const Term& a : t.args()) CheckTerm(a, sig);
}

std::string TupleText(const TermTuple& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ' ';
    s += tuple[i].text();
  }
  return s + ")";
}

}  // namespace pi2cut
