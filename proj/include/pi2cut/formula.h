#ifndef PI2CUT_FORMULA_H_
#define PI2CUT_FORMULA_H_

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pi2cut/term.h"

namespace pi2cut {

enum class Conn { kAtom, kNot, kAnd, kOr, kImp, kForall, kExists };

class Formula {
 public:
  Formula();  // the 0-ary atom "_"
  static Formula Atom(const std::string& pred, std::vector<Term> args = {});
  static Formula Not(Formula a);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Imp(Formula a, Formula b);
  static Formula Forall(const std::string& var, Formula body);
  static Formula Exists(const std::string& var, Formula body);
  // Right-nested; `parts` must be non-empty.
  static Formula AndAll(const std::vector<Formula>& parts);
  static Formula OrAll(const std::vector<Formula>& parts);

  Conn conn() const;
  bool is_atom() const { return conn() == Conn::kAtom; }
  bool is_quantifier() const {
    return conn() == Conn::kForall || conn() == Conn::kExists;
  }
  const std::string& pred() const;       // atoms
  const std::vector<Term>& terms() const;  // atoms
  const Formula& sub(int i) const;       // 0 or 1
  const std::string& var() const;        // quantifiers
  const std::string& text() const;
  size_t hash() const;
  bool quantifier_free() const;
  // Symbol occurrences: predicate, function symbols, variables, connectives,
  // quantifiers (the bound variable counts as a symbol).
  int symbols() const;

  bool operator==(const Formula& o) const;
  std::strong_ordering operator<=>(const Formula& o) const;

  void CollectFreeVars(std::set<std::string>& out) const;
  void CollectAtoms(std::set<Formula>& out) const;
  bool ContainsVar(const std::string& v) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula Make(Conn c, std::vector<Formula> subs, std::string var);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  size_t operator()(const Formula& f) const { return f.hash(); }
};

// Simultaneous, capture-free. Throws CaptureError if a variable of the range
// would be bound by a quantifier it is substituted under.
Formula Substitute(const Formula& f, const Substitution& s);
std::set<std::string> FreeVars(const Formula& f);
void CheckFormula(const Formula& f, const Signature& sig);

class Literal {
 public:
  Literal() = default;
  Literal(bool positive, Formula atom);
  static Literal FromFormula(const Formula& f);  // atom or negated atom

  bool positive() const { return positive_; }
  const Formula& atom() const { return atom_; }
  const std::string& text() const { return text_; }
  Formula ToFormula() const;
  Literal Dual() const { return Literal(!positive_, atom_); }

  bool operator==(const Literal& o) const {
    return positive_ == o.positive_ && atom_ == o.atom_;
  }
  std::strong_ordering operator<=>(const Literal& o) const;

 private:
  bool positive_ = true;
  Formula atom_;
  std::string text_;
};

Literal Substitute(const Literal& l, const Substitution& s);
std::set<std::string> FreeVars(const Literal& l);
std::set<Literal> DualSet(const std::set<Literal>& s);

using Clause = std::vector<Literal>;     // sorted, duplicate-free
using ClauseSet = std::vector<Clause>;   // sorted, duplicate-free

Clause MakeClause(std::vector<Literal> lits);
ClauseSet MakeClauseSet(std::vector<Clause> clauses);
std::string ClauseText(const Clause& c);
std::string ClauseSetText(const ClauseSet& cs);
// Total literal count.
size_t LiteralCount(const ClauseSet& cs);

// Disjunction of conjunctions in canonical order. Throws ShapeError on an
// empty set or an empty clause.
Formula DnfOf(const ClauseSet& cs);

}  // namespace pi2cut

#endif  // PI2CUT_FORMULA_H_
