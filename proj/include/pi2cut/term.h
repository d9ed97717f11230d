#ifndef PI2CUT_TERM_H_
#define PI2CUT_TERM_H_

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace pi2cut {

// Names with a fixed meaning: eigenvariables, the cut variables and the
// grammar start symbol / wrappers.
bool IsReservedName(const std::string& name);
// alpha, b1, b2, ..., x, y.
bool IsReservedVariable(const std::string& name);
// The eigenvariable name for beta_j (1-based).
std::string BetaName(int j);
// 0 if `name` is not of the form b<j>.
int BetaIndex(const std::string& name);

inline const char kAlpha[] = "alpha";
inline const char kCutX[] = "x";
inline const char kCutY[] = "y";
inline const char kWrapF[] = "h_F";
inline const char kWrapG[] = "h_G";

class Signature {
 public:
  void AddFunction(const std::string& name, int arity);
  void AddPredicate(const std::string& name, int arity);
  bool HasFunction(const std::string& name) const;
  bool HasPredicate(const std::string& name) const;
  int FunctionArity(const std::string& name) const;   // -1 if unknown
  int PredicateArity(const std::string& name) const;  // -1 if unknown
  const std::map<std::string, int>& functions() const { return functions_; }
  const std::map<std::string, int>& predicates() const { return predicates_; }

 private:
  std::map<std::string, int> functions_;
  std::map<std::string, int> predicates_;
};

class Term {
 public:
  Term();  // the variable "_"; only useful as a placeholder
  static Term Var(const std::string& name);
  static Term App(const std::string& symbol, std::vector<Term> args = {});

  bool is_var() const;
  const std::string& name() const;
  const std::vector<Term>& args() const;
  const std::string& text() const;
  size_t hash() const;
  // Number of symbol occurrences (function symbols and variables).
  int size() const;

  bool operator==(const Term& o) const;
  std::strong_ordering operator<=>(const Term& o) const;

  bool Contains(const Term& sub) const;
  bool ContainsVar(const std::string& v) const;
  void CollectVars(std::set<std::string>& out) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  size_t operator()(const Term& t) const { return t.hash(); }
};

using TermTuple = std::vector<Term>;
using Substitution = std::map<std::string, Term>;

Term Substitute(const Term& t, const Substitution& s);
std::set<std::string> FreeVars(const Term& t);

// Throws ArityError when a symbol is undeclared or used with the wrong arity.
void CheckTerm(const Term& t, const Signature& sig);

std::string TupleText(const TermTuple& tuple);

}  // namespace pi2cut

#endif  // PI2CUT_TERM_H_
