#ifndef PI2CUT_SEXPR_H_
#define PI2CUT_SEXPR_H_

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pi2cut/formula.h"

namespace pi2cut {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;

  bool IsAtom(const std::string& s) const { return !is_list && atom == s; }
  // A list whose first item is the atom `head`.
  bool HasHead(const std::string& head) const {
    return is_list && !items.empty() && items[0].IsAtom(head);
  }
};

// `;` starts a comment running to end of line.
std::vector<SExpr> ReadSExprs(const std::string& text);
SExpr ReadSingleSExpr(const std::string& text);

[[noreturn]] void FailAt(const SExpr& e, const std::string& msg);

// Decides which bare identifiers are variables. Everything else must be a
// declared constant.
struct ParseContext {
  const Signature* sig = nullptr;
  std::set<std::string> variables;
  bool reserved_are_variables = true;
  // Undeclared bare identifiers are read as variables instead of rejected.
  bool unknown_are_variables = false;

  bool IsVariable(const std::string& name) const;
};

Term ParseTerm(const SExpr& e, const ParseContext& ctx);
Formula ParseFormula(const SExpr& e, const ParseContext& ctx);
Literal ParseLiteral(const SExpr& e, const ParseContext& ctx);

}  // namespace pi2cut

#endif  // PI2CUT_SEXPR_H_
