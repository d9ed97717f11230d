#ifndef PI2CUT_DERIVATION_H_
#define PI2CUT_DERIVATION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pi2cut/sequent.h"

namespace pi2cut {

enum class Rule {
  kAxiom,
  kNonTautLeaf,
  kAndL,
  kAndR,
  kOrL,
  kOrR,
  kImpL,
  kImpR,
  kNegL,
  kNegR,
  kForallL,
  kForallR,
  kExistsL,
  kExistsR,
  kCut,
};

const char* RuleName(Rule r);
std::optional<Rule> RuleFromName(const std::string& name);
bool IsWeak(Rule r);    // ForallL, ExistsR
bool IsStrong(Rule r);  // ForallR, ExistsL
// True when the principal formula sits in the antecedent.
bool PrincipalLeft(Rule r);

// Origin of a formula occurrence: descends from the end-sequent, from a cut
// formula, or (after a set merge) both.
enum Origin : uint8_t { kOriginEnd = 1, kOriginCut = 2 };

struct Derivation {
  Sequent sequent;
  Rule rule = Rule::kAxiom;
  std::optional<Formula> principal;  // the cut formula for kCut
  std::optional<Term> term;          // witness or eigenvariable
  std::vector<Derivation> premises;
  // Parallel to sequent.ante()/succ(); empty when not annotated.
  std::vector<uint8_t> ante_origin;
  std::vector<uint8_t> succ_origin;
};

// The premises the rule yields on `concl`. Throws ShapeError when the rule
// does not apply (principal missing, wrong connective, missing term).
std::vector<Sequent> RulePremises(const Sequent& concl, Rule rule,
                                  const std::optional<Formula>& principal,
                                  const std::optional<Term>& term);

// Applies the rule and attaches premise nodes labelled kNonTautLeaf.
Derivation Apply(const Sequent& concl, Rule rule, const Formula& principal,
                 const std::optional<Term>& term = std::nullopt);

// Chooses which compound formula to decompose; returns false when none.
using DecompositionPolicy =
    std::function<bool(const Sequent&, Formula& chosen, bool& left)>;
DecompositionPolicy CanonicalPolicy();

// Exhaustive invertible decomposition of a quantifier-free sequent; leaves
// are atomic and labelled kAxiom or kNonTautLeaf.
Derivation MaximalDerivation(const Sequent& s);
Derivation MaximalDerivation(const Sequent& s, const DecompositionPolicy& pol);
std::vector<Sequent> NonTautologicalLeaves(const Derivation& d);
// Same leaf set without materializing the tree; subtrees whose root is
// already an axiom are skipped.
std::vector<Sequent> NonTautologicalLeavesOf(const Sequent& s);

size_t CountNodes(const Derivation& d);

// Root occurrences get `root_origin` unless given; premises inherit.
void AnnotateOrigins(Derivation& d);
void PropagateOrigins(Derivation& d);

}  // namespace pi2cut

#endif  // PI2CUT_DERIVATION_H_
