#ifndef PI2CUT_GRAMMAR_H_
#define PI2CUT_GRAMMAR_H_

#include <set>
#include <string>
#include <vector>

#include "pi2cut/formula.h"

namespace pi2cut {

// Productions tau -> h_F(u) for u in f_tuples, tau -> h_G(v) for v in
// g_tuples, alpha -> r_j, and the derived beta_j -> t_i[alpha := r_j].
struct SchematicPi2Grammar {
  std::vector<TermTuple> f_tuples;  // over alpha
  std::vector<TermTuple> g_tuples;  // over b1..bm
  std::vector<Term> r_terms;        // r_1..r_m
  std::vector<Term> t_terms;        // t_1..t_p

  int m() const { return static_cast<int>(r_terms.size()); }
  int p() const { return static_cast<int>(t_terms.size()); }
  // The derived production beta_j -> t_i[alpha := r_j], 1-based.
  Term BetaProduction(int j, int i) const;
};

struct GrammarCheck {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

// `sig` may be null. Strict mode rejects duplicate r- or t-terms.
GrammarCheck Validate(const SchematicPi2Grammar& g,
                      const Signature* sig = nullptr, bool strict = false);

// alpha -> r_{alpha_choice}, beta_k -> t_{beta_choice[k-1]}, 1-based.
struct RigidAssignment {
  int alpha_choice = 1;
  std::vector<int> beta_choice;
};

// Values of beta_1..beta_m under an assignment.
std::vector<Term> BetaValues(const SchematicPi2Grammar& g,
                             const RigidAssignment& a);
std::set<Term> RigidLanguage(const SchematicPi2Grammar& g);
// Throws ArityError when a wrapped term has the wrong arity.
bool Covers(const SchematicPi2Grammar& g, const std::set<Term>& terms);

struct RewriteRule {
  Term lhs;
  Term rhs;
};

struct GStarSystem {
  std::vector<RewriteRule> upsilon1;  // tau productions, never applicable
  std::vector<RewriteRule> upsilon2;  // alpha -> x, r_j -> x
  std::vector<RewriteRule> upsilon3;  // t_i -> y, beta_j -> y
  std::vector<RewriteRule> All() const;
};

GStarSystem GStarOf(const SchematicPi2Grammar& g);

struct RewriteStep {
  std::vector<int> position;  // argument indices from the atom
  int rule = 0;               // index into GStarSystem::All()
};
using RewriteDerivation = std::vector<RewriteStep>;

// Symbols other than the variables x and y; every rewrite step lowers it.
int RewriteMeasure(const Literal& l);

// Every literal reachable by rewriting, before filtering.
std::set<Literal> RewriteClosure(const Literal& l, const GStarSystem& sys);
// Reachable literals whose variables lie within {x, y}.
std::set<Literal> ReachableLiterals(const Literal& l, const GStarSystem& sys);
// A derivation from `from` to `to`; empty optional-like flag via `found`.
RewriteDerivation FindRewriteDerivation(const Literal& from, const Literal& to,
                                        const GStarSystem& sys, bool& found);
// Replays a derivation; throws Error when a step does not match.
Literal ApplyRewriteDerivation(const Literal& from, const RewriteDerivation& d,
                               const GStarSystem& sys);
// All literals obtained by one rewrite step.
std::vector<std::pair<Literal, RewriteStep>> OneStep(const Literal& l,
                                                     const GStarSystem& sys);

}  // namespace pi2cut

#endif  // PI2CUT_GRAMMAR_H_
