#ifndef PI2CUT_HERBRAND_H_
#define PI2CUT_HERBRAND_H_

#include <set>
#include <string>
#include <vector>

#include "pi2cut/grammar.h"
#include "pi2cut/proof.h"

namespace pi2cut {

// The end-sequent (forall xs. F) |- (exists ys. G).
struct PrenexProblem {
  Signature sig;
  std::vector<std::string> xs;
  std::vector<std::string> ys;
  Formula f;
  Formula g;

  Formula EndAntecedent() const;
  Formula EndSuccedent() const;
  Sequent EndSequent() const;
  Formula FInstance(const TermTuple& u) const;
  Formula GInstance(const TermTuple& v) const;
};

// Throws VariableConditionError / ArityError / ShapeError.
void ValidateProblem(const PrenexProblem& pb);

struct HerbrandInstanceSet {
  std::vector<TermTuple> f_tuples;
  std::vector<TermTuple> g_tuples;
};

Sequent Midsequent(const PrenexProblem& pb, const HerbrandInstanceSet& inst);

struct HerbrandResult {
  bool valid = false;
  size_t complexity = 0;
};

HerbrandResult HerbrandCheck(const PrenexProblem& pb,
                             const HerbrandInstanceSet& inst);
std::set<Term> HerbrandTermSet(const PrenexProblem& pb,
                               const HerbrandInstanceSet& inst);

// f_tuples of the grammar play U1, g_tuples play U2.
struct ExtendedHerbrandSequent {
  PrenexProblem problem;
  SchematicPi2Grammar grammar;
  Formula cut_matrix;  // over x, y

  Formula CutFormula() const;  // forall x exists y. A
  Formula Disjunction() const;  // A[alpha, t_1] or ... or A[alpha, t_p]
  Formula Conjunction() const;  // A[r_1, b1] and ... and A[r_m, bm]
};

void ValidateEh(const ExtendedHerbrandSequent& eh);

struct EhResult {
  Sequent sequent;
  bool tautology = false;
  size_t complexity = 0;        // k*N + l*M + p + m
  size_t shared_complexity = 0;  // sharp(U1) + sharp(U2) + p + m
};

EhResult EhBuild(const ExtendedHerbrandSequent& eh);

// Number of weak inferences a prefix-shared instantiation of `tuples` needs.
size_t TrieSize(const std::vector<TermTuple>& tuples);

// One cut on forall x exists y. A; checked before returning.
Proof ProofFromEh(const ExtendedHerbrandSequent& eh);
// Cut-free; all quantifier inferences below the midsequent.
Proof ProofFromHerbrand(const PrenexProblem& pb,
                        const HerbrandInstanceSet& inst);

}  // namespace pi2cut

#endif  // PI2CUT_HERBRAND_H_
