#ifndef PI2CUT_TAUTOLOGY_H_
#define PI2CUT_TAUTOLOGY_H_

#include <vector>

#include "pi2cut/sequent.h"

namespace pi2cut {

// Validity of a quantifier-free sequent. Distinct atoms are independent
// propositional variables; free variables behave as constants.
// Throws ShapeError on a quantifier.
bool IsTautology(const Sequent& s);
bool IsTautology(const std::vector<Formula>& ante,
                 const std::vector<Formula>& succ);

// Small CDCL solver over clauses of nonzero ints (DIMACS convention).
class SatSolver {
 public:
  int NewVar() { return ++num_vars_; }
  void AddClause(std::vector<int> lits);
  bool Solve();
  // After a successful Solve: value of a variable.
  bool Value(int var) const { return model_[var] > 0; }

 private:
  int num_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> model_;
  bool trivially_unsat_ = false;
};

// Batch validity; parallel when OpenMP is available.
std::vector<char> TautologyBatch(const std::vector<Sequent>& seqs,
                                 bool parallel = true);

}  // namespace pi2cut

#endif  // PI2CUT_TAUTOLOGY_H_
