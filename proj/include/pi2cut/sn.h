#ifndef PI2CUT_SN_H_
#define PI2CUT_SN_H_

#include "pi2cut/problem.h"

namespace pi2cut {

// forall x1 x2 x3. A_n and B |- exists y1..y_{n+2}. (not C_n) or D,
// with the grammar whose cut is forall x exists y. P(x, f y).
struct SnInstance {
  int n = 0;
  ProblemFile file;
};

// Throws Error for n < 2.
SnInstance GenerateSn(int n);

struct CutFreeCount {
  HerbrandInstanceSet instances;
  bool valid = false;
  size_t sharp = 0;          // sharp(F-tuples) + sharp(G-tuples)
  size_t f_sharp = 0;
  size_t g_sharp = 0;
  size_t closed_form = 0;    // n^n + 6 n^(n-1) + 5, for comparison only
  size_t n_pow_n = 0;
};

// Minimal instantiation of the cut-free proof. Throws Error for n < 2 or
// n > 6.
CutFreeCount MinimalCutFreeInstances(int n);

}  // namespace pi2cut

#endif  // PI2CUT_SN_H_
