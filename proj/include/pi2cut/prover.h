#ifndef PI2CUT_PROVER_H_
#define PI2CUT_PROVER_H_

#include "pi2cut/derivation.h"

namespace pi2cut {

// A closed propositional derivation of `s`. Quantified formulas are carried
// along untouched. Formulas not needed for validity are never decomposed.
// Throws NotTautologyError when the quantifier-free part is not valid.
Derivation ProvePropositional(const Sequent& s);

}  // namespace pi2cut

#endif  // PI2CUT_PROVER_H_
