#ifndef PI2CUT_PROOF_H_
#define PI2CUT_PROOF_H_

#include <string>
#include <vector>

#include "pi2cut/derivation.h"

namespace pi2cut {

struct Proof {
  Signature sig;
  Derivation root;
};

struct CheckReport {
  bool ok = true;
  std::string path;  // dotted premise indices from the root, "" for the root
  std::string reason;
};

CheckReport CheckProof(const Proof& p);

struct Complexity {
  size_t q = 0;  // weak quantifier inferences
  size_t l = 0;  // inferences
  size_t s = 0;  // l plus the symbols of every sequent
};

Complexity Complexities(const Proof& p);
size_t CountRule(const Derivation& d, Rule r);

// Node at a dotted path such as "0.1"; throws Error when absent.
const Derivation& NodeAt(const Derivation& root, const std::string& path);
// Origin mask of an occurrence, with origins recomputed from the root.
uint8_t Ancestry(const Proof& p, const std::string& path, bool left,
                 const Formula& f);

std::string PrintProof(const Proof& p);
Proof ParseProof(const std::string& text);

}  // namespace pi2cut

#endif  // PI2CUT_PROOF_H_
