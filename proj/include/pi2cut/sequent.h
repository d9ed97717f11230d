#ifndef PI2CUT_SEQUENT_H_
#define PI2CUT_SEQUENT_H_

#include <string>
#include <vector>

#include "pi2cut/formula.h"

namespace pi2cut {

// Both sides are kept sorted and duplicate-free.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> ante, std::vector<Formula> succ);

  const std::vector<Formula>& ante() const { return ante_; }
  const std::vector<Formula>& succ() const { return succ_; }
  bool InAnte(const Formula& f) const;
  bool InSucc(const Formula& f) const;
  Sequent AddAnte(const Formula& f) const;
  Sequent AddSucc(const Formula& f) const;
  Sequent RemoveAnte(const Formula& f) const;
  Sequent RemoveSucc(const Formula& f) const;
  bool quantifier_free() const;
  // Some atom occurs on both sides.
  bool IsAxiom() const;
  bool Atomic() const;
  std::string text() const;  // "A, B |- C"
  // Formula symbols plus commas and the turnstile.
  int symbols() const;

  bool operator==(const Sequent& o) const = default;
  auto operator<=>(const Sequent& o) const = default;

 private:
  std::vector<Formula> ante_;
  std::vector<Formula> succ_;
};

// Succedent atoms negated first, then antecedent atoms.
std::vector<Literal> LiteralNormalForm(const Sequent& s);

// Tuples are ordered by printed form; each new tuple adds the number of
// positions in which it differs from every earlier one.
size_t SharpCount(std::vector<TermTuple> tuples);
// Over all enumeration orders; at most 8 distinct tuples.
std::pair<size_t, size_t> SharpCountRange(std::vector<TermTuple> tuples);

}  // namespace pi2cut

#endif  // PI2CUT_SEQUENT_H_
