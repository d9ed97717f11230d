#ifndef PI2CUT_SOLVER_H_
#define PI2CUT_SOLVER_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pi2cut/herbrand.h"

namespace pi2cut {

enum class Exec { kSerial, kParallel };

// S(X): F[U1], (X(alpha,t_1) or ...) -> (X(r_1,b1) and ...) |- G[U2].
struct Sehs {
  PrenexProblem problem;
  SchematicPi2Grammar grammar;
  Sequent reduced;  // the sequent with the X-implication deleted

  // S(E) for a concrete matrix over x, y.
  Sequent Instantiate(const Formula& matrix) const;
  // F[U1] |- E(alpha,t_1), ..., E(alpha,t_p), G[U2]
  Sequent SplitLeft(const Formula& matrix) const;
  // F[U1], E(r_1,b1), ..., E(r_m,bm) |- G[U2]
  Sequent SplitRight(const Formula& matrix) const;
};

// Throws CoverFailure, MixedAtomError, VariableConditionError.
Sehs BuildSehs(const PrenexProblem& pb, const SchematicPi2Grammar& g,
               const std::set<Term>* terms = nullptr);

struct PartitionedLeaf {
  Sequent leaf;
  std::set<Literal> a;  // contain alpha
  std::set<Literal> b;  // contain some beta
  std::set<Literal> n;  // neither
};

std::vector<PartitionedLeaf> PartitionedDnta(const Sehs& sehs);

// Literals K over {x, y} with K[x := alpha, y := t_i] = l.
std::set<Literal> AntiInstancesT(const Literal& l, const Term& t);
// Literals K over {x, y} with K[x := r_j, y := b_j] = l.
std::set<Literal> AntiInstancesR(const Literal& l, const Term& r, int j);

std::set<Literal> APrime(const PartitionedLeaf& leaf, const Sehs& sehs);
// Exists i such that every member instantiates under t_i into A(S).
// The empty set is not allowed.
bool InAllowed(const PartitionedLeaf& leaf, const std::set<Literal>& m,
               const Sehs& sehs);

struct Caps {
  size_t max_clauses = 3;
  size_t max_clause_size = 3;
  size_t max_candidates = 1000000;
};

// How T2' is read. kAllowedSet: the p literals chosen from one clause must
// all lie in a single allowed set. kPositional: some chosen literal, under
// the witness of its own position, lies in A(S).
enum class SolCondition { kPositional, kAllowedSet };

struct FilterResult {
  std::vector<ClauseSet> sets;
  size_t examined = 0;
  bool cap_exceeded = false;
};

// Subsets of `start` (non-empty, within caps) passing T1 or T2 or T3.
FilterResult ClFilter(const ClauseSet& start, const Sehs& sehs,
                      const Caps& caps = {}, Exec exec = Exec::kParallel);
FilterResult SolFilter(const std::vector<ClauseSet>& cl, const Sehs& sehs,
                       SolCondition cond = SolCondition::kPositional,
                       Exec exec = Exec::kParallel);
// Single-set predicates behind the filters.
bool ClAccepts(const ClauseSet& c, const Sehs& sehs,
               const std::vector<PartitionedLeaf>& leaves);
bool SolAccepts(const ClauseSet& c, const Sehs& sehs,
                const std::vector<PartitionedLeaf>& leaves, SolCondition cond);

std::set<Literal> NaivePool(const Sehs& sehs);

struct GStarPool {
  std::set<Literal> pool;
  bool unifiable = true;
};
GStarPool GStarPoolOf(const Sehs& sehs);

// Clauses from `pool` of size 1..max_size, ordered by size then literals.
ClauseSet ClausesOf(const std::set<Literal>& pool, size_t max_size);
// Throws ParseError.
ClauseSet ParseStartingSet(const std::string& text, const Signature& sig);
void ValidateStartingSet(const ClauseSet& start);

bool VerifySolution(const Sehs& sehs, const ClauseSet& c);
// Throws Error when `c` is not a solution.
bool IsBalanced(const Sehs& sehs, const ClauseSet& c);

enum class PoolKind { kGStar, kNaive, kFile };

struct SolveOptions {
  PoolKind pool = PoolKind::kGStar;
  ClauseSet file_start;  // for kFile
  Caps caps;
  bool all = false;
  SolCondition condition = SolCondition::kPositional;
  Exec exec = Exec::kParallel;
};

enum class SolveStatus { kSolved, kNoSolution, kCapExceeded };

struct SolutionReport {
  SolveStatus status = SolveStatus::kNoSolution;
  std::vector<ClauseSet> solutions;  // first is the chosen one
  std::optional<Formula> cut_formula;
  bool verified = false;
  bool balanced = false;
  bool proof_ok = false;
  std::string check_reason;
  Complexity proof_complexity;
  size_t eh_complexity = 0;
  size_t eh_shared_complexity = 0;
  size_t leaves = 0;
  size_t pool_size = 0;
  bool unifiable = true;
  size_t start_clauses = 0;
  size_t candidates = 0;
  bool cap_hit = false;
};

struct SolveOutcome {
  SolutionReport report;
  std::optional<Proof> proof;
};

SolveOutcome IntroduceCut(const PrenexProblem& pb,
                          const SchematicPi2Grammar& g,
                          const SolveOptions& options = {});

const char* StatusName(SolveStatus s);

}  // namespace pi2cut

#endif  // PI2CUT_SOLVER_H_
