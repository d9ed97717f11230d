#include <doctest.h>

#include "property.h"

using namespace pi2cut;
using namespace pi2cut::testing;

TEST_CASE("filters are sound and complete for verified solutions") {
  std::mt19937 rng(2024);
  PropertyTally sound, complete;
  SmallCase c;
  for (int i = 0; i < 40 && NextSmallCase(rng, c); ++i)
    CheckFilters(c, sound, complete);
  CHECK(sound.instances == 40);
  CHECK_MESSAGE(sound.ok(), sound.first_failure);
  CHECK_MESSAGE(complete.ok(), complete.first_failure);
}

TEST_CASE("balanced solutions imply a rewrite-pool solution") {
  std::mt19937 rng(99);
  PropertyTally tally;
  SmallCase c;
  for (int i = 0; i < 30 && NextSmallCase(rng, c); ++i)
    CheckBalancedImpliesGStar(c.file, tally);
  CHECK(tally.instances > 0);
  CHECK_MESSAGE(tally.ok(), tally.first_failure);
}

TEST_CASE("allowed sets are closed under non-empty subsets") {
  std::mt19937 rng(5);
  SmallCase c;
  for (int i = 0; i < 30 && NextSmallCase(rng, c); ++i)
    for (const PartitionedLeaf& leaf : c.leaves) {
      std::set<Literal> prime = APrime(leaf, c.sehs);
      std::vector<Literal> lits(prime.begin(), prime.end());
      if (lits.size() > 10) lits.resize(10);
      for (unsigned mask = 1; mask < (1u << lits.size()); ++mask) {
        std::set<Literal> m;
        for (size_t k = 0; k < lits.size(); ++k)
          if (mask >> k & 1) m.insert(lits[k]);
        if (!InAllowed(leaf, m, c.sehs)) continue;
        for (const Literal& drop : m) {
          if (m.size() == 1) break;
          std::set<Literal> j = m;
          j.erase(drop);
          CHECK(InAllowed(leaf, j, c.sehs));
        }
      }
    }
}

TEST_CASE("proof constructions pass the checker on random inputs") {
  std::mt19937 rng(31);
  PropertyTally tally;
  SmallCase c;
  for (int i = 0; i < 30 && NextSmallCase(rng, c); ++i) {
    ProblemFile pf = c.file;
    pf.herbrand = LanguageInstances(pf);
    SolveOptions opt;
    opt.exec = Exec::kSerial;
    opt.pool = PoolKind::kNaive;
    SolveOutcome r = IntroduceCut(pf.problem, pf.grammar, opt);
    CheckKernels(pf, r.report.solutions.empty() ? nullptr : &r.report.solutions[0],
                 tally);
  }
  CHECK(tally.checked > 0);
  CHECK_MESSAGE(tally.ok(), tally.first_failure);
}

TEST_CASE("oracle agreement on random sequents") {
  std::mt19937 rng(17);
  PropertyTally tally;
  for (int i = 0; i < 200; ++i) CheckOracle(RandomPropositionalSequent(rng, 8), tally);
  CHECK_MESSAGE(tally.ok(), tally.first_failure);
}
