#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "pi2cut/grammar.h"
#include "pi2cut/herbrand.h"
#include "pi2cut/sn.h"
#include "property.h"

using namespace pi2cut;
using namespace pi2cut::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failed condition; later ones only add to the count.
struct Conditions {
  Outcome out;
  int failed = 0;
  void Require(bool cond, const std::string& what) {
    if (cond) return;
    if (failed++ == 0) out.detail = what;
    out.ok = false;
  }
};

std::string Tally(const char* name, const PropertyTally& t) {
  std::ostringstream os;
  os << name << " instances=" << t.instances << " checked=" << t.checked
     << " failures=" << t.failures;
  if (!t.ok()) os << " first=" << t.first_failure;
  return os.str();
}

SolveOptions Serial(PoolKind pool) {
  SolveOptions o;
  o.pool = pool;
  o.exec = Exec::kSerial;
  return o;
}

Outcome TwoInstances() {
  Conditions c;
  ProblemFile pf = Fixture("two_instances.p2");
  const Signature& sig = pf.problem.sig;
  ExtendedHerbrandSequent eh{pf.problem, pf.grammar, F("(P x y)", &sig)};
  EhResult er = EhBuild(eh);
  HerbrandResult hr = HerbrandCheck(pf.problem, *pf.herbrand);
  c.Require(er.tautology, "EH is not a tautology");
  c.Require(hr.valid, "H is not valid");
  c.Require(hr.complexity == 9, "|H| = " + std::to_string(hr.complexity));
  c.Require(er.complexity == 7, "|EH| = " + std::to_string(er.complexity));
  std::set<Term> lang = RigidLanguage(pf.grammar);
  c.Require(lang == HerbrandTermSet(pf.problem, *pf.herbrand),
            "rigid language differs from the herbrand terms");
  c.Require(lang.size() == 7, "language size " + std::to_string(lang.size()));
  Term excluded = Term::App(
      kWrapG, {T("(t1 r1)", &sig), T("(t1 (r2 (t2 r1)))", &sig)});
  c.Require(!lang.count(excluded), "non-rigid term in the language");
  if (c.out.ok)
    c.out.detail = "|H|=9 |EH|=7 language=7 terms, non-rigid term excluded";
  return c.out;
}

Outcome Unsolvable() {
  Conditions c;
  for (const char* name : {"unsolvable.p2", "unsolvable_dup.p2"}) {
    ProblemFile pf = Fixture(name);
    for (PoolKind pool : {PoolKind::kGStar, PoolKind::kNaive}) {
      SolveOutcome r = IntroduceCut(pf.problem, pf.grammar, SolveOptions{.pool = pool});
      c.Require(r.report.status == SolveStatus::kNoSolution,
                std::string(name) + " " +
                    (pool == PoolKind::kGStar ? "gstar" : "naive") + ": " +
                    StatusName(r.report.status));
    }
  }
  if (c.out.ok) c.out.detail = "both fixtures, both pools: no solution";
  return c.out;
}

Outcome SolExample() {
  Conditions c;
  ProblemFile pf = Fixture("solex.p2");
  Sehs s = BuildSehs(pf.problem, pf.grammar);
  auto start = [&](const char* name) {
    return ParseStartingSet(ReadFile(FixturePath(name)), pf.problem.sig);
  };
  ClauseSet pq = start("solex_pq.start");
  FilterResult cl = ClFilter(pq, s);
  c.Require(cl.sets.size() == 1 && cl.sets[0] == pq, "Cl({PQ}) != {{PQ}}");
  c.Require(SolFilter(cl.sets, s).sets.empty(), "Sol({PQ}) not empty");
  ClauseSet p = start("solex_p.start");
  FilterResult sol = SolFilter(ClFilter(p, s).sets, s);
  c.Require(sol.sets.size() == 1 && sol.sets[0] == p, "Sol({P}) != {{P}}");
  c.Require(VerifySolution(s, p), "{{P}} does not verify");
  if (c.out.ok) c.out.detail = "Cl={{P,Q}} Sol=empty; Sol={{P}} verified";
  return c.out;
}

Outcome SnBenchmark() {
  Conditions c;
  std::ostringstream q;
  for (int n = 2; n <= 5; ++n) {
    std::string at = "n=" + std::to_string(n) + ": ";
    SnInstance sn = GenerateSn(n);
    const Signature& sig = sn.file.problem.sig;
    Sehs s = BuildSehs(sn.file.problem, sn.file.grammar);
    GStarPool g = GStarPoolOf(s);
    c.Require(g.pool == LiteralSet({"(P x (f y))"}, &sig), at + "pool differs");
    FilterResult sol = SolFilter(ClFilter(ClausesOf(g.pool, 3), s).sets, s);
    c.Require(sol.sets.size() == 1 &&
                  ClauseSetText(sol.sets[0]) == "{{(P x (f y))}}",
              at + "Sol differs");
    SolveOutcome r = IntroduceCut(sn.file.problem, sn.file.grammar);
    c.Require(r.report.status == SolveStatus::kSolved, at + "not solved");
    if (!r.proof) continue;
    CheckReport rep = CheckProof(*r.proof);
    c.Require(rep.ok, at + "proof check: " + rep.reason);
    size_t qn = Complexities(*r.proof).q;
    c.Require(qn == static_cast<size_t>(4 * n + 3), at + "q=" + std::to_string(qn));
    q << " q" << n << "=" << qn;
  }
  if (c.out.ok) c.out.detail = "pool {P(x,fy)}, proofs check," + q.str();
  return c.out;
}

Outcome CutFreeBound() {
  Conditions c;
  std::ostringstream d;
  for (int n : {2, 3}) {
    CutFreeCount cf = MinimalCutFreeInstances(n);
    std::string at = "n=" + std::to_string(n) + ": ";
    c.Require(cf.valid, at + "midsequent not a tautology");
    c.Require(cf.sharp > cf.n_pow_n, at + "count " + std::to_string(cf.sharp) +
                                         " <= " + std::to_string(cf.n_pow_n));
    d << " n=" << n << " count=" << cf.sharp << ">" << cf.n_pow_n;
  }
  if (c.out.ok) c.out.detail = "midsequents valid," + d.str();
  return c.out;
}

PropertyTally g_sound, g_complete;

void RunFilterSuite() {
  std::mt19937 rng(2024);
  SmallCase c;
  for (int i = 0; i < 120 && NextSmallCase(rng, c); ++i)
    CheckFilters(c, g_sound, g_complete);
}

Outcome Soundness() {
  RunFilterSuite();
  return {g_sound.ok() && g_sound.instances >= 100, Tally("sol", g_sound)};
}

Outcome Completeness() {
  return {g_complete.ok() && g_complete.instances >= 100,
          Tally("subsets", g_complete)};
}

std::vector<ProblemFile> Bundled() {
  std::vector<ProblemFile> out;
  for (const char* name :
       {"two_instances.p2", "solex.p2", "unsolvable_dup.p2", "unsolvable.p2", "mixed.p2"})
    out.push_back(Fixture(name));
  return out;
}

Outcome BalancedImpliesGStar() {
  PropertyTally t;
  int capped = 0;
  for (const ProblemFile& pf : Bundled())
    if (!CheckBalancedImpliesGStar(pf, t)) ++capped;
  // The S_n naive pools exceed the candidate cap with three-literal clauses.
  for (int n = 2; n <= 3; ++n)
    if (!CheckBalancedImpliesGStar(GenerateSn(n).file, t, {3, 2}))
      ++capped;
  std::mt19937 rng(99);
  SmallCase c;
  for (int i = 0; i < 100 && NextSmallCase(rng, c); ++i)
    if (!CheckBalancedImpliesGStar(c.file, t)) ++capped;
  return {t.ok() && t.checked > 0,
          Tally("balanced", t) + " capped=" + std::to_string(capped)};
}

Outcome Oracle() {
  PropertyTally t;
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) CheckOracle(RandomPropositionalSequent(rng, 8), t);
  return {t.ok() && t.instances >= 1000, Tally("sequents", t)};
}

Outcome Kernels() {
  PropertyTally t;
  for (const ProblemFile& pf : Bundled()) {
    SolveOutcome r = IntroduceCut(pf.problem, pf.grammar, Serial(PoolKind::kGStar));
    CheckKernels(pf, r.report.solutions.empty() ? nullptr : &r.report.solutions[0], t);
  }
  for (int n = 2; n <= 3; ++n) {
    ProblemFile pf = GenerateSn(n).file;
    SolveOutcome r = IntroduceCut(pf.problem, pf.grammar, Serial(PoolKind::kGStar));
    pf.herbrand = MinimalCutFreeInstances(n).instances;
    CheckKernels(pf, r.report.solutions.empty() ? nullptr : &r.report.solutions[0], t);
  }
  std::mt19937 rng(31);
  SmallCase c;
  for (int i = 0; i < 100 && NextSmallCase(rng, c); ++i) {
    ProblemFile pf = c.file;
    pf.herbrand = LanguageInstances(pf);
    SolveOutcome r = IntroduceCut(pf.problem, pf.grammar, Serial(PoolKind::kNaive));
    CheckKernels(pf, r.report.solutions.empty() ? nullptr : &r.report.solutions[0], t);
  }
  return {t.ok() && t.checked > 0, Tally("proofs", t)};
}

Outcome PositionalVersusAllowed() {
  ProblemFile pf = Fixture("mixed.p2");
  Sehs s = BuildSehs(pf.problem, pf.grammar);
  ClauseSet start = ParseStartingSet(ReadFile(FixturePath("mixed.start")), pf.problem.sig);
  bool verified = VerifySolution(s, start);
  bool cl = ClAccepts(start, s, PartitionedDnta(s));
  bool pos = SolFilter({start}, s, SolCondition::kPositional).sets.size() == 1;
  bool allowed = SolFilter({start}, s, SolCondition::kAllowedSet).sets.size() == 1;
  std::ostringstream os;
  os << "mixed: verified=" << verified << " cl=" << cl
     << " positional=" << pos << " allowed-set=" << allowed;
  return {verified && cl && pos && !allowed, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double limit_s;  // 0 for no limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {"AC1", "two-instance example", 1, TwoInstances},
      {"AC2", "unsolvable instances", 5, Unsolvable},
      {"AC3", "allowed-clause example", 1, SolExample},
      {"AC4", "S_n benchmark n=2..5", 30, SnBenchmark},
      {"AC5", "cut-free lower bound n=2,3", 60, CutFreeBound},
      {"AC6", "filter soundness", 0, Soundness},
      {"AC7", "filter partial completeness", 0, Completeness},
      {"AC8", "balanced implies rewrite-pool solution", 0, BalancedImpliesGStar},
      {"AC9", "oracle agreement", 0, Oracle},
      {"AC10", "proof kernels pass the checker", 0, Kernels},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    if (!o.ok) ++failed;
    std::printf("%-5s %s  %-40s %7.3fs  %s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.name, s, o.detail.c_str());
  }
  Outcome info = PositionalVersusAllowed();
  std::printf("%-5s %s  %-40s %8s  %s\n", "INFO", info.ok ? "DIFF" : "SAME",
              "positional vs allowed-set reading", "", info.detail.c_str());
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed,
              all.size());
  return failed == 0 ? 0 : 1;
}
