#include <doctest.h>

#include "pi2cut/error.h"
#include "support.h"

using namespace pi2cut;
using namespace pi2cut::testing;

TEST_CASE("beta productions come from t-terms") {
  ProblemFile pf = Fixture("two_instances.p2");
  const Signature& sig = pf.problem.sig;
  const SchematicPi2Grammar& g = pf.grammar;
  CHECK(g.m() == 2);
  CHECK(g.p() == 2);
  CHECK(g.BetaProduction(1, 2) == T("(t2 r1)", &sig));
  CHECK(g.BetaProduction(2, 1) == T("(t1 (r2 b1))", &sig));
  CHECK(Validate(g, &sig).ok());
}

TEST_CASE("rigid language of the two-cut-instance example") {
  ProblemFile pf = Fixture("two_instances.p2");
  const Signature& sig = pf.problem.sig;
  std::set<Term> lang = RigidLanguage(pf.grammar);
  CHECK(lang.size() == 7);
  CHECK(lang == HerbrandTermSet(pf.problem, *pf.herbrand));
  CHECK(Covers(pf.grammar, lang));
  Term excluded = Term::App(
      kWrapG, {T("(t1 r1)", &sig), T("(t1 (r2 (t2 r1)))", &sig)});
  CHECK(!lang.count(excluded));
  CHECK(!Covers(pf.grammar, {excluded}));
  CHECK_THROWS_AS(Covers(pf.grammar, {Term::App(kWrapG, {T("r1", &sig)})}),
                  ArityError);
}

TEST_CASE("rigid assignments pick one production per nonterminal") {
  ProblemFile pf = Fixture("two_instances.p2");
  const Signature& sig = pf.problem.sig;
  std::vector<Term> v = BetaValues(pf.grammar, {1, {1, 2}});
  REQUIRE(v.size() == 2);
  CHECK(v[0] == T("(t1 r1)", &sig));
  CHECK(v[1] == T("(t2 (r2 (t1 r1)))", &sig));
}

TEST_CASE("validator flags variable conditions, cycles and arity") {
  Signature sig;
  sig.AddFunction("c", 0);
  sig.AddFunction("f", 1);
  Term alpha = Term::Var(kAlpha), b1 = Term::Var("b1"), b2 = Term::Var("b2");
  Term c = T("c", &sig);
  auto fb = [](const Term& t) { return Term::App("f", {t}); };

  SchematicPi2Grammar g;
  g.f_tuples = {{alpha}};
  g.g_tuples = {{b1}};
  g.r_terms = {c};
  g.t_terms = {fb(alpha)};
  CHECK(Validate(g, &sig).ok());

  SchematicPi2Grammar bad = g;
  bad.r_terms = {fb(b1)};
  GrammarCheck gc = Validate(bad, &sig);
  CHECK(!gc.ok());
  CHECK(gc.violations.front().find("V(r1)") != std::string::npos);

  bad = g;
  bad.r_terms = {c, fb(b2)};
  bad.g_tuples = {{b1, b2}};
  CHECK(!Validate(bad, &sig).ok());

  bad = g;
  bad.t_terms = {fb(b1)};
  CHECK(!Validate(bad, &sig).ok());

  bad = g;
  bad.f_tuples = {{b1}};
  CHECK(!Validate(bad, &sig).ok());

  bad = g;
  bad.t_terms = {Term::App("f", {alpha, alpha})};
  CHECK(!Validate(bad, &sig).ok());

  bad = g;
  bad.r_terms = {c, c};
  bad.g_tuples = {{b1, b2}};
  gc = Validate(bad, &sig);
  CHECK(gc.ok());
  CHECK(!gc.warnings.empty());
  CHECK(!Validate(bad, &sig, true).ok());
}

TEST_CASE("rewrite system of the grammar") {
  ProblemFile pf = Fixture("unsolvable.p2");
  const Signature& sig = pf.problem.sig;
  GStarSystem sys = GStarOf(pf.grammar);
  CHECK(sys.upsilon1.size() == 2);
  CHECK(sys.upsilon2.size() == 3);
  CHECK(sys.upsilon3.size() == 4);

  Literal l = L("(P alpha (t1 alpha))", &sig);
  std::set<Literal> reach = ReachableLiterals(l, sys);
  CHECK(reach == LiteralSet({"(P x y)", "(P x (t1 x))"}, &sig));
  bool found = false;
  RewriteDerivation d =
      FindRewriteDerivation(l, L("(P x y)", &sig), sys, found);
  REQUIRE(found);
  CHECK(ApplyRewriteDerivation(l, d, sys) == L("(P x y)", &sig));
  FindRewriteDerivation(l, L("(Q x y)", &sig), sys, found);
  CHECK(!found);

  Literal r = L("(not (P r1 b1))", &sig);
  CHECK(ReachableLiterals(r, sys) ==
        LiteralSet({"(not (P x y))", "(not (P r1 y))"}, &sig));
}

TEST_CASE("every rewrite step lowers the measure") {
  ProblemFile pf = Fixture("two_instances.p2");
  const Signature& sig = pf.problem.sig;
  GStarSystem sys = GStarOf(pf.grammar);
  for (const char* text : {"(P (r2 (t1 r1)) (t2 (r2 (t1 r1))))",
                           "(not (P (r2 b1) b2))", "(P alpha (t2 alpha))"}) {
    Literal l = L(text, &sig);
    for (const Literal& k : RewriteClosure(l, sys))
      for (const auto& [next, step] : OneStep(k, sys))
        CHECK(RewriteMeasure(next) < RewriteMeasure(k));
  }
  CHECK(ReachableLiterals(L("(not (P (r2 b1) b2))", &sig), sys)
            .count(L("(not (P x y))", &sig)));
  CHECK(!ReachableLiterals(L("(P (r2 (t1 r1)) (t1 r1))", &sig), sys)
             .count(L("(P x y)", &sig)));
}
