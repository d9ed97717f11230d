#include <doctest.h>

#include "pi2cut/error.h"
#include "pi2cut/tautology.h"
#include "pi2cut/derivation.h"
#include "support.h"

using namespace pi2cut;
using namespace pi2cut::testing;

namespace {

Signature PSig() {
  Signature sig;
  sig.AddFunction("c", 0);
  sig.AddFunction("f", 1);
  sig.AddFunction("g", 2);
  sig.AddPredicate("P", 2);
  sig.AddPredicate("Q", 1);
  return sig;
}

}  // namespace

TEST_CASE("terms print, compare and substitute") {
  Signature sig = PSig();
  Term t = T("(g (f u) c)", &sig);
  CHECK(t.text() == "(g (f u) c)");
  CHECK(t.size() == 4);
  CHECK(t.ContainsVar("u"));
  CHECK(!t.ContainsVar("c"));
  CHECK(Substitute(t, {{"u", T("c", &sig)}}).text() == "(g (f c) c)");
  CHECK(T("(f u)", &sig) == T("(f u)", &sig));
  CHECK(T("(f u)", &sig) != T("(f v)", &sig));
  CHECK(FreeVars(t) == std::set<std::string>{"u"});
  CHECK(TupleText({T("c", &sig), T("u", &sig)}) == "(c u)");
}

TEST_CASE("signature rejects reserved and duplicate symbols") {
  Signature sig;
  CHECK_THROWS_AS(sig.AddFunction("alpha", 0), ArityError);
  CHECK_THROWS_AS(sig.AddFunction("b3", 1), ArityError);
  CHECK_THROWS_AS(sig.AddFunction("h_F", 1), ArityError);
  sig.AddFunction("f", 1);
  CHECK_THROWS_AS(sig.AddFunction("f", 2), ArityError);
  CHECK_THROWS_AS(CheckTerm(Term::App("f"), sig), ArityError);
  CHECK(IsReservedVariable("alpha"));
  CHECK(IsReservedVariable("b12"));
  CHECK(BetaIndex("b12") == 12);
  CHECK(BetaIndex("b0x") == 0);
}

TEST_CASE("parser reports positions and arity errors") {
  Signature sig = PSig();
  ParseContext ctx;
  ctx.sig = &sig;
  ctx.variables = {"u"};
  CHECK_THROWS_AS(ParseFormula(ReadSingleSExpr("(P u)"), ctx), ParseError);
  CHECK_THROWS_AS(ParseFormula(ReadSingleSExpr("(R u u)"), ctx), ParseError);
  CHECK_THROWS_AS(ReadSingleSExpr("(P u"), ParseError);
  try {
    ParseFormula(ReadSingleSExpr("(and\n  (P u (f c c)) (Q u))"), ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 8);
  }
  CHECK_THROWS_AS(ParseFormula(ReadSingleSExpr("(and (Q u))"), ctx), ParseError);
}

TEST_CASE("formula printing flattens chains and counts symbols") {
  Signature sig = PSig();
  Formula f = F("(and (Q u) (Q c) (not (P u c)))", &sig);
  CHECK(f.text() == "(and (Q u) (Q c) (not (P u c)))");
  CHECK(f.symbols() == 2 + 2 + 1 + 3 + 2);
  Formula q = F("(forall u (exists v (P u v)))", &sig);
  CHECK(q.symbols() == 2 + 2 + 3);
  CHECK(FreeVars(q).empty());
  CHECK(!q.quantifier_free());
}

TEST_CASE("substitution avoids capture") {
  Signature sig = PSig();
  Formula f = F("(and (Q u) (forall u (P u v)))", &sig);
  CHECK(Substitute(f, {{"u", T("c", &sig)}}).text() ==
        "(and (Q c) (forall u (P u v)))");
  CHECK(Substitute(f, {{"v", T("(f w)", &sig)}}).text() ==
        "(and (Q u) (forall u (P u (f w))))");
  CHECK_THROWS_AS(Substitute(f, {{"v", T("(f u)", &sig)}}), CaptureError);
}

TEST_CASE("literals, clauses and dnf") {
  Signature sig = PSig();
  Literal a = L("(P x y)", &sig), b = L("(not (Q x))", &sig);
  CHECK(a.Dual().text() == "(not (P x y))");
  CHECK(a.Dual().Dual() == a);
  CHECK(Literal::FromFormula(b.ToFormula()) == b);
  Clause c = MakeClause({a, b, a});
  CHECK(c.size() == 2);
  ClauseSet cs = MakeClauseSet({{a}, c, {a}});
  CHECK(cs.size() == 2);
  CHECK(LiteralCount(cs) == 3);
  CHECK(DnfOf({{a}}).text() == "(P x y)");
  CHECK(DnfOf(cs).conn() == Conn::kOr);
  CHECK_THROWS_AS(DnfOf({}), ShapeError);
  CHECK_THROWS_AS(DnfOf({{}}), ShapeError);
}

TEST_CASE("sequents are sets and print canonically") {
  Sequent s = S({"(Q c)", "(Q c)", "(P c c)"}, {"(Q c)"});
  CHECK(s.ante().size() == 2);
  CHECK(s.IsAxiom());
  CHECK(s.Atomic());
  CHECK(s.text() == "(P c c), (Q c) |- (Q c)");
  // 3 + 2 + 2 formula symbols, one comma, one turnstile
  CHECK(s.symbols() == 9);
  CHECK(S({"(Q c)"}, {}).RemoveAnte(F("(Q c)")).ante().empty());
}

TEST_CASE("literal normal form negates the succedent") {
  Sequent s = S({"(Q a)"}, {"(Q b)"});
  std::vector<Literal> lnf = LiteralNormalForm(s);
  REQUIRE(lnf.size() == 2);
  CHECK(lnf[0].text() == "(not (Q b))");
  CHECK(lnf[1].text() == "(Q a)");
}

TEST_CASE("sharp count shares common prefixes") {
  Signature sig;
  sig.AddFunction("a", 0);
  sig.AddFunction("b", 0);
  auto t = [&](const char* s) { return T(s, &sig); };
  CHECK(SharpCount({}) == 0);
  CHECK(SharpCount({{t("a"), t("a")}}) == 2);
  CHECK(SharpCount({{t("a"), t("a")}, {t("a"), t("b")}}) == 3);
  CHECK(SharpCount({{t("a"), t("a")}, {t("b"), t("a")}}) == 3);
  CHECK(SharpCount({{t("a"), t("b")}, {t("b"), t("a")}}) == 4);
  std::vector<TermTuple> ts{{t("a"), t("a")}, {t("b"), t("b")}, {t("a"), t("b")}};
  auto range = SharpCountRange(ts);
  CHECK(range.first <= SharpCount(ts));
  CHECK(SharpCount(ts) <= range.second);
}

TEST_CASE("tautology oracle") {
  CHECK(IsTautology(S({"p"}, {"p"})));
  CHECK(IsTautology(S({}, {"(or p (not p))"})));
  CHECK(!IsTautology(S({}, {"(or p q)"})));
  CHECK(IsTautology(S({"(imp p q)", "(imp q r)"}, {"(imp p r)"})));
  CHECK(!IsTautology(S({"(imp p q)"}, {"(imp q p)"})));
  CHECK(IsTautology(S({"(and p (not p))"}, {})));
  CHECK(!IsTautology(S({}, {})));
  CHECK_THROWS_AS(IsTautology(S({"(forall u (Q u))"}, {})), ShapeError);
}

TEST_CASE("tautology batch matches the serial oracle") {
  std::mt19937 rng(7);
  std::vector<Sequent> seqs;
  for (int i = 0; i < 300; ++i) seqs.push_back(RandomPropositionalSequent(rng, 6));
  std::vector<char> par = TautologyBatch(seqs, true);
  std::vector<char> ser = TautologyBatch(seqs, false);
  CHECK(par == ser);
  for (size_t i = 0; i < seqs.size(); ++i) CHECK(ser[i] == IsTautology(seqs[i]));
}

TEST_CASE("tautology agrees with empty set of open leaves") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Sequent s = RandomPropositionalSequent(rng, 8);
    CHECK(IsTautology(s) == NonTautologicalLeavesOf(s).empty());
  }
}
