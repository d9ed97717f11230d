#include <doctest.h>

#include "pi2cut/error.h"
#include "pi2cut/prover.h"
#include "pi2cut/tautology.h"
#include "support.h"

using namespace pi2cut;
using namespace pi2cut::testing;

namespace {

Signature QSig() {
  Signature sig;
  sig.AddFunction("c", 0);
  sig.AddFunction("f", 1);
  sig.AddPredicate("Q", 1);
  sig.AddPredicate("P", 2);
  return sig;
}

}  // namespace

TEST_CASE("propositional rules drop the principal formula") {
  Sequent s = S({"(and p q)"}, {"(or p r)"});
  auto prem = RulePremises(s, Rule::kAndL, F("(and p q)"), std::nullopt);
  REQUIRE(prem.size() == 1);
  CHECK(prem[0] == S({"p", "q"}, {"(or p r)"}));
  prem = RulePremises(s, Rule::kOrR, F("(or p r)"), std::nullopt);
  CHECK(prem[0] == S({"(and p q)"}, {"p", "r"}));
  prem = RulePremises(S({"(imp p q)"}, {}), Rule::kImpL, F("(imp p q)"),
                      std::nullopt);
  REQUIRE(prem.size() == 2);
  CHECK(prem[0] == S({}, {"p"}));
  CHECK(prem[1] == S({"q"}, {}));
  CHECK_THROWS_AS(RulePremises(s, Rule::kOrL, F("(and p q)"), std::nullopt),
                  ShapeError);
}

TEST_CASE("weak quantifier rules keep the principal formula") {
  Signature sig = QSig();
  Sequent s = S({"(forall u (Q u))"}, {}, &sig);
  auto prem = RulePremises(s, Rule::kForallL, F("(forall u (Q u))", &sig),
                           T("(f c)", &sig));
  REQUIRE(prem.size() == 1);
  CHECK(prem[0] == S({"(forall u (Q u))", "(Q (f c))"}, {}, &sig));
  prem = RulePremises(S({}, {"(forall u (Q u))"}, &sig), Rule::kForallR,
                      F("(forall u (Q u))", &sig), Term::Var("alpha"));
  CHECK(prem[0] == S({}, {"(Q alpha)"}, &sig));
  CHECK_THROWS_AS(RulePremises(s, Rule::kForallL, F("(forall u (Q u))", &sig),
                               std::nullopt),
                  ShapeError);
}

TEST_CASE("cut adds the cut formula on both sides") {
  Sequent s = S({"p"}, {"q"});
  auto prem = RulePremises(s, Rule::kCut, F("r"), std::nullopt);
  REQUIRE(prem.size() == 2);
  CHECK(prem[0] == S({"p"}, {"q", "r"}));
  CHECK(prem[1] == S({"p", "r"}, {"q"}));
}

TEST_CASE("maximal derivation of a small sequent") {
  Derivation d = MaximalDerivation(S({"(or p q)"}, {"p"}));
  CHECK(CountNodes(d) == 3);
  std::vector<Sequent> open = NonTautologicalLeaves(d);
  REQUIRE(open.size() == 1);
  CHECK(open[0] == S({"q"}, {"p"}));
  CHECK(NonTautologicalLeavesOf(S({"(or p q)"}, {"p"})) == open);
}

TEST_CASE("checker accepts a prover proof and reports complexity") {
  Sequent s = S({"(imp p q)", "(imp q r)", "p"}, {"r"});
  Proof pr{SignatureOf(s), ProvePropositional(s)};
  CheckReport rep = CheckProof(pr);
  CHECK(rep.ok);
  Complexity c = Complexities(pr);
  CHECK(c.q == 0);
  CHECK(c.l >= 2);
  CHECK(c.s > c.l);
  CHECK_THROWS_AS(ProvePropositional(S({"p"}, {"q"})), NotTautologyError);
}

TEST_CASE("prover skips irrelevant formulas") {
  Sequent s = S({"p", "(or a (or b c))"}, {"p"});
  Derivation d = ProvePropositional(s);
  CHECK(CountNodes(d) == 1);
  CHECK(d.rule == Rule::kAxiom);
}

TEST_CASE("checker finds open leaves and bad premises") {
  Sequent s = S({"(or p q)"}, {"p"});
  Proof pr{SignatureOf(s), MaximalDerivation(s)};
  CheckReport rep = CheckProof(pr);
  CHECK(!rep.ok);
  CHECK(rep.path == "1");
  CHECK(rep.reason.find("open leaf") != std::string::npos);

  Sequent t = S({"(and p q)"}, {"p"});
  Proof bad{SignatureOf(t), ProvePropositional(t)};
  bad.root.premises[0].sequent = S({"p"}, {"p"});
  rep = CheckProof(bad);
  CHECK(!rep.ok);
  CHECK(rep.path == "0");
}

TEST_CASE("checker enforces the eigenvariable condition") {
  Signature sig = QSig();
  Sequent s = S({"(Q alpha)"}, {"(forall u (Q u))"}, &sig);
  Derivation d = Apply(s, Rule::kForallR, F("(forall u (Q u))", &sig),
                       Term::Var("alpha"));
  d.premises[0].rule = Rule::kAxiom;
  CheckReport rep = CheckProof(Proof{sig, d});
  CHECK(!rep.ok);
  CHECK(rep.reason.find("eigenvariable") != std::string::npos);

  Derivation ok = Apply(S({}, {"(forall u (imp (Q u) (Q u)))"}, &sig),
                        Rule::kForallR, F("(forall u (imp (Q u) (Q u)))", &sig),
                        Term::Var("alpha"));
  ok.premises[0] = ProvePropositional(ok.premises[0].sequent);
  CHECK(CheckProof(Proof{sig, ok}).ok);
}

TEST_CASE("proof printing round-trips") {
  Signature sig = QSig();
  Sequent s = S({"(forall u (Q u))"}, {"(Q (f c))"}, &sig);
  Derivation d = Apply(s, Rule::kForallL, F("(forall u (Q u))", &sig),
                       T("(f c)", &sig));
  d.premises[0] = ProvePropositional(d.premises[0].sequent);
  Proof pr{sig, d};
  REQUIRE(CheckProof(pr).ok);
  std::string text = PrintProof(pr);
  Proof back = ParseProof(text);
  CHECK(PrintProof(back) == text);
  CHECK(CheckProof(back).ok);
  CHECK(Complexities(back).q == 1);
}

TEST_CASE("origins follow the cut formula") {
  Sequent s = S({"p"}, {"p"});
  Signature sig = SignatureOf(S({"p", "r"}, {}));
  Derivation d = Apply(s, Rule::kCut, F("r"));
  d.premises[0] = ProvePropositional(d.premises[0].sequent);
  d.premises[1] = ProvePropositional(d.premises[1].sequent);
  Proof pr{sig, d};
  REQUIRE(CheckProof(pr).ok);
  CHECK(Ancestry(pr, "1", true, F("r")) == kOriginCut);
  CHECK(Ancestry(pr, "1", true, F("p")) == kOriginEnd);
}
