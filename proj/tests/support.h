#ifndef PI2CUT_TESTS_SUPPORT_H_
#define PI2CUT_TESTS_SUPPORT_H_

#include <random>
#include <string>
#include <vector>

#include "pi2cut/problem.h"
#include "pi2cut/sexpr.h"
#include "pi2cut/solver.h"

namespace pi2cut::testing {

inline std::string FixturePath(const std::string& name) {
  return std::string(PI2CUT_FIXTURES) + "/" + name;
}

inline ProblemFile Fixture(const std::string& name) {
  return LoadProblem(FixturePath(name));
}

// Bare identifiers not in `sig` (or any identifier when sig is null and the
// name is reserved or starts with a lowercase letter x, y, z) are variables.
inline ParseContext LooseContext(const Signature* sig) {
  ParseContext ctx;
  ctx.sig = sig;
  ctx.unknown_are_variables = sig != nullptr;
  return ctx;
}

inline Term T(const std::string& text, const Signature* sig = nullptr) {
  return ParseTerm(ReadSingleSExpr(text), LooseContext(sig));
}

inline Formula F(const std::string& text, const Signature* sig = nullptr) {
  return ParseFormula(ReadSingleSExpr(text), LooseContext(sig));
}

inline Literal L(const std::string& text, const Signature* sig = nullptr) {
  return ParseLiteral(ReadSingleSExpr(text), LooseContext(sig));
}

inline Sequent S(const std::vector<std::string>& ante,
                 const std::vector<std::string>& succ,
                 const Signature* sig = nullptr) {
  std::vector<Formula> a, s;
  for (const std::string& t : ante) a.push_back(F(t, sig));
  for (const std::string& t : succ) s.push_back(F(t, sig));
  return Sequent(a, s);
}

inline std::set<Literal> LiteralSet(const std::vector<std::string>& texts,
                                    const Signature* sig) {
  std::set<Literal> out;
  for (const std::string& t : texts) out.insert(L(t, sig));
  return out;
}

// Every atom of the sequent declared as a predicate; terms as constants.
inline Signature SignatureOf(const Sequent& s) {
  Signature sig;
  std::set<Formula> atoms;
  for (const Formula& f : s.ante()) f.CollectAtoms(atoms);
  for (const Formula& f : s.succ()) f.CollectAtoms(atoms);
  for (const Formula& a : atoms)
    if (!sig.HasPredicate(a.pred()))
      sig.AddPredicate(a.pred(), static_cast<int>(a.terms().size()));
  return sig;
}

// Random quantifier-free formulas over a fixed atom list.
class FormulaGen {
 public:
  FormulaGen(std::mt19937& rng, std::vector<Formula> atoms)
      : rng_(rng), atoms_(std::move(atoms)) {}

  Formula Make(int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (depth == 0 || pick(rng_) < 3) {
      Formula a = atoms_[Index(atoms_.size())];
      return pick(rng_) < 2 ? Formula::Not(a) : a;
    }
    int c = pick(rng_);
    Formula l = Make(depth - 1), r = Make(depth - 1);
    if (c < 1) return Formula::Not(l);
    if (c < 4) return Formula::And(l, r);
    if (c < 7) return Formula::Or(l, r);
    return Formula::Imp(l, r);
  }

  size_t Index(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng_);
  }

 private:
  std::mt19937& rng_;
  std::vector<Formula> atoms_;
};

inline Sequent RandomPropositionalSequent(std::mt19937& rng, int max_atoms) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  int n = natoms(rng);
  std::vector<Formula> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(Formula::Atom("p" + std::to_string(i)));
  FormulaGen gen(rng, atoms);
  std::uniform_int_distribution<int> side(0, 2), depth(0, 3);
  std::vector<Formula> ante, succ;
  for (int k = side(rng) + 1; k > 0; --k) ante.push_back(gen.Make(depth(rng)));
  for (int k = side(rng); k > 0; --k) succ.push_back(gen.Make(depth(rng)));
  return Sequent(ante, succ);
}

// A small random problem with one universal and one or two existential
// variables. F mentions t_i(x1), G mentions r_j(y), so the grammar's
// language often yields a valid Herbrand sequent.
inline ProblemFile RandomProblem(std::mt19937& rng) {
  ProblemFile pf;
  PrenexProblem& pb = pf.problem;
  for (const char* c : {"c", "d"}) pb.sig.AddFunction(c, 0);
  for (const char* f : {"f", "g"}) pb.sig.AddFunction(f, 1);
  pb.sig.AddPredicate("P", 2);
  pb.sig.AddPredicate("Q", 2);
  std::uniform_int_distribution<int> coin(0, 1), four(0, 3);
  auto pred = [&] { return coin(rng) ? "P" : "Q"; };
  std::vector<Term> consts{Term::App("c"), Term::App("d")};
  Term alpha = Term::Var(kAlpha);

  SchematicPi2Grammar& g = pf.grammar;
  int m = 1 + coin(rng);
  g.r_terms.push_back(consts[coin(rng)]);
  if (m == 2)
    g.r_terms.push_back(four(rng) == 0 ? consts[coin(rng)]
                                       : Term::App("f", {Term::Var(BetaName(1))}));
  int p = 1 + coin(rng);
  std::set<Term> ts;
  while (static_cast<int>(ts.size()) < p)
    ts.insert(Term::App(coin(rng) ? "f" : "g", {alpha}));
  g.t_terms.assign(ts.begin(), ts.end());
  g.f_tuples = {{alpha}};
  TermTuple v;
  for (int j = 1; j <= m; ++j) v.push_back(Term::Var(BetaName(j)));
  g.g_tuples = {v};

  pb.xs = {"x1"};
  for (int j = 1; j <= m; ++j) pb.ys.push_back("y" + std::to_string(j));
  Term x1 = Term::Var("x1");
  Substitution to_y;
  for (int j = 1; j <= m; ++j) to_y[BetaName(j)] = Term::Var(pb.ys[j - 1]);

  std::vector<Formula> fatoms;
  for (int k = 0; k < 3; ++k) {
    Term b = four(rng) == 0 ? x1 : Substitute(g.t_terms[k % p], {{kAlpha, x1}});
    fatoms.push_back(Formula::Atom(pred(), {x1, b}));
  }
  std::vector<Formula> gatoms;
  for (int k = 0; k < 3; ++k) {
    int j = k % m;
    Term a = four(rng) == 0 ? consts[coin(rng)] : Substitute(g.r_terms[j], to_y);
    gatoms.push_back(Formula::Atom(pred(), {a, Term::Var(pb.ys[j])}));
  }
  FormulaGen fg(rng, fatoms), gg(rng, gatoms);
  std::uniform_int_distribution<int> depth(1, 2);
  pb.f = fg.Make(depth(rng));
  pb.g = gg.Make(depth(rng));
  return pf;
}

}  // namespace pi2cut::testing

#endif  // PI2CUT_TESTS_SUPPORT_H_
