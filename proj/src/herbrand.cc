#include "pi2cut/herbrand.h"

#include <algorithm>
#include <functional>
#include <map>

#include "pi2cut/error.h"
#include "pi2cut/prover.h"
#include "pi2cut/tautology.h"

namespace pi2cut {

namespace {

Substitution Zip(const std::vector<std::string>& vars, const TermTuple& t) {
  if (vars.size() != t.size())
    throw ArityError("tuple " + TupleText(t) + " has arity " +
                     std::to_string(t.size()) + ", expected " +
                     std::to_string(vars.size()));
  Substitution s;
  for (size_t i = 0; i < vars.size(); ++i) s[vars[i]] = t[i];
  return s;
}

void SortTuples(std::vector<TermTuple>& ts) {
  std::sort(ts.begin(), ts.end(), [](const TermTuple& a, const TermTuple& b) {
    std::string ta = TupleText(a), tb = TupleText(b);
    return ta != tb ? ta < tb : a < b;
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

struct Step {
  Rule rule;
  Formula principal;
  std::optional<Term> term;
};

// Preorder walk of the trie of `tuples`; one weak inference per edge.
void TrieSteps(const Formula& parent, std::vector<TermTuple> tuples,
               size_t depth, Rule rule, std::vector<Step>& out) {
  if (tuples.empty() || depth == tuples.front().size()) return;
  std::map<Term, std::vector<TermTuple>> groups;
  for (TermTuple& t : tuples) groups[t[depth]].push_back(std::move(t));
  for (auto& [term, group] : groups) {
    out.push_back({rule, parent, term});
    Formula child = Substitute(parent.sub(0), {{parent.var(), term}});
    TrieSteps(child, std::move(group), depth + 1, rule, out);
  }
}

Derivation Chain(const Sequent& start, const std::vector<Step>& steps,
                 const std::function<Derivation(const Sequent&)>& top) {
  std::vector<Sequent> seqs = {start};
  for (const Step& s : steps) {
    std::vector<Sequent> ps = RulePremises(seqs.back(), s.rule, s.principal,
                                           s.term);
    seqs.push_back(ps.at(0));
  }
  Derivation node = top(seqs.back());
  for (size_t i = steps.size(); i-- > 0;) {
    Derivation d;
    d.sequent = seqs[i];
    d.rule = steps[i].rule;
    d.principal = steps[i].principal;
    d.term = steps[i].term;
    d.premises.push_back(std::move(node));
    node = std::move(d);
  }
  return node;
}

std::vector<Step> InstantiationSteps(const PrenexProblem& pb,
                                     std::vector<TermTuple> fs,
                                     std::vector<TermTuple> gs) {
  SortTuples(fs);
  SortTuples(gs);
  std::vector<Step> steps;
  if (!pb.xs.empty()) TrieSteps(pb.EndAntecedent(), fs, 0, Rule::kForallL, steps);
  if (!pb.ys.empty()) TrieSteps(pb.EndSuccedent(), gs, 0, Rule::kExistsR, steps);
  return steps;
}

// Drops instance tuples the branch does not need, in canonical order.
void Prune(const PrenexProblem& pb, const std::vector<Formula>& ante,
           const std::vector<Formula>& succ, std::vector<TermTuple>& fs,
           std::vector<TermTuple>& gs) {
  SortTuples(fs);
  SortTuples(gs);
  auto valid = [&](const std::vector<TermTuple>& f,
                   const std::vector<TermTuple>& g) {
    std::vector<Formula> a = ante, s = succ;
    if (pb.xs.empty()) a.push_back(pb.f);
    if (pb.ys.empty()) s.push_back(pb.g);
    for (const TermTuple& u : f) a.push_back(pb.FInstance(u));
    for (const TermTuple& v : g) s.push_back(pb.GInstance(v));
    return IsTautology(a, s);
  };
  for (size_t i = 0; i < fs.size();) {
    std::vector<TermTuple> trial = fs;
    trial.erase(trial.begin() + i);
    if (valid(trial, gs)) fs = std::move(trial);
    else ++i;
  }
  for (size_t i = 0; i < gs.size();) {
    std::vector<TermTuple> trial = gs;
    trial.erase(trial.begin() + i);
    if (valid(fs, trial)) gs = std::move(trial);
    else ++i;
  }
}

void TrieCount(std::vector<TermTuple> tuples, size_t depth, size_t& count) {
  if (tuples.empty() || depth == tuples.front().size()) return;
  std::map<Term, std::vector<TermTuple>> groups;
  for (TermTuple& t : tuples) groups[t[depth]].push_back(std::move(t));
  count += groups.size();
  for (auto& [term, group] : groups) TrieCount(std::move(group), depth + 1, count);
}

}  // namespace

Formula PrenexProblem::EndAntecedent() const {
  Formula out = f;
  for (size_t i = xs.size(); i-- > 0;) out = Formula::Forall(xs[i], out);
  return out;
}

Formula PrenexProblem::EndSuccedent() const {
  Formula out = g;
  for (size_t i = ys.size(); i-- > 0;) out = Formula::Exists(ys[i], out);
  return out;
}

Sequent PrenexProblem::EndSequent() const {
  return Sequent({EndAntecedent()}, {EndSuccedent()});
}

Formula PrenexProblem::FInstance(const TermTuple& u) const {
  return Substitute(f, Zip(xs, u));
}

Formula PrenexProblem::GInstance(const TermTuple& v) const {
  return Substitute(g, Zip(ys, v));
}

void ValidateProblem(const PrenexProblem& pb) {
  std::set<std::string> seen;
  for (const auto* vs : {&pb.xs, &pb.ys})
    for (const std::string& v : *vs) {
      if (IsReservedName(v))
        throw VariableConditionError("reserved name as problem variable: " + v);
      if (pb.sig.HasFunction(v) || pb.sig.HasPredicate(v))
        throw VariableConditionError("problem variable clashes with symbol: " +
                                     v);
      if (!seen.insert(v).second)
        throw VariableConditionError("problem variable declared twice: " + v);
    }
  if (!pb.f.quantifier_free() || !pb.g.quantifier_free())
    throw ShapeError("problem matrices must be quantifier-free");
  CheckFormula(pb.f, pb.sig);
  CheckFormula(pb.g, pb.sig);
  std::set<std::string> xs(pb.xs.begin(), pb.xs.end());
  std::set<std::string> ys(pb.ys.begin(), pb.ys.end());
  for (const std::string& v : FreeVars(pb.f))
    if (!xs.count(v))
      throw VariableConditionError("antecedent matrix has free variable " + v);
  for (const std::string& v : FreeVars(pb.g))
    if (!ys.count(v))
      throw VariableConditionError("succedent matrix has free variable " + v);
}

Sequent Midsequent(const PrenexProblem& pb, const HerbrandInstanceSet& inst) {
  std::vector<Formula> ante, succ;
  // Without quantifiers the matrix itself is the only instance.
  if (pb.xs.empty()) ante.push_back(pb.f);
  if (pb.ys.empty()) succ.push_back(pb.g);
  for (const TermTuple& u : inst.f_tuples) ante.push_back(pb.FInstance(u));
  for (const TermTuple& v : inst.g_tuples) succ.push_back(pb.GInstance(v));
  return Sequent(std::move(ante), std::move(succ));
}

HerbrandResult HerbrandCheck(const PrenexProblem& pb,
                             const HerbrandInstanceSet& inst) {
  HerbrandResult r;
  r.valid = IsTautology(Midsequent(pb, inst));
  r.complexity = SharpCount(inst.f_tuples) + SharpCount(inst.g_tuples);
  return r;
}

std::set<Term> HerbrandTermSet(const PrenexProblem& pb,
                               const HerbrandInstanceSet& inst) {
  std::set<Term> out;
  for (const TermTuple& u : inst.f_tuples) {
    Zip(pb.xs, u);
    out.insert(Term::App(kWrapF, u));
  }
  for (const TermTuple& v : inst.g_tuples) {
    Zip(pb.ys, v);
    out.insert(Term::App(kWrapG, v));
  }
  return out;
}

Formula ExtendedHerbrandSequent::CutFormula() const {
  return Formula::Forall(kCutX, Formula::Exists(kCutY, cut_matrix));
}

Formula ExtendedHerbrandSequent::Disjunction() const {
  std::vector<Formula> parts;
  for (const Term& t : grammar.t_terms)
    parts.push_back(Substitute(
        cut_matrix, {{kCutX, Term::Var(kAlpha)}, {kCutY, t}}));
  return Formula::OrAll(parts);
}

Formula ExtendedHerbrandSequent::Conjunction() const {
  std::vector<Formula> parts;
  for (int j = 1; j <= grammar.m(); ++j)
    parts.push_back(Substitute(cut_matrix, {{kCutX, grammar.r_terms[j - 1]},
                                            {kCutY, Term::Var(BetaName(j))}}));
  return Formula::AndAll(parts);
}

void ValidateEh(const ExtendedHerbrandSequent& eh) {
  ValidateProblem(eh.problem);
  GrammarCheck gc = Validate(eh.grammar, &eh.problem.sig);
  if (!gc.ok()) throw VariableConditionError(gc.violations.front());
  if (!eh.cut_matrix.quantifier_free())
    throw VariableConditionError("cut matrix must be quantifier-free");
  CheckFormula(eh.cut_matrix, eh.problem.sig);
  for (const std::string& v : FreeVars(eh.cut_matrix))
    if (v != kCutX && v != kCutY)
      throw VariableConditionError("cut matrix has variable " + v +
                                   " outside {x, y}");
  for (const TermTuple& u : eh.grammar.f_tuples) Zip(eh.problem.xs, u);
  for (const TermTuple& v : eh.grammar.g_tuples) Zip(eh.problem.ys, v);
}

EhResult EhBuild(const ExtendedHerbrandSequent& eh) {
  ValidateEh(eh);
  const SchematicPi2Grammar& g = eh.grammar;
  std::vector<Formula> ante, succ;
  if (eh.problem.xs.empty()) ante.push_back(eh.problem.f);
  if (eh.problem.ys.empty()) succ.push_back(eh.problem.g);
  for (const TermTuple& u : g.f_tuples) ante.push_back(eh.problem.FInstance(u));
  ante.push_back(Formula::Imp(eh.Disjunction(), eh.Conjunction()));
  for (const TermTuple& v : g.g_tuples) succ.push_back(eh.problem.GInstance(v));
  EhResult r;
  r.sequent = Sequent(std::move(ante), std::move(succ));
  r.tautology = IsTautology(r.sequent);
  size_t k = eh.problem.xs.size(), l = eh.problem.ys.size();
  r.complexity = k * g.f_tuples.size() + l * g.g_tuples.size() + g.p() + g.m();
  r.shared_complexity =
      SharpCount(g.f_tuples) + SharpCount(g.g_tuples) + g.p() + g.m();
  return r;
}

size_t TrieSize(const std::vector<TermTuple>& tuples) {
  std::vector<TermTuple> ts = tuples;
  SortTuples(ts);
  size_t n = 0;
  TrieCount(ts, 0, n);
  return n;
}

Proof ProofFromEh(const ExtendedHerbrandSequent& eh) {
  EhResult built = EhBuild(eh);
  if (!built.tautology)
    throw NotTautologyError("extended Herbrand sequent is not a tautology");
  const PrenexProblem& pb = eh.problem;
  const SchematicPi2Grammar& g = eh.grammar;
  const Formula cut = eh.CutFormula();
  const Sequent end = pb.EndSequent();
  const Term alpha = Term::Var(kAlpha);

  // Left: forall-right on alpha, then the p witnesses t_i.
  std::vector<Step> left;
  left.push_back({Rule::kForallR, cut, alpha});
  Formula ex_alpha = Substitute(cut.sub(0), {{kCutX, alpha}});
  std::vector<Formula> left_succ;
  for (const Term& t : g.t_terms) {
    left.push_back({Rule::kExistsR, ex_alpha, t});
    left_succ.push_back(Substitute(eh.cut_matrix, {{kCutX, alpha}, {kCutY, t}}));
  }
  std::vector<TermTuple> lf = g.f_tuples, lg = g.g_tuples;
  Prune(pb, {}, left_succ, lf, lg);
  for (Step& s : InstantiationSteps(pb, lf, lg)) left.push_back(std::move(s));

  // Right: forall-left on r_j, exists-left on b_j, alternating.
  std::vector<Step> right;
  std::vector<Formula> right_ante;
  for (int j = 1; j <= g.m(); ++j) {
    const Term& r = g.r_terms[j - 1];
    Term b = Term::Var(BetaName(j));
    right.push_back({Rule::kForallL, cut, r});
    Formula ex_r = Substitute(cut.sub(0), {{kCutX, r}});
    right.push_back({Rule::kExistsL, ex_r, b});
    right_ante.push_back(Substitute(eh.cut_matrix, {{kCutX, r}, {kCutY, b}}));
  }
  std::vector<TermTuple> rf = g.f_tuples, rg = g.g_tuples;
  Prune(pb, right_ante, {}, rf, rg);
  for (Step& s : InstantiationSteps(pb, rf, rg)) right.push_back(std::move(s));

  Proof p;
  p.sig = pb.sig;
  p.root.sequent = end;
  p.root.rule = Rule::kCut;
  p.root.principal = cut;
  p.root.premises.push_back(Chain(end.AddSucc(cut), left, ProvePropositional));
  p.root.premises.push_back(Chain(end.AddAnte(cut), right, ProvePropositional));
  CheckReport rep = CheckProof(p);
  if (!rep.ok)
    throw Error("constructed proof fails the check at '" + rep.path +
                "': " + rep.reason);
  return p;
}

Proof ProofFromHerbrand(const PrenexProblem& pb,
                        const HerbrandInstanceSet& inst) {
  ValidateProblem(pb);
  if (!IsTautology(Midsequent(pb, inst)))
    throw NotTautologyError("instances do not form a Herbrand sequent");
  Proof p;
  p.sig = pb.sig;
  p.root = Chain(pb.EndSequent(),
                 InstantiationSteps(pb, inst.f_tuples, inst.g_tuples),
                 ProvePropositional);
  CheckReport rep = CheckProof(p);
  if (!rep.ok)
    throw Error("constructed proof fails the check at '" + rep.path +
                "': " + rep.reason);
  return p;
}

}  // namespace pi2cut
