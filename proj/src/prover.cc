#include "pi2cut/prover.h"

#include <set>

#include "pi2cut/error.h"
#include "pi2cut/tautology.h"

namespace pi2cut {

namespace {

struct Active {
  std::set<Formula> ignored_left;
  std::set<Formula> ignored_right;
};

bool Usable(const Formula& f, const std::set<Formula>& ignored) {
  return f.quantifier_free() && !ignored.count(f);
}

bool ActiveValid(const Sequent& s, const Active& a, const Formula* skip,
                 bool skip_left) {
  std::vector<Formula> ante, succ;
  for (const Formula& f : s.ante())
    if (Usable(f, a.ignored_left) && !(skip && skip_left && f == *skip))
      ante.push_back(f);
  for (const Formula& f : s.succ())
    if (Usable(f, a.ignored_right) && !(skip && !skip_left && f == *skip))
      succ.push_back(f);
  return IsTautology(ante, succ);
}

Rule LeftRule(Conn c) {
  switch (c) {
    case Conn::kAnd: return Rule::kAndL;
    case Conn::kOr: return Rule::kOrL;
    case Conn::kImp: return Rule::kImpL;
    default: return Rule::kNegL;
  }
}

Rule RightRule(Conn c) {
  switch (c) {
    case Conn::kAnd: return Rule::kAndR;
    case Conn::kOr: return Rule::kOrR;
    case Conn::kImp: return Rule::kImpR;
    default: return Rule::kNegR;
  }
}

bool Branching(Rule r) {
  return r == Rule::kAndR || r == Rule::kOrL || r == Rule::kImpL;
}

Derivation Build(const Sequent& s, Active a) {
  Derivation d;
  d.sequent = s;
  if (s.IsAxiom()) {
    d.rule = Rule::kAxiom;
    return d;
  }
  auto expand = [&](Rule r, const Formula& f) {
    d.rule = r;
    d.principal = f;
    for (const Sequent& p : RulePremises(s, r, f, std::nullopt))
      d.premises.push_back(Build(p, a));
    return d;
  };
  for (const Formula& f : s.ante())
    if (Usable(f, a.ignored_left) && !f.is_atom() &&
        !Branching(LeftRule(f.conn())))
      return expand(LeftRule(f.conn()), f);
  for (const Formula& f : s.succ())
    if (Usable(f, a.ignored_right) && !f.is_atom() &&
        !Branching(RightRule(f.conn())))
      return expand(RightRule(f.conn()), f);

  // Only branching formulas remain; drop the ones validity does not need.
  struct Cand {
    Formula f;
    bool left;
  };
  std::vector<Cand> cands;
  for (const Formula& f : s.ante())
    if (Usable(f, a.ignored_left) && !f.is_atom()) cands.push_back({f, true});
  for (const Formula& f : s.succ())
    if (Usable(f, a.ignored_right) && !f.is_atom()) cands.push_back({f, false});
  std::vector<Cand> needed;
  for (const Cand& c : cands) {
    if (ActiveValid(s, a, &c.f, c.left)) {
      (c.left ? a.ignored_left : a.ignored_right).insert(c.f);
    } else {
      needed.push_back(c);
    }
  }
  if (needed.empty()) throw NotTautologyError("not valid: " + s.text());
  // Prefer a formula with a premise that closes at once.
  size_t best = 0;
  int best_score = -1;
  for (size_t i = 0; i < needed.size(); ++i) {
    Rule r = needed[i].left ? LeftRule(needed[i].f.conn())
                            : RightRule(needed[i].f.conn());
    int score = 0;
    for (const Sequent& p : RulePremises(s, r, needed[i].f, std::nullopt))
      score += p.IsAxiom();
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  const Cand& c = needed[best];
  return expand(c.left ? LeftRule(c.f.conn()) : RightRule(c.f.conn()), c.f);
}

}  // namespace

Derivation ProvePropositional(const Sequent& s) {
  Active a;
  if (!ActiveValid(s, a, nullptr, false))
    throw NotTautologyError("quantifier-free part is not valid: " + s.text());
  return Build(s, a);
}

}  // namespace pi2cut
