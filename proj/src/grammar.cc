#include "pi2cut/grammar.h"

#include <deque>
#include <map>

#include "pi2cut/error.h"

namespace pi2cut {

namespace {

std::string Show(const Term& t) { return t.text(); }

bool VarsWithin(const Term& t, const std::set<std::string>& allowed,
                std::string& bad) {
  for (const std::string& v : FreeVars(t))
    if (!allowed.count(v)) {
      bad = v;
      return false;
    }
  return true;
}

std::set<std::string> Betas(int upto) {
  std::set<std::string> s;
  for (int j = 1; j <= upto; ++j) s.insert(BetaName(j));
  return s;
}

Term WrapTuple(const char* wrapper, const TermTuple& tuple,
               const Substitution& s) {
  std::vector<Term> args;
  for (const Term& t : tuple) args.push_back(Substitute(t, s));
  return Term::App(wrapper, std::move(args));
}

Term ReplaceAt(const Term& t, const std::vector<int>& pos, size_t depth,
               const Term& by) {
  if (depth == pos.size()) return by;
  std::vector<Term> args = t.args();
  args[pos[depth]] = ReplaceAt(args[pos[depth]], pos, depth + 1, by);
  return Term::App(t.name(), std::move(args));
}

void Occurrences(const Term& t, const Term& lhs, std::vector<int>& pos,
                 std::vector<std::vector<int>>& out) {
  if (t.size() < lhs.size()) return;
  if (t == lhs) {
    out.push_back(pos);
    return;
  }
  for (size_t i = 0; i < t.args().size(); ++i) {
    pos.push_back(static_cast<int>(i));
    Occurrences(t.args()[i], lhs, pos, out);
    pos.pop_back();
  }
}

int Measure(const Term& t) {
  if (t.is_var()) return (t.name() == kCutX || t.name() == kCutY) ? 0 : 1;
  int n = 1;
  for (const Term& a : t.args()) n += Measure(a);
  return n;
}

}  // namespace

Term SchematicPi2Grammar::BetaProduction(int j, int i) const {
  return Substitute(t_terms.at(i - 1), {{kAlpha, r_terms.at(j - 1)}});
}

GrammarCheck Validate(const SchematicPi2Grammar& g, const Signature* sig,
                      bool strict) {
  GrammarCheck c;
  auto viol = [&](const std::string& s) { c.violations.push_back(s); };
  if (g.m() < 1) viol("at least one r-term required (m >= 1)");
  if (g.p() < 1) viol("at least one t-term required (p >= 1)");
  std::string bad;
  for (int j = 1; j <= g.m(); ++j) {
    const Term& r = g.r_terms[j - 1];
    if (!VarsWithin(r, Betas(j - 1), bad)) {
      if (j == 1)
        viol("variable condition V(r1)=0 violated: r1 = " + Show(r) +
             " contains " + bad);
      else
        viol("variable condition on r" + std::to_string(j) + " = " + Show(r) +
             ": " + bad + " not among b1..b" + std::to_string(j - 1));
    }
  }
  for (int i = 1; i <= g.p(); ++i) {
    const Term& t = g.t_terms[i - 1];
    if (!VarsWithin(t, {kAlpha}, bad))
      viol("variable condition on t" + std::to_string(i) + " = " + Show(t) +
           ": " + bad + " is not alpha");
  }
  for (const TermTuple& u : g.f_tuples) {
    if (u.size() != g.f_tuples.front().size())
      viol("f-tuples of mixed arity: " + TupleText(u));
    for (const Term& t : u)
      if (!VarsWithin(t, {kAlpha}, bad))
        viol("f-tuple " + TupleText(u) + " contains " + bad);
  }
  std::set<std::string> all_betas = Betas(g.m());
  for (const TermTuple& v : g.g_tuples) {
    if (v.size() != g.g_tuples.front().size())
      viol("g-tuples of mixed arity: " + TupleText(v));
    for (const Term& t : v)
      if (!VarsWithin(t, all_betas, bad))
        viol("g-tuple " + TupleText(v) + " contains " + bad);
  }
  // Acyclicity: a derived beta_j production may only mention smaller betas.
  if (c.violations.empty()) {
    for (int j = 1; j <= g.m(); ++j)
      for (int i = 1; i <= g.p(); ++i)
        if (!VarsWithin(g.BetaProduction(j, i), Betas(j - 1), bad))
          viol("cyclic production b" + std::to_string(j) + " -> " +
               Show(g.BetaProduction(j, i)));
  }
  if (sig) {
    auto check = [&](const Term& t) {
      try {
        CheckTerm(t, *sig);
      } catch (const Error& e) {
        viol(std::string("arity: ") + e.what());
      }
    };
    for (const Term& r : g.r_terms) check(r);
    for (const Term& t : g.t_terms) check(t);
    for (const TermTuple& u : g.f_tuples)
      for (const Term& t : u) check(t);
    for (const TermTuple& v : g.g_tuples)
      for (const Term& t : v) check(t);
  }
  auto dups = [&](const std::vector<Term>& ts, const char* what) {
    std::set<Term> seen;
    for (const Term& t : ts)
      if (!seen.insert(t).second) {
        std::string msg = std::string("duplicate ") + what + " " + Show(t);
        (strict ? c.violations : c.warnings).push_back(msg);
      }
  };
  dups(g.r_terms, "r-term");
  dups(g.t_terms, "t-term");
  return c;
}

std::vector<Term> BetaValues(const SchematicPi2Grammar& g,
                             const RigidAssignment& a) {
  std::vector<Term> vals;
  Substitution s;
  for (int j = 1; j <= g.m(); ++j) {
    Term r = Substitute(g.r_terms[j - 1], s);
    Term v = Substitute(g.t_terms[a.beta_choice[j - 1] - 1], {{kAlpha, r}});
    s[BetaName(j)] = v;
    vals.push_back(v);
  }
  return vals;
}

std::set<Term> RigidLanguage(const SchematicPi2Grammar& g) {
  std::set<Term> out;
  if (g.m() < 1 || g.p() < 1) return out;
  RigidAssignment a;
  a.beta_choice.assign(g.m(), 1);
  for (;;) {
    std::vector<Term> vals = BetaValues(g, a);
    Substitution s;
    for (int j = 1; j <= g.m(); ++j) s[BetaName(j)] = vals[j - 1];
    for (const TermTuple& v : g.g_tuples) out.insert(WrapTuple(kWrapG, v, s));
    for (int j = 1; j <= g.m(); ++j) {
      Substitution sa = {{kAlpha, Substitute(g.r_terms[j - 1], s)}};
      for (const TermTuple& u : g.f_tuples) out.insert(WrapTuple(kWrapF, u, sa));
    }
    int k = 0;
    while (k < g.m() && a.beta_choice[k] == g.p()) a.beta_choice[k++] = 1;
    if (k == g.m()) break;
    ++a.beta_choice[k];
  }
  return out;
}

bool Covers(const SchematicPi2Grammar& g, const std::set<Term>& terms) {
  size_t k = g.f_tuples.empty() ? SIZE_MAX : g.f_tuples.front().size();
  size_t l = g.g_tuples.empty() ? SIZE_MAX : g.g_tuples.front().size();
  for (const Term& t : terms) {
    if (t.name() == kWrapF && k != SIZE_MAX && t.args().size() != k)
      throw ArityError("h_F term of arity " + std::to_string(t.args().size()) +
                       ", grammar has " + std::to_string(k));
    if (t.name() == kWrapG && l != SIZE_MAX && t.args().size() != l)
      throw ArityError("h_G term of arity " + std::to_string(t.args().size()) +
                       ", grammar has " + std::to_string(l));
  }
  std::set<Term> lang = RigidLanguage(g);
  for (const Term& t : terms)
    if (!lang.count(t)) return false;
  return true;
}

std::vector<RewriteRule> GStarSystem::All() const {
  std::vector<RewriteRule> all = upsilon1;
  all.insert(all.end(), upsilon2.begin(), upsilon2.end());
  all.insert(all.end(), upsilon3.begin(), upsilon3.end());
  return all;
}

GStarSystem GStarOf(const SchematicPi2Grammar& g) {
  GStarSystem sys;
  Term tau = Term::Var("tau");
  for (const TermTuple& u : g.f_tuples)
    sys.upsilon1.push_back({tau, Term::App(kWrapF, u)});
  for (const TermTuple& v : g.g_tuples)
    sys.upsilon1.push_back({tau, Term::App(kWrapG, v)});
  Term x = Term::Var(kCutX), y = Term::Var(kCutY);
  std::set<std::pair<Term, Term>> seen;
  auto add = [&](std::vector<RewriteRule>& to, const Term& lhs, const Term& rhs) {
    if (seen.insert({lhs, rhs}).second) to.push_back({lhs, rhs});
  };
  add(sys.upsilon2, Term::Var(kAlpha), x);
  for (const Term& r : g.r_terms) add(sys.upsilon2, r, x);
  for (const Term& t : g.t_terms) add(sys.upsilon3, t, y);
  for (int j = 1; j <= g.m(); ++j) add(sys.upsilon3, Term::Var(BetaName(j)), y);
  return sys;
}

int RewriteMeasure(const Literal& l) {
  int n = 0;
  for (const Term& t : l.atom().terms()) n += Measure(t);
  return n;
}

std::vector<std::pair<Literal, RewriteStep>> OneStep(const Literal& l,
                                                     const GStarSystem& sys) {
  std::vector<std::pair<Literal, RewriteStep>> out;
  std::vector<RewriteRule> rules = sys.All();
  const std::vector<Term>& args = l.atom().terms();
  int before = RewriteMeasure(l);
  for (size_t r = 0; r < rules.size(); ++r) {
    for (size_t a = 0; a < args.size(); ++a) {
      std::vector<int> pos = {static_cast<int>(a)};
      std::vector<std::vector<int>> occ;
      Occurrences(args[a], rules[r].lhs, pos, occ);
      for (const std::vector<int>& p : occ) {
        std::vector<Term> nargs = args;
        nargs[a] = ReplaceAt(args[a], p, 1, rules[r].rhs);
        Literal nl(l.positive(), Formula::Atom(l.atom().pred(), nargs));
        if (RewriteMeasure(nl) >= before)
          throw Error("rewrite step does not decrease the measure: " +
                      l.text() + " -> " + nl.text());
        out.push_back({nl, {p, static_cast<int>(r)}});
      }
    }
  }
  return out;
}

std::set<Literal> RewriteClosure(const Literal& l, const GStarSystem& sys) {
  std::set<Literal> seen = {l};
  std::deque<Literal> queue = {l};
  while (!queue.empty()) {
    Literal cur = queue.front();
    queue.pop_front();
    for (auto& [next, step] : OneStep(cur, sys))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

std::set<Literal> ReachableLiterals(const Literal& l, const GStarSystem& sys) {
  std::set<Literal> out;
  const std::set<std::string> xy = {kCutX, kCutY};
  for (const Literal& r : RewriteClosure(l, sys)) {
    bool ok = true;
    for (const std::string& v : FreeVars(r))
      if (!xy.count(v)) ok = false;
    if (ok) out.insert(r);
  }
  return out;
}

RewriteDerivation FindRewriteDerivation(const Literal& from, const Literal& to,
                                        const GStarSystem& sys, bool& found) {
  std::map<Literal, std::pair<Literal, RewriteStep>> parent;
  std::set<Literal> seen = {from};
  std::deque<Literal> queue = {from};
  found = from == to;
  while (!queue.empty() && !found) {
    Literal cur = queue.front();
    queue.pop_front();
    for (auto& [next, step] : OneStep(cur, sys)) {
      if (!seen.insert(next).second) continue;
      parent.emplace(next, std::make_pair(cur, step));
      if (next == to) {
        found = true;
        break;
      }
      queue.push_back(next);
    }
  }
  RewriteDerivation d;
  if (!found) return d;
  for (Literal cur = to; !(cur == from);) {
    auto& [prev, step] = parent.at(cur);
    d.insert(d.begin(), step);
    cur = prev;
  }
  return d;
}

Literal ApplyRewriteDerivation(const Literal& from, const RewriteDerivation& d,
                               const GStarSystem& sys) {
  std::vector<RewriteRule> rules = sys.All();
  Literal cur = from;
  for (const RewriteStep& s : d) {
    if (s.position.empty() || s.rule < 0 ||
        s.rule >= static_cast<int>(rules.size()))
      throw Error("malformed rewrite step");
    std::vector<Term> args = cur.atom().terms();
    const Term* sub = &args.at(s.position[0]);
    for (size_t i = 1; i < s.position.size(); ++i)
      sub = &sub->args().at(s.position[i]);
    if (!(*sub == rules[s.rule].lhs))
      throw Error("rewrite step does not match at position");
    args[s.position[0]] = ReplaceAt(args[s.position[0]], s.position, 1,
                                    rules[s.rule].rhs);
    cur = Literal(cur.positive(), Formula::Atom(cur.atom().pred(), args));
  }
  return cur;
}

}  // namespace pi2cut
