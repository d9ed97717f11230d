#include "pi2cut/solver.h"

#include <algorithm>
#include <functional>
#include <map>

#include "pi2cut/error.h"
#include "pi2cut/sexpr.h"
#include "pi2cut/tautology.h"

namespace pi2cut {

namespace {

const Term& X() {
  static const Term t = Term::Var(kCutX);
  return t;
}
const Term& Y() {
  static const Term t = Term::Var(kCutY);
  return t;
}
const Term& Alpha() {
  static const Term t = Term::Var(kAlpha);
  return t;
}

bool HasBeta(const std::set<std::string>& vars) {
  for (const std::string& v : vars)
    if (BetaIndex(v) > 0) return true;
  return false;
}

bool OverXY(const Literal& l) {
  for (const std::string& v : FreeVars(l))
    if (v != kCutX && v != kCutY) return false;
  return true;
}

int CountOccurrences(const Term& s, const Term& pattern) {
  if (s.size() < pattern.size()) return 0;
  if (s == pattern) return 1;
  int n = 0;
  for (const Term& a : s.args()) n += CountOccurrences(a, pattern);
  return n;
}

// All generalizations of `s`: occurrences of `pattern` may become `image`;
// the variable `forced` must become `forced_image`; other variables are
// rejected.
std::vector<Term> Generalize(const Term& s, const Term& pattern,
                             const Term& image, const std::string& forced,
                             const Term& forced_image) {
  std::vector<Term> out;
  if (s == pattern) out.push_back(image);
  if (s.is_var()) {
    if (s.name() == forced) out.push_back(forced_image);
    return out;
  }
  std::vector<std::vector<Term>> options;
  for (const Term& a : s.args()) {
    options.push_back(Generalize(a, pattern, image, forced, forced_image));
    if (options.back().empty()) return out;
  }
  std::vector<size_t> idx(options.size(), 0);
  for (;;) {
    std::vector<Term> args;
    for (size_t i = 0; i < options.size(); ++i) args.push_back(options[i][idx[i]]);
    out.push_back(Term::App(s.name(), std::move(args)));
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

std::set<Literal> AntiInstances(const Literal& l, const Term& pattern,
                                const Term& image, const std::string& forced,
                                const Term& forced_image,
                                const Substitution& back) {
  int occ = 0;
  for (const Term& t : l.atom().terms()) occ += CountOccurrences(t, pattern);
  if (occ > 16)
    throw Error("more than 16 occurrences of " + pattern.text() + " in " +
                l.text());
  std::vector<std::vector<Term>> options;
  for (const Term& t : l.atom().terms()) {
    options.push_back(Generalize(t, pattern, image, forced, forced_image));
    if (options.back().empty()) return {};
  }
  std::set<Literal> out;
  std::vector<size_t> idx(options.size(), 0);
  for (;;) {
    std::vector<Term> args;
    for (size_t i = 0; i < options.size(); ++i) args.push_back(options[i][idx[i]]);
    Literal k(l.positive(), Formula::Atom(l.atom().pred(), std::move(args)));
    if (OverXY(k) && Substitute(k, back) == l) out.insert(k);
    size_t j = 0;
    while (j < idx.size() && ++idx[j] == options[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

Substitution AlphaT(const Term& t) { return {{kCutX, Alpha()}, {kCutY, t}}; }

Substitution RBeta(const Term& r, int j) {
  return {{kCutX, r}, {kCutY, Term::Var(BetaName(j))}};
}

// Instances of one clause against one leaf, shared by every candidate that
// contains the clause.
struct LeafClause {
  // Cl: x := r_i, y := b_i.
  std::vector<std::vector<Literal>> cl_inst;  // [i][literal]
  std::vector<char> cl_closes;                // T1 or T2 at position i
  std::vector<char> cl_self_dual;             // complementary pair inside
  // Sol: x := alpha, y := t_k.
  std::vector<std::vector<Literal>> sol_inst;   // [k][literal]
  std::vector<std::vector<char>> sol_closes;    // [k][literal]
  std::vector<std::vector<char>> in_a;          // [literal][i]
};

LeafClause Prepare(const Clause& c, const PartitionedLeaf& leaf,
                   const Sehs& sehs, SolCondition cond) {
  LeafClause d;
  const SchematicPi2Grammar& g = sehs.grammar;
  std::set<Literal> dual_n = DualSet(leaf.n), dual_b = DualSet(leaf.b);
  d.cl_inst.resize(g.m());
  d.cl_closes.assign(g.m(), 0);
  d.cl_self_dual.assign(g.m(), 0);
  for (int i = 0; i < g.m(); ++i) {
    const Term& r = g.r_terms[i];
    for (const Literal& l : c) {
      Literal li = Substitute(l, RBeta(r, i + 1));
      d.cl_inst[i].push_back(li);
      if (dual_n.count(Substitute(l, {{kCutX, r}})) || dual_b.count(li))
        d.cl_closes[i] = 1;
    }
    for (const Literal& l : d.cl_inst[i])
      for (const Literal& q : d.cl_inst[i])
        if (l == q.Dual()) d.cl_self_dual[i] = 1;
  }
  d.sol_inst.resize(g.p());
  d.sol_closes.resize(g.p());
  d.in_a.assign(c.size(), std::vector<char>(g.p(), 0));
  for (int k = 0; k < g.p(); ++k) {
    const Term& t = g.t_terms[k];
    for (size_t a = 0; a < c.size(); ++a) {
      Literal inst = Substitute(c[a], AlphaT(t));
      bool in_a = leaf.a.count(inst) > 0;
      d.in_a[a][k] = in_a;
      // T1': the literal substitution of y only.
      bool closes = leaf.n.count(Substitute(c[a], {{kCutY, t}})) > 0;
      if (cond == SolCondition::kPositional && in_a) closes = true;
      d.sol_inst[k].push_back(std::move(inst));
      d.sol_closes[k].push_back(closes);
    }
  }
  return d;
}

using LeafClauses = std::vector<const LeafClause*>;

// True when some m-tuple of clauses leaves the leaf open.
bool ClFindOpen(const LeafClauses& cs, size_t i, size_t m,
                std::set<Literal>& current) {
  if (i == m) return true;
  for (const LeafClause* d : cs) {
    if (d->cl_closes[i] || d->cl_self_dual[i]) continue;
    const std::vector<Literal>& lits = d->cl_inst[i];
    bool closed = false;
    for (const Literal& l : lits)
      if (current.count(l.Dual())) closed = true;
    if (closed) continue;
    std::vector<Literal> added;
    for (const Literal& l : lits)
      if (current.insert(l).second) added.push_back(l);
    bool open = ClFindOpen(cs, i + 1, m, current);
    for (const Literal& l : added) current.erase(l);
    if (open) return true;
  }
  return false;
}

struct SolSearch {
  const LeafClauses& cs;
  size_t p;
  SolCondition cond;
  std::set<Literal> current;
  std::vector<size_t> chosen;  // literal indices of the clause being filled

  bool TupleAllowed(const LeafClause& d) const {
    for (size_t i = 0; i < p; ++i) {
      bool all = true;
      for (size_t a : chosen)
        if (!d.in_a[a][i]) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  }

  // True when an open combined tuple exists from (clause c, position k) on.
  bool FindOpen(size_t c, size_t k) {
    if (c == cs.size()) return true;
    const LeafClause& d = *cs[c];
    if (k == p) {
      if (cond == SolCondition::kAllowedSet && TupleAllowed(d)) return false;
      std::vector<size_t> saved = std::move(chosen);
      chosen.clear();
      bool open = FindOpen(c + 1, 0);
      chosen = std::move(saved);
      return open;
    }
    for (size_t a = 0; a < d.sol_inst[k].size(); ++a) {
      if (d.sol_closes[k][a]) continue;
      const Literal& inst = d.sol_inst[k][a];
      if (current.count(inst.Dual())) continue;
      bool added = current.insert(inst).second;
      chosen.push_back(a);
      bool open = FindOpen(c, k + 1);
      chosen.pop_back();
      if (added) current.erase(inst);
      if (open) return true;
    }
    return false;
  }
};

bool ClOk(const std::vector<LeafClauses>& per_leaf, size_t m) {
  for (const LeafClauses& cs : per_leaf) {
    std::set<Literal> current;
    if (ClFindOpen(cs, 0, m, current)) return false;
  }
  return true;
}

bool SolOk(const std::vector<LeafClauses>& per_leaf, size_t p,
           SolCondition cond) {
  for (const LeafClauses& cs : per_leaf) {
    SolSearch s{cs, p, cond, {}, {}};
    if (s.FindOpen(0, 0)) return false;
  }
  return true;
}

// Prepared data for every clause of a starting set.
class Evaluator {
 public:
  Evaluator(const ClauseSet& start, const Sehs& sehs,
            const std::vector<PartitionedLeaf>& leaves, SolCondition cond,
            Exec exec)
      : m_(sehs.grammar.m()), p_(sehs.grammar.p()), cond_(cond) {
    data_.resize(leaves.size());
    for (auto& row : data_) row.resize(start.size());
    const long n = static_cast<long>(start.size());
    auto fill = [&](long c) {
      for (size_t l = 0; l < leaves.size(); ++l)
        data_[l][c] = Prepare(start[c], leaves[l], sehs, cond);
    };
    if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
      for (long c = 0; c < n; ++c) fill(c);
    } else {
      for (long c = 0; c < n; ++c) fill(c);
    }
  }

  bool Cl(const std::vector<int>& idx) const { return ClOk(Rows(idx), m_); }
  bool Sol(const std::vector<int>& idx) const {
    return SolOk(Rows(idx), p_, cond_);
  }

 private:
  std::vector<LeafClauses> Rows(const std::vector<int>& idx) const {
    std::vector<LeafClauses> rows(data_.size());
    for (size_t l = 0; l < data_.size(); ++l)
      for (int c : idx) rows[l].push_back(&data_[l][c]);
    return rows;
  }

  size_t m_, p_;
  SolCondition cond_;
  std::vector<std::vector<LeafClause>> data_;  // [leaf][clause]
};

// ---- Balancedness: pruned search through the maximal derivation. ----

struct Tagged {
  std::map<Formula, uint8_t> ante;
  std::map<Formula, uint8_t> succ;

  bool EndPair() const {
    for (const auto& [f, t] : ante) {
      if (!f.is_atom()) continue;
      auto it = succ.find(f);
      if (it != succ.end() && ((t | it->second) & kOriginEnd)) return true;
    }
    return false;
  }
  bool AnyPair() const {
    for (const auto& [f, t] : ante)
      if (f.is_atom() && succ.count(f)) return true;
    return false;
  }
};

bool BranchingOn(const Formula& f, bool left) {
  switch (f.conn()) {
    case Conn::kAnd: return !left;
    case Conn::kOr: return left;
    case Conn::kImp: return left;
    default: return false;
  }
}

std::vector<Tagged> Decompose(const Tagged& s, const Formula& f, bool left) {
  uint8_t tag = left ? s.ante.at(f) : s.succ.at(f);
  Tagged base = s;
  (left ? base.ante : base.succ).erase(f);
  auto add = [&](Tagged& t, const Formula& g, bool l) {
    (l ? t.ante : t.succ)[g] |= tag;
  };
  std::vector<Tagged> out;
  const Formula& a = f.sub(0);
  switch (f.conn()) {
    case Conn::kNot: {
      Tagged t = base;
      add(t, a, !left);
      out.push_back(t);
      break;
    }
    case Conn::kAnd:
    case Conn::kOr: {
      const Formula& b = f.sub(1);
      if (BranchingOn(f, left)) {
        Tagged t1 = base, t2 = base;
        add(t1, a, left);
        add(t2, b, left);
        out.push_back(t1);
        out.push_back(t2);
      } else {
        Tagged t = base;
        add(t, a, left);
        add(t, b, left);
        out.push_back(t);
      }
      break;
    }
    case Conn::kImp: {
      const Formula& b = f.sub(1);
      if (left) {
        Tagged t1 = base, t2 = base;
        add(t1, a, false);
        add(t2, b, true);
        out.push_back(t1);
        out.push_back(t2);
      } else {
        Tagged t = base;
        add(t, a, true);
        add(t, b, false);
        out.push_back(t);
      }
      break;
    }
    default:
      throw ShapeError("cannot decompose " + f.text());
  }
  return out;
}

bool AllLeavesBalanced(const Tagged& s) {
  if (s.EndPair()) return true;
  std::optional<std::pair<Formula, bool>> pick;
  for (const auto& [f, t] : s.ante)
    if (!f.is_atom() && !BranchingOn(f, true)) {
      pick = {{f, true}};
      break;
    }
  if (!pick)
    for (const auto& [f, t] : s.succ)
      if (!f.is_atom() && !BranchingOn(f, false)) {
        pick = {{f, false}};
        break;
      }
  if (!pick) {
    int best = -1;
    auto consider = [&](const Formula& f, bool left) {
      int score = 0;
      for (const Tagged& p : Decompose(s, f, left)) score += p.EndPair();
      if (score > best) {
        best = score;
        pick = {{f, left}};
      }
    };
    for (const auto& [f, t] : s.ante)
      if (!f.is_atom()) consider(f, true);
    for (const auto& [f, t] : s.succ)
      if (!f.is_atom()) consider(f, false);
  }
  if (!pick) {
    if (!s.AnyPair()) throw Error("open leaf: the candidate is not a solution");
    return false;
  }
  for (const Tagged& p : Decompose(s, pick->first, pick->second))
    if (!AllLeavesBalanced(p)) return false;
  return true;
}

struct Candidate {
  std::vector<int> idx;
  size_t literals;
};

// Non-empty subsets of `survivors` up to max_clauses, in search order.
std::vector<Candidate> Candidates(const ClauseSet& start,
                                  const std::vector<int>& survivors,
                                  const Caps& caps, bool& capped) {
  std::vector<Candidate> all;
  capped = false;
  for (size_t k = 1; k <= caps.max_clauses && k <= survivors.size(); ++k) {
    std::vector<Candidate> level;
    std::vector<size_t> pos(k);
    for (size_t i = 0; i < k; ++i) pos[i] = i;
    for (;;) {
      if (all.size() + level.size() >= caps.max_candidates) {
        capped = true;
        break;
      }
      Candidate c;
      c.literals = 0;
      for (size_t p : pos) {
        c.idx.push_back(survivors[p]);
        c.literals += start[survivors[p]].size();
      }
      level.push_back(std::move(c));
      size_t i = k;
      while (i > 0 && pos[i - 1] == survivors.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
    std::stable_sort(level.begin(), level.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.literals < b.literals;
                     });
    all.insert(all.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
    if (capped) break;
  }
  return all;
}

ClauseSet Materialize(const ClauseSet& start, const Candidate& c) {
  ClauseSet cs;
  for (int i : c.idx) cs.push_back(start[i]);
  return MakeClauseSet(std::move(cs));
}

// Orders clauses by size, then literals.
ClauseSet SearchOrder(ClauseSet start) {
  start = MakeClauseSet(std::move(start));
  std::stable_sort(start.begin(), start.end(),
                   [](const Clause& a, const Clause& b) {
                     return a.size() < b.size();
                   });
  return start;
}

template <typename Fn>
void ForEachIndex(long n, Exec exec, Fn fn) {
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) fn(i);
  } else {
    for (long i = 0; i < n; ++i) fn(i);
  }
}

}  // namespace

Sequent Sehs::Instantiate(const Formula& matrix) const {
  ExtendedHerbrandSequent eh{problem, grammar, matrix};
  return reduced.AddAnte(Formula::Imp(eh.Disjunction(), eh.Conjunction()));
}

Sequent Sehs::SplitLeft(const Formula& matrix) const {
  Sequent s = reduced;
  for (const Term& t : grammar.t_terms)
    s = s.AddSucc(Substitute(matrix, AlphaT(t)));
  return s;
}

Sequent Sehs::SplitRight(const Formula& matrix) const {
  Sequent s = reduced;
  for (int j = 1; j <= grammar.m(); ++j)
    s = s.AddAnte(Substitute(matrix, RBeta(grammar.r_terms[j - 1], j)));
  return s;
}

Sehs BuildSehs(const PrenexProblem& pb, const SchematicPi2Grammar& g,
               const std::set<Term>* terms) {
  ValidateProblem(pb);
  GrammarCheck gc = Validate(g, &pb.sig);
  if (!gc.ok()) throw VariableConditionError(gc.violations.front());
  if (terms && !Covers(g, *terms))
    throw CoverFailure("the grammar does not cover the Herbrand term set");
  Sehs s;
  s.problem = pb;
  s.grammar = g;
  std::vector<Formula> ante, succ;
  if (pb.xs.empty()) ante.push_back(pb.f);
  if (pb.ys.empty()) succ.push_back(pb.g);
  for (const TermTuple& u : g.f_tuples) ante.push_back(pb.FInstance(u));
  for (const TermTuple& v : g.g_tuples) succ.push_back(pb.GInstance(v));
  s.reduced = Sequent(std::move(ante), std::move(succ));
  std::set<Formula> atoms;
  for (const Formula& f : s.reduced.ante()) f.CollectAtoms(atoms);
  for (const Formula& f : s.reduced.succ()) f.CollectAtoms(atoms);
  for (const Formula& a : atoms) {
    std::set<std::string> vars = FreeVars(a);
    if (vars.count(kAlpha) && HasBeta(vars))
      throw MixedAtomError("atom mentions alpha and a beta: " + a.text());
  }
  return s;
}

std::vector<PartitionedLeaf> PartitionedDnta(const Sehs& sehs) {
  std::vector<PartitionedLeaf> out;
  for (const Sequent& leaf : NonTautologicalLeavesOf(sehs.reduced)) {
    PartitionedLeaf p;
    p.leaf = leaf;
    for (const Literal& l : LiteralNormalForm(leaf)) {
      std::set<std::string> vars = FreeVars(l);
      bool a = vars.count(kAlpha) > 0, b = HasBeta(vars);
      if (a && b) throw MixedAtomError("mixed literal " + l.text());
      (a ? p.a : b ? p.b : p.n).insert(l);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::set<Literal> AntiInstancesT(const Literal& l, const Term& t) {
  return AntiInstances(l, t, Y(), kAlpha, X(), AlphaT(t));
}

std::set<Literal> AntiInstancesR(const Literal& l, const Term& r, int j) {
  return AntiInstances(l, r, X(), BetaName(j), Y(), RBeta(r, j));
}

std::set<Literal> APrime(const PartitionedLeaf& leaf, const Sehs& sehs) {
  std::set<Literal> out;
  for (const Literal& l : leaf.a)
    for (const Term& t : sehs.grammar.t_terms) {
      std::set<Literal> k = AntiInstancesT(l, t);
      out.insert(k.begin(), k.end());
    }
  return out;
}

bool InAllowed(const PartitionedLeaf& leaf, const std::set<Literal>& m,
               const Sehs& sehs) {
  if (m.empty()) return false;
  for (const Term& t : sehs.grammar.t_terms) {
    bool all = true;
    for (const Literal& l : m)
      if (!leaf.a.count(Substitute(l, AlphaT(t)))) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

bool ClAccepts(const ClauseSet& cs, const Sehs& sehs,
               const std::vector<PartitionedLeaf>& leaves) {
  std::vector<int> idx(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) idx[i] = static_cast<int>(i);
  return Evaluator(cs, sehs, leaves, SolCondition::kPositional, Exec::kSerial)
      .Cl(idx);
}

bool SolAccepts(const ClauseSet& cs, const Sehs& sehs,
                const std::vector<PartitionedLeaf>& leaves,
                SolCondition cond) {
  std::vector<int> idx(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) idx[i] = static_cast<int>(i);
  return Evaluator(cs, sehs, leaves, cond, Exec::kSerial).Sol(idx);
}

void ValidateStartingSet(const ClauseSet& start) {
  for (const Clause& c : start) {
    if (c.empty()) throw ShapeError("empty clause in starting set");
    for (const Literal& l : c)
      if (!OverXY(l))
        throw VariableConditionError("starting-set literal " + l.text() +
                                     " has variables outside {x, y}");
  }
}

FilterResult ClFilter(const ClauseSet& start_in, const Sehs& sehs,
                      const Caps& caps, Exec exec) {
  ValidateStartingSet(start_in);
  ClauseSet start = SearchOrder(start_in);
  std::vector<PartitionedLeaf> leaves = PartitionedDnta(sehs);
  Evaluator ev(start, sehs, leaves, SolCondition::kPositional, exec);
  std::vector<char> single(start.size(), 0);
  ForEachIndex(static_cast<long>(start.size()), exec, [&](long i) {
    single[i] = ev.Cl({static_cast<int>(i)});
  });
  std::vector<int> survivors;
  for (size_t i = 0; i < start.size(); ++i)
    if (single[i]) survivors.push_back(static_cast<int>(i));
  FilterResult r;
  std::vector<Candidate> cands = Candidates(start, survivors, caps, r.cap_exceeded);
  std::vector<char> ok(cands.size(), 0);
  ForEachIndex(static_cast<long>(cands.size()), exec, [&](long i) {
    ok[i] = cands[i].idx.size() == 1 || ev.Cl(cands[i].idx);
  });
  r.examined = cands.size();
  for (size_t i = 0; i < cands.size(); ++i)
    if (ok[i]) r.sets.push_back(Materialize(start, cands[i]));
  return r;
}

FilterResult SolFilter(const std::vector<ClauseSet>& cl, const Sehs& sehs,
                       SolCondition cond, Exec exec) {
  std::vector<PartitionedLeaf> leaves = PartitionedDnta(sehs);
  std::map<Clause, int> index;
  ClauseSet distinct;
  std::vector<std::vector<int>> idx(cl.size());
  for (size_t i = 0; i < cl.size(); ++i)
    for (const Clause& c : cl[i]) {
      auto [it, fresh] = index.emplace(c, static_cast<int>(distinct.size()));
      if (fresh) distinct.push_back(c);
      idx[i].push_back(it->second);
    }
  Evaluator ev(distinct, sehs, leaves, cond, exec);
  std::vector<char> ok(cl.size(), 0);
  ForEachIndex(static_cast<long>(cl.size()), exec, [&](long i) {
    ok[i] = !idx[i].empty() && ev.Sol(idx[i]);
  });
  FilterResult r;
  r.examined = cl.size();
  for (size_t i = 0; i < cl.size(); ++i)
    if (ok[i]) r.sets.push_back(cl[i]);
  return r;
}

std::set<Literal> NaivePool(const Sehs& sehs) {
  std::set<Literal> pool;
  for (const PartitionedLeaf& leaf : PartitionedDnta(sehs)) {
    for (const auto* part : {&leaf.a, &leaf.n})
      for (const Literal& l : *part)
        for (const Term& t : sehs.grammar.t_terms) {
          std::set<Literal> k = AntiInstancesT(l, t);
          pool.insert(k.begin(), k.end());
        }
    for (const auto* part : {&leaf.b, &leaf.n})
      for (const Literal& l : *part)
        for (int j = 1; j <= sehs.grammar.m(); ++j) {
          std::set<Literal> k =
              AntiInstancesR(l.Dual(), sehs.grammar.r_terms[j - 1], j);
          pool.insert(k.begin(), k.end());
        }
  }
  return pool;
}

GStarPool GStarPoolOf(const Sehs& sehs) {
  GStarSystem sys = GStarOf(sehs.grammar);
  std::vector<PartitionedLeaf> leaves = PartitionedDnta(sehs);
  std::map<Literal, std::set<Literal>> reach;
  auto reachable = [&](const Literal& l) -> const std::set<Literal>& {
    auto it = reach.find(l);
    if (it == reach.end()) it = reach.emplace(l, ReachableLiterals(l, sys)).first;
    return it->second;
  };
  GStarPool out;
  for (const PartitionedLeaf& s : leaves) {
    bool has_partner = false;
    for (const PartitionedLeaf& s2 : leaves) {
      for (const auto* lp : {&s.a, &s.n})
        for (const Literal& l : *lp)
          for (const auto* qp : {&s2.b, &s2.n})
            for (const Literal& q : *qp) {
              const std::set<Literal>& rl = reachable(l);
              for (const Literal& k : reachable(q))
                if (rl.count(k.Dual())) {
                  out.pool.insert(k.Dual());
                  has_partner = true;
                }
            }
    }
    if (!has_partner) out.unifiable = false;
  }
  return out;
}

ClauseSet ClausesOf(const std::set<Literal>& pool, size_t max_size) {
  std::vector<Literal> lits(pool.begin(), pool.end());
  ClauseSet out;
  for (size_t k = 1; k <= max_size && k <= lits.size(); ++k) {
    ClauseSet level;
    std::vector<size_t> pos(k);
    for (size_t i = 0; i < k; ++i) pos[i] = i;
    for (;;) {
      Clause c;
      for (size_t p : pos) c.push_back(lits[p]);
      level.push_back(MakeClause(std::move(c)));
      size_t i = k;
      while (i > 0 && pos[i - 1] == lits.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

ClauseSet ParseStartingSet(const std::string& text, const Signature& sig) {
  ParseContext ctx;
  ctx.sig = &sig;
  ctx.reserved_are_variables = false;
  ctx.variables = {kCutX, kCutY};
  std::map<int, Clause> lines;
  for (const SExpr& e : ReadSExprs(text))
    lines[e.line].push_back(ParseLiteral(e, ctx));
  ClauseSet out;
  for (auto& [line, c] : lines) out.push_back(MakeClause(std::move(c)));
  if (out.empty()) throw ParseError("starting set has no clauses");
  return MakeClauseSet(std::move(out));
}

bool VerifySolution(const Sehs& sehs, const ClauseSet& c) {
  ValidateStartingSet(c);
  Formula e = DnfOf(c);
  return IsTautology(sehs.SplitLeft(e)) && IsTautology(sehs.SplitRight(e));
}

bool IsBalanced(const Sehs& sehs, const ClauseSet& c) {
  if (!VerifySolution(sehs, c)) throw Error("not a solution: " + ClauseSetText(c));
  Sequent full = sehs.Instantiate(DnfOf(c));
  ExtendedHerbrandSequent eh{sehs.problem, sehs.grammar, DnfOf(c)};
  Formula block = Formula::Imp(eh.Disjunction(), eh.Conjunction());
  Tagged root;
  for (const Formula& f : full.ante()) root.ante[f] = kOriginEnd;
  for (const Formula& f : full.succ()) root.succ[f] = kOriginEnd;
  root.ante[block] = sehs.reduced.InAnte(block) ? kOriginEnd | kOriginCut
                                                : kOriginCut;
  return AllLeavesBalanced(root);
}

const char* StatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved: return "solved";
    case SolveStatus::kNoSolution: return "no-solution-under-pool";
    case SolveStatus::kCapExceeded: return "cap-exceeded";
  }
  return "?";
}

SolveOutcome IntroduceCut(const PrenexProblem& pb,
                          const SchematicPi2Grammar& g,
                          const SolveOptions& opt) {
  SolveOutcome out;
  SolutionReport& rep = out.report;
  Sehs sehs = BuildSehs(pb, g);
  std::vector<PartitionedLeaf> leaves = PartitionedDnta(sehs);
  rep.leaves = leaves.size();
  ClauseSet start;
  switch (opt.pool) {
    case PoolKind::kGStar: {
      GStarPool gp = GStarPoolOf(sehs);
      rep.pool_size = gp.pool.size();
      rep.unifiable = gp.unifiable;
      start = ClausesOf(gp.pool, opt.caps.max_clause_size);
      break;
    }
    case PoolKind::kNaive: {
      std::set<Literal> pool = NaivePool(sehs);
      rep.pool_size = pool.size();
      start = ClausesOf(pool, opt.caps.max_clause_size);
      break;
    }
    case PoolKind::kFile:
      start = opt.file_start;
      rep.pool_size = 0;
      break;
  }
  ValidateStartingSet(start);
  start = SearchOrder(start);
  rep.start_clauses = start.size();

  Evaluator ev(start, sehs, leaves, opt.condition, opt.exec);
  std::vector<char> single(start.size(), 0);
  ForEachIndex(static_cast<long>(start.size()), opt.exec, [&](long i) {
    single[i] = ev.Cl({static_cast<int>(i)});
  });
  std::vector<int> survivors;
  for (size_t i = 0; i < start.size(); ++i)
    if (single[i]) survivors.push_back(static_cast<int>(i));
  std::vector<Candidate> cands =
      Candidates(start, survivors, opt.caps, rep.cap_hit);

  const size_t chunk = 256;
  for (size_t begin = 0; begin < cands.size(); begin += chunk) {
    size_t end = std::min(cands.size(), begin + chunk);
    std::vector<char> ok(end - begin, 0);
    ForEachIndex(static_cast<long>(end - begin), opt.exec, [&](long i) {
      const std::vector<int>& idx = cands[begin + i].idx;
      ok[i] = ev.Cl(idx) && ev.Sol(idx);
    });
    rep.candidates = end;
    for (size_t i = 0; i < ok.size(); ++i) {
      if (!ok[i]) continue;
      ClauseSet cs = Materialize(start, cands[begin + i]);
      if (!VerifySolution(sehs, cs))
        throw Error("filter accepted a non-solution: " + ClauseSetText(cs));
      rep.solutions.push_back(cs);
      if (!opt.all) break;
    }
    if (!rep.solutions.empty() && !opt.all) break;
  }
  if (rep.solutions.empty()) {
    rep.status = rep.cap_hit ? SolveStatus::kCapExceeded : SolveStatus::kNoSolution;
    return out;
  }
  rep.status = SolveStatus::kSolved;
  rep.verified = true;
  const ClauseSet& best = rep.solutions.front();
  ExtendedHerbrandSequent eh{pb, g, DnfOf(best)};
  rep.cut_formula = eh.CutFormula();
  EhResult eb = EhBuild(eh);
  rep.eh_complexity = eb.complexity;
  rep.eh_shared_complexity = eb.shared_complexity;
  rep.balanced = IsBalanced(sehs, best);
  Proof proof = ProofFromEh(eh);
  CheckReport check = CheckProof(proof);
  rep.proof_ok = check.ok;
  rep.check_reason = check.reason;
  rep.proof_complexity = Complexities(proof);
  out.proof = std::move(proof);
  return out;
}

}  // namespace pi2cut
