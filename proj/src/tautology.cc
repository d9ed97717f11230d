#include "pi2cut/tautology.h"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "pi2cut/error.h"

namespace pi2cut {

void SatSolver::AddClause(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (size_t i = 0; i + 1 < lits.size(); ++i)
    for (size_t j = i + 1; j < lits.size(); ++j)
      if (lits[i] == -lits[j]) return;  // always satisfied
  if (lits.empty()) trivially_unsat_ = true;
  clauses_.push_back(std::move(lits));
}

bool SatSolver::Solve() {
  if (trivially_unsat_) return false;
  const int n = num_vars_;
  std::vector<int> val(n + 1, 0), level(n + 1, 0), reason(n + 1, -1);
  std::vector<char> phase(n + 1, 0), seen(n + 1, 0);
  std::vector<double> activity(n + 1, 0.0);
  double var_inc = 1.0;
  auto value = [&](int lit) {
    int v = val[std::abs(lit)];
    return lit > 0 ? v : -v;
  };
  auto idx = [](int lit) { return 2 * std::abs(lit) + (lit < 0 ? 1 : 0); };
  std::vector<std::vector<int>> watches(2 * (n + 1));
  std::vector<int> trail, trail_lim;
  std::vector<std::vector<int>> cls = clauses_;
  auto level_now = [&] { return static_cast<int>(trail_lim.size()); };
  auto enqueue = [&](int lit, int from) {
    int v = value(lit);
    if (v != 0) return v > 0;
    val[std::abs(lit)] = lit > 0 ? 1 : -1;
    level[std::abs(lit)] = level_now();
    reason[std::abs(lit)] = from;
    trail.push_back(lit);
    return true;
  };
  auto watch = [&](int ci) {
    watches[idx(cls[ci][0])].push_back(ci);
    watches[idx(cls[ci][1])].push_back(ci);
  };
  std::vector<int> units;
  for (size_t ci = 0; ci < cls.size(); ++ci) {
    if (cls[ci].size() == 1)
      units.push_back(cls[ci][0]);
    else
      watch(static_cast<int>(ci));
  }
  size_t qhead = 0;
  // Returns the index of a conflicting clause, or -1.
  auto propagate = [&]() {
    while (qhead < trail.size()) {
      int false_lit = -trail[qhead++];
      std::vector<int>& ws = watches[idx(false_lit)];
      size_t i = 0, j = 0;
      int conflict = -1;
      while (i < ws.size()) {
        int ci = ws[i];
        std::vector<int>& c = cls[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) > 0) {
          ws[j++] = ws[i++];
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watches[idx(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) {
          ++i;
          continue;
        }
        ws[j++] = ws[i++];
        if (!enqueue(c[0], ci)) {
          conflict = ci;
          while (i < ws.size()) ws[j++] = ws[i++];
        }
      }
      ws.resize(j);
      if (conflict >= 0) return conflict;
    }
    return -1;
  };
  auto cancel_until = [&](int lvl) {
    if (level_now() <= lvl) return;
    size_t keep = trail_lim[lvl];
    while (trail.size() > keep) {
      int v = std::abs(trail.back());
      phase[v] = trail.back() > 0;
      val[v] = 0;
      reason[v] = -1;
      trail.pop_back();
    }
    trail_lim.resize(lvl);
    qhead = keep;
  };
  auto bump = [&](int v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
  };

  for (int u : units)
    if (!enqueue(u, -1)) return false;
  if (propagate() >= 0) return false;

  long conflicts = 0, restart_at = 100;
  for (;;) {
    int confl = propagate();
    if (confl >= 0) {
      ++conflicts;
      if (level_now() == 0) return false;
      std::vector<int> learnt{0};
      int path = 0, p = 0;
      size_t t = trail.size();
      do {
        for (int q : cls[confl]) {
          if (q == p) continue;
          int v = std::abs(q);
          if (seen[v] || level[v] == 0) continue;
          seen[v] = 1;
          bump(v);
          if (level[v] >= level_now())
            ++path;
          else
            learnt.push_back(q);
        }
        while (!seen[std::abs(trail[--t])]) {
        }
        p = trail[t];
        confl = reason[std::abs(p)];
        seen[std::abs(p)] = 0;
        --path;
      } while (path > 0);
      learnt[0] = -p;
      int back = 0;
      for (size_t k = 1; k < learnt.size(); ++k) {
        seen[std::abs(learnt[k])] = 0;
        if (level[std::abs(learnt[k])] > level[std::abs(learnt[1])])
          std::swap(learnt[1], learnt[k]);
      }
      if (learnt.size() > 1) back = level[std::abs(learnt[1])];
      var_inc /= 0.95;
      cancel_until(back);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        cls.push_back(learnt);
        int ci = static_cast<int>(cls.size()) - 1;
        watch(ci);
        enqueue(learnt[0], ci);
      }
      continue;
    }
    if (conflicts >= restart_at) {
      restart_at += restart_at / 2;
      cancel_until(0);
      continue;
    }
    int best = 0;
    for (int v = 1; v <= n; ++v)
      if (val[v] == 0 && (best == 0 || activity[v] > activity[best])) best = v;
    if (best == 0) {
      model_ = val;
      return true;
    }
    trail_lim.push_back(static_cast<int>(trail.size()));
    enqueue(phase[best] ? best : -best, -1);
  }
}

namespace {

class Encoder {
 public:
  explicit Encoder(SatSolver& sat) : sat_(sat) {}

  int Encode(const Formula& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    int lit = 0;
    switch (f.conn()) {
      case Conn::kAtom:
        lit = sat_.NewVar();
        break;
      case Conn::kNot:
        lit = -Encode(f.sub(0));
        break;
      case Conn::kAnd: {
        int a = Encode(f.sub(0)), b = Encode(f.sub(1));
        lit = sat_.NewVar();
        sat_.AddClause({-lit, a});
        sat_.AddClause({-lit, b});
        sat_.AddClause({lit, -a, -b});
        break;
      }
      case Conn::kOr:
      case Conn::kImp: {
        int a = Encode(f.sub(0)), b = Encode(f.sub(1));
        if (f.conn() == Conn::kImp) a = -a;
        lit = sat_.NewVar();
        sat_.AddClause({-lit, a, b});
        sat_.AddClause({lit, -a});
        sat_.AddClause({lit, -b});
        break;
      }
      default:
        throw ShapeError("quantifier in propositional check: " + f.text());
    }
    memo_.emplace(f, lit);
    return lit;
  }

  // Atoms get the low variable numbers so decisions branch on them first.
  void EncodeAtoms(const Formula& f) {
    std::set<Formula> atoms;
    f.CollectAtoms(atoms);
    for (const Formula& a : atoms)
      if (!memo_.count(a)) memo_.emplace(a, sat_.NewVar());
  }

 private:
  SatSolver& sat_;
  std::unordered_map<Formula, int, FormulaHash> memo_;
};

}  // namespace

bool IsTautology(const std::vector<Formula>& ante,
                 const std::vector<Formula>& succ) {
  for (const Formula& f : ante)
    if (!f.quantifier_free()) throw ShapeError("quantifier in " + f.text());
  for (const Formula& f : succ)
    if (!f.quantifier_free()) throw ShapeError("quantifier in " + f.text());
  for (const Formula& a : ante)
    if (a.is_atom())
      for (const Formula& b : succ)
        if (a == b) return true;
  SatSolver sat;
  Encoder enc(sat);
  for (const Formula& f : ante) enc.EncodeAtoms(f);
  for (const Formula& f : succ) enc.EncodeAtoms(f);
  for (const Formula& f : ante) sat.AddClause({enc.Encode(f)});
  for (const Formula& f : succ) sat.AddClause({-enc.Encode(f)});
  return !sat.Solve();
}

bool IsTautology(const Sequent& s) { return IsTautology(s.ante(), s.succ()); }

std::vector<char> TautologyBatch(const std::vector<Sequent>& seqs,
                                 bool parallel) {
  std::vector<char> out(seqs.size(), 0);
  const long n = static_cast<long>(seqs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[i] = IsTautology(seqs[i]);
  } else {
    for (long i = 0; i < n; ++i) out[i] = IsTautology(seqs[i]);
  }
  return out;
}

}  // namespace pi2cut
