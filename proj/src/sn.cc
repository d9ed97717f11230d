#include "pi2cut/sn.h"

#include "pi2cut/error.h"

namespace pi2cut {

namespace {

std::string Fi(int i) { return "f" + std::to_string(i); }

Term Ap(const std::string& f, const Term& t) { return Term::App(f, {t}); }

Formula P(const Term& a, const Term& b) { return Formula::Atom("P", {a, b}); }

Term V(const std::string& name) { return Term::Var(name); }

size_t Pow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

SnInstance GenerateSn(int n) {
  if (n < 2) throw Error("S_n needs n >= 2");
  SnInstance sn;
  sn.n = n;
  PrenexProblem& pb = sn.file.problem;
  pb.sig.AddFunction("c", 0);
  pb.sig.AddFunction("f", 1);
  pb.sig.AddFunction("g", 1);
  for (int i = 1; i <= n; ++i) pb.sig.AddFunction(Fi(i), 1);
  pb.sig.AddPredicate("P", 2);
  pb.xs = {"x1", "x2", "x3"};
  for (int j = 1; j <= n + 2; ++j) pb.ys.push_back("y" + std::to_string(j));

  Term x1 = V("x1"), x2 = V("x2"), x3 = V("x3");
  std::vector<Formula> a;
  for (int i = 1; i <= n; ++i) a.push_back(P(x1, Ap(Fi(i), x1)));
  Formula b = Formula::Imp(P(x2, x3), P(x2, Ap("f", x3)));
  pb.f = Formula::And(Formula::OrAll(a), b);

  auto y = [](int j) { return V("y" + std::to_string(j)); };
  std::vector<Formula> chain{P(y(1), Ap("f", y(2)))};
  for (int k = 2; k < n; ++k)
    chain.push_back(P(Ap("f", y(k)), Ap("f", y(k + 1))));
  chain.push_back(Formula::Not(P(y(1), Ap("g", y(n)))));
  pb.g = Formula::Or(Formula::AndAll(chain), P(y(n + 1), Ap("g", y(n + 2))));

  SchematicPi2Grammar& gr = sn.file.grammar;
  Term alpha = V(kAlpha), c = Term::App("c");
  gr.r_terms.push_back(c);
  for (int j = 1; j <= n - 2; ++j) gr.r_terms.push_back(Ap("f", V(BetaName(j))));
  for (int i = 1; i <= n; ++i) {
    gr.t_terms.push_back(Ap(Fi(i), alpha));
    gr.f_tuples.push_back({alpha, alpha, Ap(Fi(i), alpha)});
  }
  TermTuple gt{c};
  for (int j = 1; j <= n - 1; ++j) gt.push_back(V(BetaName(j)));
  gt.push_back(c);
  gt.push_back(V(BetaName(n - 1)));
  gr.g_tuples.push_back(gt);
  return sn;
}

CutFreeCount MinimalCutFreeInstances(int n) {
  if (n < 2) throw Error("S_n needs n >= 2");
  if (n > 6) throw Error("cut-free instance set too large for n > 6");
  SnInstance sn = GenerateSn(n);
  CutFreeCount out;
  Term c = Term::App("c");

  // Every choice h_1..h_{n-1} of f_i gives the chain t_1 = c, t_2 = h_1 c,
  // t_k = h_{k-1} f t_{k-1}.
  std::vector<TermTuple> f_tuples;
  std::set<TermTuple> seen_f;
  auto add_x = [&](const Term& s) {
    for (int i = 1; i <= n; ++i) {
      TermTuple u{s, s, Ap(Fi(i), s)};
      if (seen_f.insert(u).second) f_tuples.push_back(u);
    }
  };
  std::vector<int> h(n - 1, 1);
  for (;;) {
    std::vector<Term> t{c};
    add_x(c);
    t.push_back(Ap(Fi(h[0]), c));
    for (int k = 3; k <= n; ++k) {
      Term prev = Ap("f", t.back());
      add_x(prev);
      t.push_back(Ap(Fi(h[k - 2]), prev));
    }
    TermTuple v(t.begin(), t.end());
    v.push_back(c);
    v.push_back(t.back());
    out.instances.g_tuples.push_back(v);
    size_t k = 0;
    while (k < h.size() && ++h[k] > n) h[k++] = 1;
    if (k == h.size()) break;
  }
  out.instances.f_tuples = f_tuples;
  HerbrandResult hr = HerbrandCheck(sn.file.problem, out.instances);
  out.valid = hr.valid;
  out.sharp = hr.complexity;
  out.f_sharp = SharpCount(out.instances.f_tuples);
  out.g_sharp = SharpCount(out.instances.g_tuples);
  out.n_pow_n = Pow(n, n);
  out.closed_form = Pow(n, n) + 6 * Pow(n, n - 1) + 5;
  return out;
}

}  // namespace pi2cut
