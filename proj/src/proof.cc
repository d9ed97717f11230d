#include "pi2cut/proof.h"

#include <set>
#include <sstream>

#include "pi2cut/error.h"
#include "pi2cut/sexpr.h"

namespace pi2cut {

namespace {

std::string Join(const std::string& path, size_t i) {
  return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

class Checker {
 public:
  explicit Checker(const Signature& sig) : sig_(sig) {}

  CheckReport Run(const Derivation& root) {
    try {
      for (const Formula& f : root.sequent.ante()) CheckFormula(f, sig_);
      for (const Formula& f : root.sequent.succ()) CheckFormula(f, sig_);
    } catch (const Error& e) {
      return Fail("", std::string("end-sequent: ") + e.what());
    }
    Visit(root, "");
    return report_;
  }

 private:
  CheckReport Fail(const std::string& path, const std::string& reason) {
    if (report_.ok) {
      report_.ok = false;
      report_.path = path;
      report_.reason = reason;
    }
    return report_;
  }

  void Visit(const Derivation& d, const std::string& path) {
    if (!report_.ok) return;
    const char* name = RuleName(d.rule);
    if (d.rule == Rule::kNonTautLeaf) {
      Fail(path, "open leaf " + d.sequent.text());
      return;
    }
    if (d.rule == Rule::kAxiom) {
      if (!d.premises.empty()) {
        Fail(path, "axiom with premises");
      } else if (!d.sequent.IsAxiom()) {
        Fail(path, "axiom without a shared atom: " + d.sequent.text());
      }
      return;
    }
    if (d.rule == Rule::kCut && d.principal) {
      try {
        CheckFormula(*d.principal, sig_);
      } catch (const Error& e) {
        Fail(path, std::string("cut formula: ") + e.what());
        return;
      }
    }
    if (IsWeak(d.rule) && d.term) {
      try {
        CheckTerm(*d.term, sig_);
      } catch (const Error& e) {
        Fail(path, std::string("witness term: ") + e.what());
        return;
      }
    }
    if (IsStrong(d.rule) && d.term) {
      const std::string& v = d.term->is_var() ? d.term->name() : "";
      if (v.empty()) {
        Fail(path, "eigenvariable is not a variable");
        return;
      }
      if (SequentHasVar(d.sequent, v)) {
        Fail(path, "eigenvariable violation: " + v + " occurs in conclusion");
        return;
      }
      if (!eigen_.insert(v).second) {
        Fail(path, "eigenvariable violation: " + v + " used twice");
        return;
      }
    }
    std::vector<Sequent> expected;
    try {
      expected = RulePremises(d.sequent, d.rule, d.principal, d.term);
    } catch (const Error& e) {
      Fail(path, std::string(name) + ": " + e.what());
      return;
    }
    if (expected.size() != d.premises.size()) {
      Fail(path, std::string(name) + ": expected " +
                     std::to_string(expected.size()) + " premises, found " +
                     std::to_string(d.premises.size()));
      return;
    }
    for (size_t i = 0; i < expected.size(); ++i) {
      if (!(expected[i] == d.premises[i].sequent)) {
        Fail(Join(path, i), std::string(name) + ": premise mismatch, expected " +
                                expected[i].text() + " found " +
                                d.premises[i].sequent.text());
        return;
      }
    }
    for (size_t i = 0; i < d.premises.size(); ++i)
      Visit(d.premises[i], Join(path, i));
  }

  static bool SequentHasVar(const Sequent& s, const std::string& v) {
    for (const Formula& f : s.ante())
      if (f.ContainsVar(v)) return true;
    for (const Formula& f : s.succ())
      if (f.ContainsVar(v)) return true;
    return false;
  }

  const Signature& sig_;
  std::set<std::string> eigen_;
  CheckReport report_;
};

void Count(const Derivation& d, Complexity& c) {
  if (IsWeak(d.rule)) ++c.q;
  if (!d.premises.empty()) ++c.l;
  c.s += d.sequent.symbols();
  for (const Derivation& p : d.premises) Count(p, c);
}

void PrintFormulas(std::ostringstream& out, const char* head,
                   const std::vector<Formula>& fs) {
  out << "(" << head;
  for (const Formula& f : fs) out << " " << f.text();
  out << ")";
}

void PrintNode(std::ostringstream& out, const Derivation& d, int indent) {
  std::string pad(indent, ' ');
  out << pad << "(node (rule " << RuleName(d.rule) << ")\n";
  out << pad << "  (sequent ";
  PrintFormulas(out, "ante", d.sequent.ante());
  out << " ";
  PrintFormulas(out, "succ", d.sequent.succ());
  out << ")";
  if (d.principal) out << "\n" << pad << "  (principal " << d.principal->text() << ")";
  if (d.term) {
    out << "\n" << pad << "  (" << (IsStrong(d.rule) ? "eigen " : "term ")
        << d.term->text() << ")";
  }
  if (!d.premises.empty()) {
    out << "\n" << pad << "  (premises";
    for (const Derivation& p : d.premises) {
      out << "\n";
      PrintNode(out, p, indent + 4);
    }
    out << ")";
  }
  out << ")";
}

std::vector<Formula> ParseFormulaList(const SExpr& e, const char* head,
                                      const ParseContext& ctx) {
  if (!e.HasHead(head)) FailAt(e, std::string("expected (") + head + " ...)");
  std::vector<Formula> out;
  for (size_t i = 1; i < e.items.size(); ++i)
    out.push_back(ParseFormula(e.items[i], ctx));
  return out;
}

Derivation ParseNode(const SExpr& e, const ParseContext& ctx) {
  if (!e.HasHead("node")) FailAt(e, "expected (node ...)");
  Derivation d;
  bool have_rule = false, have_seq = false;
  for (size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& f = e.items[i];
    if (f.HasHead("rule") && f.items.size() == 2 && !f.items[1].is_list) {
      auto r = RuleFromName(f.items[1].atom);
      if (!r) FailAt(f, "unknown rule " + f.items[1].atom);
      d.rule = *r;
      have_rule = true;
    } else if (f.HasHead("sequent") && f.items.size() == 3) {
      d.sequent = Sequent(ParseFormulaList(f.items[1], "ante", ctx),
                          ParseFormulaList(f.items[2], "succ", ctx));
      have_seq = true;
    } else if (f.HasHead("principal") && f.items.size() == 2) {
      d.principal = ParseFormula(f.items[1], ctx);
    } else if ((f.HasHead("term") || f.HasHead("eigen")) &&
               f.items.size() == 2) {
      d.term = ParseTerm(f.items[1], ctx);
    } else if (f.HasHead("premises")) {
      for (size_t k = 1; k < f.items.size(); ++k)
        d.premises.push_back(ParseNode(f.items[k], ctx));
    } else {
      FailAt(f, "unexpected field in node");
    }
  }
  if (!have_rule || !have_seq) FailAt(e, "node needs rule and sequent");
  return d;
}

}  // namespace

CheckReport CheckProof(const Proof& p) { return Checker(p.sig).Run(p.root); }

Complexity Complexities(const Proof& p) {
  Complexity c;
  Count(p.root, c);
  c.s += c.l;
  return c;
}

size_t CountRule(const Derivation& d, Rule r) {
  size_t n = d.rule == r ? 1 : 0;
  for (const Derivation& p : d.premises) n += CountRule(p, r);
  return n;
}

const Derivation& NodeAt(const Derivation& root, const std::string& path) {
  const Derivation* d = &root;
  std::istringstream in(path);
  std::string part;
  while (std::getline(in, part, '.')) {
    if (part.empty()) continue;
    size_t i = std::stoul(part);
    if (i >= d->premises.size()) throw Error("no node at path " + path);
    d = &d->premises[i];
  }
  return *d;
}

uint8_t Ancestry(const Proof& p, const std::string& path, bool left,
                 const Formula& f) {
  Derivation copy = p.root;
  AnnotateOrigins(copy);
  const Derivation& d = NodeAt(copy, path);
  const std::vector<Formula>& side = left ? d.sequent.ante() : d.sequent.succ();
  const std::vector<uint8_t>& tags = left ? d.ante_origin : d.succ_origin;
  for (size_t i = 0; i < side.size(); ++i)
    if (side[i] == f) return tags[i];
  throw Error("no occurrence of " + f.text() + " at path " + path);
}

std::string PrintProof(const Proof& p) {
  std::ostringstream out;
  out << "(proof\n  (signature (functions";
  for (const auto& [f, a] : p.sig.functions()) out << " (" << f << " " << a << ")";
  out << ") (predicates";
  for (const auto& [f, a] : p.sig.predicates())
    out << " (" << f << " " << a << ")";
  out << "))\n";
  PrintNode(out, p.root, 2);
  out << ")\n";
  return out.str();
}

Proof ParseProof(const std::string& text) {
  SExpr e = ReadSingleSExpr(text);
  if (!e.HasHead("proof") || e.items.size() != 3)
    FailAt(e, "expected (proof (signature ...) (node ...))");
  Proof p;
  const SExpr& sig = e.items[1];
  if (!sig.HasHead("signature")) FailAt(sig, "expected (signature ...)");
  for (size_t i = 1; i < sig.items.size(); ++i) {
    const SExpr& block = sig.items[i];
    bool fun = block.HasHead("functions");
    if (!fun && !block.HasHead("predicates"))
      FailAt(block, "expected functions or predicates");
    for (size_t k = 1; k < block.items.size(); ++k) {
      const SExpr& d = block.items[k];
      if (!d.is_list || d.items.size() != 2 || d.items[0].is_list ||
          d.items[1].is_list)
        FailAt(d, "expected (symbol arity)");
      int ar = 0;
      try {
        ar = std::stoi(d.items[1].atom);
      } catch (...) {
        FailAt(d.items[1], "bad arity");
      }
      try {
        if (fun) p.sig.AddFunction(d.items[0].atom, ar);
        else p.sig.AddPredicate(d.items[0].atom, ar);
      } catch (const Error& err) {
        FailAt(d, err.what());
      }
    }
  }
  ParseContext ctx;
  ctx.sig = &p.sig;
  ctx.unknown_are_variables = true;
  p.root = ParseNode(e.items[2], ctx);
  return p;
}

}  // namespace pi2cut
