#include "pi2cut/problem.h"

#include <fstream>
#include <map>
#include <sstream>

#include "pi2cut/error.h"
#include "pi2cut/sexpr.h"

namespace pi2cut {

namespace {

const SExpr& Section(const std::map<std::string, const SExpr*>& sections,
                     const SExpr& top, const std::string& name) {
  auto it = sections.find(name);
  if (it == sections.end()) FailAt(top, "missing (" + name + " ...) block");
  return *it->second;
}

std::string AtomOf(const SExpr& e) {
  if (e.is_list) FailAt(e, "expected an identifier");
  return e.atom;
}

void ParseSymbols(const SExpr& block, bool predicates, Signature& sig) {
  for (size_t i = 1; i < block.items.size(); ++i) {
    const SExpr& d = block.items[i];
    if (!d.is_list || d.items.size() != 2 || d.items[0].is_list ||
        d.items[1].is_list)
      FailAt(d, "expected (name arity)");
    int arity = -1;
    try {
      size_t used = 0;
      arity = std::stoi(d.items[1].atom, &used);
      if (used != d.items[1].atom.size()) arity = -1;
    } catch (const std::exception&) {
    }
    if (arity < 0) FailAt(d.items[1], "bad arity '" + d.items[1].atom + "'");
    try {
      if (predicates)
        sig.AddPredicate(d.items[0].atom, arity);
      else
        sig.AddFunction(d.items[0].atom, arity);
    } catch (const ArityError& e) {
      FailAt(d, e.what());
    }
  }
}

std::vector<std::string> Names(const SExpr& block) {
  std::vector<std::string> out;
  for (size_t i = 1; i < block.items.size(); ++i)
    out.push_back(AtomOf(block.items[i]));
  return out;
}

const SExpr& Single(const SExpr& block) {
  if (block.items.size() != 2) FailAt(block, "expected exactly one formula");
  return block.items[1];
}

std::vector<TermTuple> Tuples(const SExpr& block, const ParseContext& ctx,
                              size_t width) {
  std::vector<TermTuple> out;
  for (size_t i = 1; i < block.items.size(); ++i) {
    const SExpr& t = block.items[i];
    if (!t.is_list) FailAt(t, "expected a tuple (t1 ... tk)");
    if (t.items.size() != width)
      FailAt(t, "tuple has " + std::to_string(t.items.size()) +
                    " terms, expected " + std::to_string(width));
    TermTuple tuple;
    for (const SExpr& e : t.items) tuple.push_back(ParseTerm(e, ctx));
    out.push_back(std::move(tuple));
  }
  return out;
}

std::vector<Term> Terms(const SExpr& block, const ParseContext& ctx) {
  std::vector<Term> out;
  for (size_t i = 1; i < block.items.size(); ++i)
    out.push_back(ParseTerm(block.items[i], ctx));
  return out;
}

std::map<std::string, const SExpr*> Sections(const SExpr& e,
                                             const std::set<std::string>& known,
                                             size_t first) {
  std::map<std::string, const SExpr*> out;
  for (size_t i = first; i < e.items.size(); ++i) {
    const SExpr& s = e.items[i];
    if (!s.is_list || s.items.empty() || s.items[0].is_list)
      FailAt(s, "expected a (name ...) block");
    const std::string& name = s.items[0].atom;
    if (!known.count(name)) FailAt(s, "unknown block '" + name + "'");
    if (!out.emplace(name, &s).second) FailAt(s, "duplicate block '" + name + "'");
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string s;
  for (const std::string& p : parts) s += " " + p;
  return s;
}

}  // namespace

ProblemFile ParseProblem(const std::string& text) {
  SExpr top = ReadSingleSExpr(text);
  if (!top.HasHead("problem")) FailAt(top, "expected (problem ...)");
  auto sections = Sections(top,
                           {"signature", "forall-vars", "exists-vars",
                            "antecedent", "succedent", "grammar",
                            "herbrand-terms"},
                           1);
  ProblemFile pf;
  PrenexProblem& pb = pf.problem;

  const SExpr& sig = Section(sections, top, "signature");
  auto sig_parts = Sections(sig, {"functions", "predicates"}, 1);
  if (sig_parts.count("functions"))
    ParseSymbols(*sig_parts["functions"], false, pb.sig);
  if (sig_parts.count("predicates"))
    ParseSymbols(*sig_parts["predicates"], true, pb.sig);

  const SExpr& xs = Section(sections, top, "forall-vars");
  const SExpr& ys = Section(sections, top, "exists-vars");
  pb.xs = Names(xs);
  pb.ys = Names(ys);
  for (const auto* block : {&xs, &ys})
    for (size_t i = 1; i < block->items.size(); ++i) {
      const std::string& v = block->items[i].atom;
      if (IsReservedName(v)) FailAt(block->items[i], "reserved name '" + v + "'");
      if (pb.sig.HasFunction(v) || pb.sig.HasPredicate(v))
        FailAt(block->items[i], "variable '" + v + "' clashes with a symbol");
    }

  ParseContext fctx;
  fctx.sig = &pb.sig;
  fctx.reserved_are_variables = false;
  fctx.variables.insert(pb.xs.begin(), pb.xs.end());
  ParseContext gctx = fctx;
  gctx.variables = std::set<std::string>(pb.ys.begin(), pb.ys.end());
  pb.f = ParseFormula(Single(Section(sections, top, "antecedent")), fctx);
  pb.g = ParseFormula(Single(Section(sections, top, "succedent")), gctx);
  ValidateProblem(pb);

  const SExpr& gram = Section(sections, top, "grammar");
  auto parts = Sections(gram, {"f-tuples", "g-tuples", "r-terms", "t-terms"}, 1);
  ParseContext tctx;
  tctx.sig = &pb.sig;
  for (const char* name : {"f-tuples", "g-tuples", "r-terms", "t-terms"})
    if (!parts.count(name)) FailAt(gram, std::string("missing (") + name + " ...)");
  SchematicPi2Grammar& g = pf.grammar;
  g.f_tuples = Tuples(*parts["f-tuples"], tctx, pb.xs.size());
  g.g_tuples = Tuples(*parts["g-tuples"], tctx, pb.ys.size());
  g.r_terms = Terms(*parts["r-terms"], tctx);
  g.t_terms = Terms(*parts["t-terms"], tctx);
  GrammarCheck gc = Validate(g, &pb.sig);
  if (!gc.ok()) FailAt(gram, gc.violations.front());

  if (sections.count("herbrand-terms")) {
    const SExpr& h = *sections["herbrand-terms"];
    ParseContext hctx;
    hctx.sig = &pb.sig;
    hctx.reserved_are_variables = false;
    HerbrandInstanceSet inst;
    for (size_t i = 1; i < h.items.size(); ++i) {
      const SExpr& t = h.items[i];
      bool is_f = t.HasHead(kWrapF), is_g = t.HasHead(kWrapG);
      if (!is_f && !is_g) FailAt(t, "expected (h_F ...) or (h_G ...)");
      size_t width = is_f ? pb.xs.size() : pb.ys.size();
      if (t.items.size() - 1 != width)
        FailAt(t, "wrapper expects " + std::to_string(width) + " arguments");
      TermTuple tuple;
      for (size_t j = 1; j < t.items.size(); ++j)
        tuple.push_back(ParseTerm(t.items[j], hctx));
      (is_f ? inst.f_tuples : inst.g_tuples).push_back(std::move(tuple));
    }
    pf.herbrand = std::move(inst);
  }
  return pf;
}

std::string PrintProblem(const ProblemFile& pf) {
  const PrenexProblem& pb = pf.problem;
  std::ostringstream out;
  out << "(problem\n  (signature\n    (functions";
  for (const auto& [name, ar] : pb.sig.functions())
    out << " (" << name << ' ' << ar << ')';
  out << ")\n    (predicates";
  for (const auto& [name, ar] : pb.sig.predicates())
    out << " (" << name << ' ' << ar << ')';
  out << "))\n";
  out << "  (forall-vars" << Join(pb.xs) << ")\n";
  out << "  (exists-vars" << Join(pb.ys) << ")\n";
  out << "  (antecedent " << pb.f.text() << ")\n";
  out << "  (succedent " << pb.g.text() << ")\n";
  auto tuples = [&](const std::vector<TermTuple>& ts) {
    std::vector<std::string> parts;
    for (const TermTuple& t : ts) parts.push_back(TupleText(t));
    return Join(parts);
  };
  auto terms = [&](const std::vector<Term>& ts) {
    std::vector<std::string> parts;
    for (const Term& t : ts) parts.push_back(t.text());
    return Join(parts);
  };
  const SchematicPi2Grammar& g = pf.grammar;
  out << "  (grammar\n";
  out << "    (f-tuples" << tuples(g.f_tuples) << ")\n";
  out << "    (g-tuples" << tuples(g.g_tuples) << ")\n";
  out << "    (r-terms" << terms(g.r_terms) << ")\n";
  out << "    (t-terms" << terms(g.t_terms) << "))";
  if (pf.herbrand) {
    out << "\n  (herbrand-terms";
    auto wrapped = [&](const char* w, const std::vector<TermTuple>& ts) {
      for (const TermTuple& t : ts) {
        out << "\n    (" << w;
        for (const Term& a : t) out << ' ' << a.text();
        out << ')';
      }
    };
    wrapped(kWrapF, pf.herbrand->f_tuples);
    wrapped(kWrapG, pf.herbrand->g_tuples);
    out << ')';
  }
  out << ")\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ProblemFile LoadProblem(const std::string& path) {
  return ParseProblem(ReadFile(path));
}

}  // namespace pi2cut
