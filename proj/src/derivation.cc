#include "pi2cut/derivation.h"

#include <algorithm>
#include <map>

#include "pi2cut/error.h"

namespace pi2cut {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
};

constexpr RuleInfo kRules[] = {
    {Rule::kAxiom, "Axiom"},     {Rule::kNonTautLeaf, "NonTautLeaf"},
    {Rule::kAndL, "AndL"},       {Rule::kAndR, "AndR"},
    {Rule::kOrL, "OrL"},         {Rule::kOrR, "OrR"},
    {Rule::kImpL, "ImpL"},       {Rule::kImpR, "ImpR"},
    {Rule::kNegL, "NegL"},       {Rule::kNegR, "NegR"},
    {Rule::kForallL, "ForallL"}, {Rule::kForallR, "ForallR"},
    {Rule::kExistsL, "ExistsL"}, {Rule::kExistsR, "ExistsR"},
    {Rule::kCut, "Cut"},
};

struct PremiseSpec {
  Sequent seq;
  std::vector<Formula> new_left;
  std::vector<Formula> new_right;
};

Conn ExpectedConn(Rule r) {
  switch (r) {
    case Rule::kAndL: case Rule::kAndR: return Conn::kAnd;
    case Rule::kOrL: case Rule::kOrR: return Conn::kOr;
    case Rule::kImpL: case Rule::kImpR: return Conn::kImp;
    case Rule::kNegL: case Rule::kNegR: return Conn::kNot;
    case Rule::kForallL: case Rule::kForallR: return Conn::kForall;
    case Rule::kExistsL: case Rule::kExistsR: return Conn::kExists;
    default: return Conn::kAtom;
  }
}

Sequent With(const Sequent& s, const std::vector<Formula>& left,
             const std::vector<Formula>& right) {
  Sequent out = s;
  for (const Formula& f : left) out = out.AddAnte(f);
  for (const Formula& f : right) out = out.AddSucc(f);
  return out;
}

std::vector<PremiseSpec> Specs(const Sequent& concl, Rule rule,
                               const std::optional<Formula>& principal,
                               const std::optional<Term>& term) {
  if (rule == Rule::kAxiom || rule == Rule::kNonTautLeaf) return {};
  if (!principal) throw ShapeError(std::string(RuleName(rule)) +
                                   " without principal formula");
  const Formula& p = *principal;
  if (rule == Rule::kCut) {
    return {{concl.AddSucc(p), {}, {p}}, {concl.AddAnte(p), {p}, {}}};
  }
  if (p.conn() != ExpectedConn(rule))
    throw ShapeError(std::string(RuleName(rule)) + " does not apply to " +
                     p.text());
  bool left = PrincipalLeft(rule);
  if (left ? !concl.InAnte(p) : !concl.InSucc(p))
    throw ShapeError("principal formula " + p.text() + " not in the " +
                     (left ? "antecedent" : "succedent"));
  if (p.is_quantifier()) {
    if (!term) throw ShapeError(std::string(RuleName(rule)) + " without term");
    if (IsStrong(rule) && !term->is_var())
      throw ShapeError("eigenvariable must be a variable, got " +
                       term->text());
    Formula inst = Substitute(p.sub(0), {{p.var(), *term}});
    // Weak rules keep the principal formula.
    Sequent base = IsWeak(rule) ? concl
                   : left       ? concl.RemoveAnte(p)
                                : concl.RemoveSucc(p);
    if (left) return {{base.AddAnte(inst), {inst}, {}}};
    return {{base.AddSucc(inst), {}, {inst}}};
  }
  Sequent base = left ? concl.RemoveAnte(p) : concl.RemoveSucc(p);
  switch (rule) {
    case Rule::kAndL:
      return {{With(base, {p.sub(0), p.sub(1)}, {}), {p.sub(0), p.sub(1)}, {}}};
    case Rule::kAndR:
      return {{base.AddSucc(p.sub(0)), {}, {p.sub(0)}},
              {base.AddSucc(p.sub(1)), {}, {p.sub(1)}}};
    case Rule::kOrL:
      return {{base.AddAnte(p.sub(0)), {p.sub(0)}, {}},
              {base.AddAnte(p.sub(1)), {p.sub(1)}, {}}};
    case Rule::kOrR:
      return {{With(base, {}, {p.sub(0), p.sub(1)}), {}, {p.sub(0), p.sub(1)}}};
    case Rule::kImpL:
      return {{base.AddSucc(p.sub(0)), {}, {p.sub(0)}},
              {base.AddAnte(p.sub(1)), {p.sub(1)}, {}}};
    case Rule::kImpR:
      return {{With(base, {p.sub(0)}, {p.sub(1)}), {p.sub(0)}, {p.sub(1)}}};
    case Rule::kNegL:
      return {{base.AddSucc(p.sub(0)), {}, {p.sub(0)}}};
    case Rule::kNegR:
      return {{base.AddAnte(p.sub(0)), {p.sub(0)}, {}}};
    default:
      break;
  }
  throw ShapeError("unhandled rule");
}

Rule RuleFor(const Formula& f, bool left) {
  switch (f.conn()) {
    case Conn::kAnd: return left ? Rule::kAndL : Rule::kAndR;
    case Conn::kOr: return left ? Rule::kOrL : Rule::kOrR;
    case Conn::kImp: return left ? Rule::kImpL : Rule::kImpR;
    case Conn::kNot: return left ? Rule::kNegL : Rule::kNegR;
    default: throw ShapeError("no propositional rule for " + f.text());
  }
}

uint8_t TagOf(const std::vector<Formula>& side,
              const std::vector<uint8_t>& tags, const Formula& f) {
  auto it = std::lower_bound(side.begin(), side.end(), f);
  if (it == side.end() || !(*it == f)) return 0;
  return tags[it - side.begin()];
}

void CollectLeaves(const Sequent& s, const DecompositionPolicy& pol,
                   std::vector<Sequent>& out) {
  if (s.IsAxiom()) return;
  Formula f;
  bool left = false;
  if (!pol(s, f, left)) {
    out.push_back(s);
    return;
  }
  for (const Sequent& p : RulePremises(s, RuleFor(f, left), f, std::nullopt))
    CollectLeaves(p, pol, out);
}

void CollectTreeLeaves(const Derivation& d, std::vector<Sequent>& out) {
  if (d.premises.empty()) {
    if (d.rule == Rule::kNonTautLeaf ||
        (d.rule != Rule::kAxiom && !d.sequent.IsAxiom()))
      out.push_back(d.sequent);
    return;
  }
  for (const Derivation& p : d.premises) CollectTreeLeaves(p, out);
}

void SortUnique(std::vector<Sequent>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

const char* RuleName(Rule r) {
  for (const RuleInfo& i : kRules)
    if (i.rule == r) return i.name;
  return "?";
}

std::optional<Rule> RuleFromName(const std::string& name) {
  for (const RuleInfo& i : kRules)
    if (name == i.name) return i.rule;
  return std::nullopt;
}

bool IsWeak(Rule r) { return r == Rule::kForallL || r == Rule::kExistsR; }
bool IsStrong(Rule r) { return r == Rule::kForallR || r == Rule::kExistsL; }

bool PrincipalLeft(Rule r) {
  switch (r) {
    case Rule::kAndL: case Rule::kOrL: case Rule::kImpL: case Rule::kNegL:
    case Rule::kForallL: case Rule::kExistsL:
      return true;
    default:
      return false;
  }
}

std::vector<Sequent> RulePremises(const Sequent& concl, Rule rule,
                                  const std::optional<Formula>& principal,
                                  const std::optional<Term>& term) {
  std::vector<Sequent> out;
  for (PremiseSpec& s : Specs(concl, rule, principal, term))
    out.push_back(std::move(s.seq));
  return out;
}

Derivation Apply(const Sequent& concl, Rule rule, const Formula& principal,
                 const std::optional<Term>& term) {
  Derivation d;
  d.sequent = concl;
  d.rule = rule;
  d.principal = principal;
  d.term = term;
  for (Sequent& s : RulePremises(concl, rule, principal, term)) {
    Derivation p;
    p.sequent = std::move(s);
    p.rule = Rule::kNonTautLeaf;
    d.premises.push_back(std::move(p));
  }
  return d;
}

DecompositionPolicy CanonicalPolicy() {
  return [](const Sequent& s, Formula& chosen, bool& left) {
    const Formula* best = nullptr;
    for (const Formula& f : s.ante())
      if (!f.is_atom()) {
        best = &f;
        left = true;
        break;
      }
    for (const Formula& f : s.succ())
      if (!f.is_atom()) {
        if (!best || f < *best) {
          best = &f;
          left = false;
        }
        break;
      }
    if (!best) return false;
    chosen = *best;
    return true;
  };
}

Derivation MaximalDerivation(const Sequent& s) {
  return MaximalDerivation(s, CanonicalPolicy());
}

Derivation MaximalDerivation(const Sequent& s, const DecompositionPolicy& pol) {
  if (!s.quantifier_free())
    throw ShapeError("maximal derivation of a sequent with quantifiers");
  Derivation d;
  d.sequent = s;
  Formula f;
  bool left = false;
  if (!pol(s, f, left)) {
    d.rule = s.IsAxiom() ? Rule::kAxiom : Rule::kNonTautLeaf;
    return d;
  }
  d.rule = RuleFor(f, left);
  d.principal = f;
  for (const Sequent& p : RulePremises(s, d.rule, f, std::nullopt))
    d.premises.push_back(MaximalDerivation(p, pol));
  return d;
}

std::vector<Sequent> NonTautologicalLeaves(const Derivation& d) {
  std::vector<Sequent> out;
  CollectTreeLeaves(d, out);
  SortUnique(out);
  return out;
}

std::vector<Sequent> NonTautologicalLeavesOf(const Sequent& s) {
  if (!s.quantifier_free())
    throw ShapeError("maximal derivation of a sequent with quantifiers");
  std::vector<Sequent> out;
  CollectLeaves(s, CanonicalPolicy(), out);
  SortUnique(out);
  return out;
}

size_t CountNodes(const Derivation& d) {
  size_t n = 1;
  for (const Derivation& p : d.premises) n += CountNodes(p);
  return n;
}

void AnnotateOrigins(Derivation& d) {
  d.ante_origin.assign(d.sequent.ante().size(), kOriginEnd);
  d.succ_origin.assign(d.sequent.succ().size(), kOriginEnd);
  PropagateOrigins(d);
}

void PropagateOrigins(Derivation& d) {
  if (d.premises.empty()) return;
  std::vector<PremiseSpec> specs =
      Specs(d.sequent, d.rule, d.principal, d.term);
  uint8_t ptag = 0;
  if (d.rule != Rule::kCut && d.principal) {
    ptag = PrincipalLeft(d.rule)
               ? TagOf(d.sequent.ante(), d.ante_origin, *d.principal)
               : TagOf(d.sequent.succ(), d.succ_origin, *d.principal);
  }
  bool keeps = IsWeak(d.rule) || d.rule == Rule::kCut;
  for (size_t i = 0; i < d.premises.size() && i < specs.size(); ++i) {
    Derivation& p = d.premises[i];
    const PremiseSpec& spec = specs[i];
    auto fill = [&](bool left) {
      const std::vector<Formula>& side =
          left ? p.sequent.ante() : p.sequent.succ();
      const std::vector<Formula>& cside =
          left ? d.sequent.ante() : d.sequent.succ();
      const std::vector<uint8_t>& ctags = left ? d.ante_origin : d.succ_origin;
      const std::vector<Formula>& fresh = left ? spec.new_left : spec.new_right;
      std::vector<uint8_t> tags(side.size(), 0);
      for (size_t k = 0; k < side.size(); ++k) {
        const Formula& f = side[k];
        bool is_principal = d.principal && d.rule != Rule::kCut &&
                            PrincipalLeft(d.rule) == left && f == *d.principal;
        if (!is_principal || keeps) tags[k] |= TagOf(cside, ctags, f);
        if (std::find(fresh.begin(), fresh.end(), f) != fresh.end())
          tags[k] |= d.rule == Rule::kCut ? uint8_t{kOriginCut} : ptag;
      }
      return tags;
    };
    p.ante_origin = fill(true);
    p.succ_origin = fill(false);
    PropagateOrigins(p);
  }
}

}  // namespace pi2cut
