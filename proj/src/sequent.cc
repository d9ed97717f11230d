#include "pi2cut/sequent.h"

#include <algorithm>

#include "pi2cut/error.h"

namespace pi2cut {

namespace {

void Normalize(std::vector<Formula>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Formula> Inserted(const std::vector<Formula>& v, const Formula& f) {
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it != v.end() && *it == f) return v;
  std::vector<Formula> out;
  out.reserve(v.size() + 1);
  out.insert(out.end(), v.begin(), it);
  out.push_back(f);
  out.insert(out.end(), it, v.end());
  return out;
}

std::vector<Formula> Erased(const std::vector<Formula>& v, const Formula& f) {
  std::vector<Formula> out = v;
  auto it = std::lower_bound(out.begin(), out.end(), f);
  if (it != out.end() && *it == f) out.erase(it);
  return out;
}

}  // namespace

Sequent::Sequent(std::vector<Formula> ante, std::vector<Formula> succ)
    : ante_(std::move(ante)), succ_(std::move(succ)) {
  Normalize(ante_);
  Normalize(succ_);
}

bool Sequent::InAnte(const Formula& f) const {
  return std::binary_search(ante_.begin(), ante_.end(), f);
}
bool Sequent::InSucc(const Formula& f) const {
  return std::binary_search(succ_.begin(), succ_.end(), f);
}

Sequent Sequent::AddAnte(const Formula& f) const {
  Sequent s;
  s.ante_ = Inserted(ante_, f);
  s.succ_ = succ_;
  return s;
}
Sequent Sequent::AddSucc(const Formula& f) const {
  Sequent s;
  s.ante_ = ante_;
  s.succ_ = Inserted(succ_, f);
  return s;
}
Sequent Sequent::RemoveAnte(const Formula& f) const {
  Sequent s;
  s.ante_ = Erased(ante_, f);
  s.succ_ = succ_;
  return s;
}
Sequent Sequent::RemoveSucc(const Formula& f) const {
  Sequent s;
  s.ante_ = ante_;
  s.succ_ = Erased(succ_, f);
  return s;
}

bool Sequent::quantifier_free() const {
  for (const Formula& f : ante_)
    if (!f.quantifier_free()) return false;
  for (const Formula& f : succ_)
    if (!f.quantifier_free()) return false;
  return true;
}

bool Sequent::IsAxiom() const {
  for (const Formula& f : ante_)
    if (f.is_atom() && InSucc(f)) return true;
  return false;
}

bool Sequent::Atomic() const {
  for (const Formula& f : ante_)
    if (!f.is_atom()) return false;
  for (const Formula& f : succ_)
    if (!f.is_atom()) return false;
  return true;
}

std::string Sequent::text() const {
  std::string s;
  for (size_t i = 0; i < ante_.size(); ++i) {
    if (i) s += ", ";
    s += ante_[i].text();
  }
  s += ante_.empty() ? "|-" : " |-";
  for (size_t i = 0; i < succ_.size(); ++i) {
    s += i ? ", " : " ";
    s += succ_[i].text();
  }
  return s;
}

int Sequent::symbols() const {
  int n = 1;
  for (const Formula& f : ante_) n += f.symbols();
  for (const Formula& f : succ_) n += f.symbols();
  if (ante_.size() > 1) n += static_cast<int>(ante_.size()) - 1;
  if (succ_.size() > 1) n += static_cast<int>(succ_.size()) - 1;
  return n;
}

std::vector<Literal> LiteralNormalForm(const Sequent& s) {
  std::vector<Literal> out;
  for (const Formula& f : s.succ()) {
    if (!f.is_atom()) throw ShapeError("non-atomic formula " + f.text());
    out.emplace_back(false, f);
  }
  for (const Formula& f : s.ante()) {
    if (!f.is_atom()) throw ShapeError("non-atomic formula " + f.text());
    out.emplace_back(true, f);
  }
  return out;
}

namespace {

void CheckArity(const std::vector<TermTuple>& tuples) {
  for (const TermTuple& t : tuples)
    if (t.size() != tuples.front().size())
      throw ArityError("tuples of mixed arity in a count");
}

size_t CountInOrder(const std::vector<TermTuple>& order) {
  size_t total = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t pos = 0; pos < order[i].size(); ++pos) {
      bool fresh = true;
      for (size_t j = 0; j < i && fresh; ++j)
        if (order[j][pos] == order[i][pos]) fresh = false;
      if (fresh) ++total;
    }
  }
  return total;
}

void Canonicalize(std::vector<TermTuple>& tuples) {
  std::sort(tuples.begin(), tuples.end(),
            [](const TermTuple& a, const TermTuple& b) {
              std::string ta = TupleText(a), tb = TupleText(b);
              return ta != tb ? ta < tb : a < b;
            });
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

}  // namespace

size_t SharpCount(std::vector<TermTuple> tuples) {
  if (tuples.empty()) return 0;
  CheckArity(tuples);
  Canonicalize(tuples);
  return CountInOrder(tuples);
}

std::pair<size_t, size_t> SharpCountRange(std::vector<TermTuple> tuples) {
  if (tuples.empty()) return {0, 0};
  CheckArity(tuples);
  Canonicalize(tuples);
  if (tuples.size() > 8) throw Error("order diagnostic limited to 8 tuples");
  std::vector<size_t> idx(tuples.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  size_t lo = SIZE_MAX, hi = 0;
  std::vector<TermTuple> order(tuples.size());
  do {
    for (size_t i = 0; i < idx.size(); ++i) order[i] = tuples[idx[i]];
    size_t c = CountInOrder(order);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return {lo, hi};
}

}  // namespace pi2cut
