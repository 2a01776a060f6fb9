#include "stlc/subst.hpp"

#include "stlc/typing.hpp"

namespace stlc {

Term Substitution::at(std::size_t index) const {
  if (index < prefix_.size()) return prefix_[index];
  return Term::var(index - prefix_.size() + shift_);
}

bool Substitution::is_renaming() const {
  for (const auto& t : prefix_)
    if (!t.is(TermKind::Var)) return false;
  return true;
}

Substitution cons(const Substitution& s, Term t) {
  std::vector<Term> prefix;
  prefix.reserve(s.prefix().size() + 1);
  prefix.push_back(std::move(t));
  prefix.insert(prefix.end(), s.prefix().begin(), s.prefix().end());
  return Substitution(std::move(prefix), s.tail_shift());
}

Substitution one(Term t) { return cons(Substitution::id(), std::move(t)); }

Substitution up(const Substitution& s) {
  std::vector<Term> prefix;
  prefix.reserve(s.prefix().size() + 1);
  prefix.push_back(Term::var(0));
  for (const auto& t : s.prefix()) prefix.push_back(shift_free(t, 1));
  return Substitution(std::move(prefix), s.tail_shift() + 1);
}

Substitution comp(const Substitution& s, const Substitution& t) {
  // Indices below s.prefix().size() go through s's explicit image. Past it,
  // s sends i to Var(i - k + shift_s), which t then maps; that stays explicit
  // until t's own prefix is exhausted, after which the shifts add up.
  std::vector<Term> prefix;
  for (const auto& u : s.prefix()) prefix.push_back(apply(t, u));
  const std::size_t shift_s = s.tail_shift();
  const std::size_t len_t = t.prefix().size();
  for (std::size_t j = shift_s; j < len_t; ++j) prefix.push_back(t.prefix()[j]);
  const std::size_t explicit_tail = len_t > shift_s ? len_t - shift_s : 0;
  // Past the explicit part, s(i) = Var(j) with j >= len_t, which t sends to
  // Var(j - len_t + shift_t).
  const std::size_t shift = (shift_s + explicit_tail - len_t) + t.tail_shift();
  return Substitution(std::move(prefix), shift);
}

Substitution tip(const std::function<Term(const Term&)>& f) {
  return cons(Substitution::wk(), f(Term::var(0)));
}

Substitution swap01() { return Substitution({Term::var(1), Term::var(0)}, 2); }

Term shift_free(const Term& t, std::size_t amount, std::size_t cutoff) {
  if (amount == 0 || t.free_bound() <= cutoff) return t;
  if (t.is(TermKind::Var)) return Term::var(t.index() + amount);
  std::vector<Term> cs;
  cs.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i)
    cs.push_back(shift_free(t.child(i), amount, cutoff + (t.binds_in_child(i) ? 1 : 0)));
  return t.with_children(std::move(cs));
}

namespace {

// Acts as up^depth(s): variables bound inside the traversal stay put, the
// others are sent through s and shifted past the binders crossed so far.
Term apply_under(const Substitution& s, const Term& t, std::size_t depth) {
  if (t.free_bound() <= depth) return t;
  if (t.is(TermKind::Var)) return shift_free(s.at(t.index() - depth), depth);
  std::vector<Term> cs;
  cs.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i)
    cs.push_back(apply_under(s, t.child(i), depth + (t.binds_in_child(i) ? 1 : 0)));
  return t.with_children(std::move(cs));
}

}  // namespace

Term apply(const Substitution& s, const Term& t) { return apply_under(s, t, 0); }

bool check_sub_typing(const Language& lang, const Context& delta, const Substitution& s, const Context& gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    auto got = try_infer(lang, delta, s.at(i));
    if (!got || !(*got == *gamma.lookup(i))) return false;
  }
  return true;
}

}  // namespace stlc
