#pragma once

// Parallel substitutions on de Bruijn terms.
//
// A substitution is total: it maps every index. It is stored as an explicit
// image for indices 0..k-1 followed by a uniform shift, so index i >= k is
// sent to Var(i - k + shift). Renamings are the substitutions whose image
// only contains variables.

#include <functional>
#include <vector>

#include "stlc/syntax.hpp"

namespace stlc {

class Substitution {
 public:
  // The identity.
  static Substitution id() { return Substitution({}, 0); }
  // Weakening: Var n is sent to Var (n+1).
  static Substitution wk() { return Substitution({}, 1); }
  // Shift by `amount` (wk composed with itself `amount` times).
  static Substitution shift(std::size_t amount) { return Substitution({}, amount); }

  Substitution(std::vector<Term> prefix, std::size_t shift) : prefix_(std::move(prefix)), shift_(shift) {}

  // Image of the variable with de Bruijn index i.
  Term at(std::size_t index) const;

  const std::vector<Term>& prefix() const { return prefix_; }
  std::size_t tail_shift() const { return shift_; }

  bool is_renaming() const;

 private:
  std::vector<Term> prefix_;
  std::size_t shift_;
};

// Maps index 0 to t and index n+1 to s(n).
Substitution cons(const Substitution& s, Term t);
// Maps index 0 to t and acts as the identity otherwise: cons(id, t).
Substitution one(Term t);
// Maps index 0 to itself and index n+1 to wk(s(n)); used under binders.
Substitution up(const Substitution& s);
// Sequential composition: comp(s, t)(x) = apply(t, s(x)).
Substitution comp(const Substitution& s, const Substitution& t);
// Applies f to the last variable and leaves the others alone.
Substitution tip(const std::function<Term(const Term&)>& f);

// Capture-avoiding action of a substitution on a term. Annotations are left
// untouched and the action is defined on ill-typed terms too.
Term apply(const Substitution& s, const Term& t);

// Adds `amount` to every free variable of t whose index is >= cutoff.
Term shift_free(const Term& t, std::size_t amount, std::size_t cutoff = 0);

// The renaming exchanging the two most recent variables.
Substitution swap01();

// Whether Delta |- s : Gamma, i.e. every (i : A) in gamma has s(i) : A in delta.
bool check_sub_typing(const Language& lang, const Context& delta, const Substitution& s, const Context& gamma);

}  // namespace stlc
