#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "stlc/sexpr.hpp"
#include "stlc/syntax.hpp"

namespace stlc {
inline void PrintTo(const Type& t, std::ostream* os) { *os << print(t); }
inline void PrintTo(const Term& t, std::ostream* os) { *os << print(t); }
inline void PrintTo(const Context& g, std::ostream* os) { *os << "[" << print(g) << "]"; }
}  // namespace stlc

namespace testing_support {

using namespace stlc;

inline Type ty(const std::string& s) { return parse_type(s); }
inline Term trm(const std::string& s) { return parse_term(s); }
inline Context ctx(const std::string& s) { return parse_context(s); }

inline Type P() { return Type::base("P"); }
inline Type Q() { return Type::base("Q"); }
inline Type R() { return Type::base("R"); }

inline Language lang_of(std::initializer_list<const char*> bases) {
  Language l;
  for (const char* b : bases) l.add_base(b);
  return l;
}

inline Language lang_pq() { return lang_of({"P", "Q"}); }

// The seven context entry types used by the property suites.
inline std::vector<Type> entry_types() {
  return {P(), Q(), Type::unit(), Type::empty(), Type::prod(P(), Q()), Type::sum(P(), Q()), Type::arrow(P(), Q())};
}

// Contexts of length <= max_len over the entry types.
inline std::vector<Context> small_contexts(std::size_t max_len) {
  std::vector<Context> out{Context()};
  std::vector<Context> layer{Context()};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Context> next;
    for (const auto& g : layer)
      for (const auto& a : entry_types()) next.push_back(g.extend(a));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Reference semantics for substitutions: plain functions from indices to
// terms, with binders handled by lifting the function.
using SubFn = std::function<Term(std::size_t)>;

inline Term ref_apply(const SubFn& s, const Term& t);

inline SubFn ref_lift(const SubFn& s) {
  return [s](std::size_t i) -> Term {
    if (i == 0) return Term::var(0);
    return ref_apply([](std::size_t j) { return Term::var(j + 1); }, s(i - 1));
  };
}

inline Term ref_apply(const SubFn& s, const Term& t) {
  if (t.is(TermKind::Var)) return s(t.index());
  std::vector<Term> cs;
  for (std::size_t i = 0; i < t.arity(); ++i) cs.push_back(ref_apply(t.binds_in_child(i) ? ref_lift(s) : s, t.child(i)));
  return t.with_children(std::move(cs));
}

}  // namespace testing_support
