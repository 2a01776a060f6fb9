#include "stlc/bidir.hpp"

#include "stlc/sexpr.hpp"

namespace stlc {

std::optional<Type> infer_ne(const Language& lang, const Context& gamma, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return gamma.lookup(t.index());
    case TermKind::Cst: return lang.type_of(t.name());
    case TermKind::Proj: {
      auto p = infer_ne(lang, gamma, t.child(0));
      if (!p || !p->is(TypeKind::Prod)) return std::nullopt;
      return t.component() == 1 ? p->left() : p->right();
    }
    case TermKind::App: {
      auto f = infer_ne(lang, gamma, t.child(0));
      if (!f || !f->is(TypeKind::Arrow)) return std::nullopt;
      if (!check_nf(lang, gamma, t.child(1), f->left())) return std::nullopt;
      return f->right();
    }
    default: return std::nullopt;
  }
}

Type infer_ne_or_throw(const Language& lang, const Context& gamma, const Term& t) {
  auto ty = infer_ne(lang, gamma, t);
  if (!ty) throw NotNeutral("not a neutral term: " + print(t));
  return *ty;
}

bool check_nf(const Language& lang, const Context& gamma, const Term& t, const Type& type) {
  switch (t.kind()) {
    case TermKind::Star: return type.is(TypeKind::Unit);
    case TermKind::Pair:
      return type.is(TypeKind::Prod) && check_nf(lang, gamma, t.child(0), type.left()) &&
             check_nf(lang, gamma, t.child(1), type.right());
    case TermKind::Lam:
      return type.is(TypeKind::Arrow) && t.annotation() == type.left() && vocab_closed(type.left(), lang) &&
             check_nf(lang, gamma.extend(type.left()), t.child(0), type.right());
    case TermKind::Inl:
    case TermKind::Inr:
      return type.is(TypeKind::Sum) && t.annotation() == type && vocab_closed(type, lang) &&
             check_nf(lang, gamma, t.child(0), t.is(TermKind::Inl) ? type.left() : type.right());
    case TermKind::Raise: {
      if (!(t.annotation() == type) || !vocab_closed(type, lang)) return false;
      auto e = infer_ne(lang, gamma, t.child(0));
      return e && e->is(TypeKind::Empty);
    }
    case TermKind::Case: {
      if (!(t.annotation() == type) || !vocab_closed(type, lang)) return false;
      auto s = infer_ne(lang, gamma, t.child(0));
      return s && s->is(TypeKind::Sum) && check_nf(lang, gamma.extend(s->left()), t.child(1), type) &&
             check_nf(lang, gamma.extend(s->right()), t.child(2), type);
    }
    default: {
      auto ty = infer_ne(lang, gamma, t);
      return ty && *ty == type;
    }
  }
}

}  // namespace stlc
