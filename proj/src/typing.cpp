#include "stlc/typing.hpp"

#include "stlc/sexpr.hpp"

namespace stlc {

std::string path_to_string(const Path& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(path[i]);
  }
  return out + "]";
}

namespace {

class Inferrer {
 public:
  explicit Inferrer(const Language& lang) : lang_(lang) {}

  Type run(const Context& gamma, const Term& t) {
    switch (t.kind()) {
      case TermKind::Var: {
        auto ty = gamma.lookup(t.index());
        if (!ty) fail("unbound variable " + std::to_string(t.index()));
        return *ty;
      }
      case TermKind::Cst: {
        auto ty = lang_.type_of(t.name());
        if (!ty) fail("unknown constant '" + t.name() + "'");
        return *ty;
      }
      case TermKind::Star: return Type::unit();
      case TermKind::Pair: return Type::prod(sub(gamma, t, 0), sub(gamma, t, 1));
      case TermKind::Proj: {
        Type p = sub(gamma, t, 0);
        if (!p.is(TypeKind::Prod)) fail("projection of non-product " + print(p));
        return t.component() == 1 ? p.left() : p.right();
      }
      case TermKind::Lam: {
        annotation_closed(t.annotation());
        return Type::arrow(t.annotation(), sub(gamma.extend(t.annotation()), t, 0));
      }
      case TermKind::App: {
        Type f = sub(gamma, t, 0);
        if (!f.is(TypeKind::Arrow)) fail("application of non-function " + print(f));
        Type a = sub(gamma, t, 1);
        if (!(a == f.left())) fail("argument has type " + print(a) + ", expected " + print(f.left()));
        return f.right();
      }
      case TermKind::Raise: {
        annotation_closed(t.annotation());
        Type e = sub(gamma, t, 0);
        if (!e.is(TypeKind::Empty)) fail("raise of non-empty " + print(e));
        return t.annotation();
      }
      case TermKind::Inl:
      case TermKind::Inr: {
        const Type& s = t.annotation();
        annotation_closed(s);
        Type a = sub(gamma, t, 0);
        const Type& want = t.is(TermKind::Inl) ? s.left() : s.right();
        if (!(a == want)) fail("injected term has type " + print(a) + ", expected " + print(want));
        return s;
      }
      case TermKind::Case: {
        const Type& motive = t.annotation();
        annotation_closed(motive);
        Type s = sub(gamma, t, 0);
        if (!s.is(TypeKind::Sum)) fail("case on non-sum " + print(s));
        Type l = sub(gamma.extend(s.left()), t, 1);
        if (!(l == motive)) {
          path_.push_back(1);
          fail("branch has type " + print(l) + ", expected " + print(motive));
        }
        Type r = sub(gamma.extend(s.right()), t, 2);
        if (!(r == motive)) {
          path_.push_back(2);
          fail("branch has type " + print(r) + ", expected " + print(motive));
        }
        return motive;
      }
    }
    fail("unknown term");
  }

 private:
  Type sub(const Context& gamma, const Term& t, std::size_t i) {
    path_.push_back(i);
    Type out = run(gamma, t.child(i));
    path_.pop_back();
    return out;
  }

  void annotation_closed(const Type& ty) {
    if (!vocab_closed(ty, lang_)) fail("annotation " + print(ty) + " uses undeclared base types");
  }

  [[noreturn]] void fail(const std::string& msg) { throw TypeError(path_, msg); }

  const Language& lang_;
  Path path_;
};

}  // namespace

Type infer(const Language& lang, const Context& gamma, const Term& t) { return Inferrer(lang).run(gamma, t); }

std::optional<Type> try_infer(const Language& lang, const Context& gamma, const Term& t) {
  try {
    return infer(lang, gamma, t);
  } catch (const TypeError&) {
    return std::nullopt;
  }
}

bool check(const Language& lang, const Context& gamma, const Term& t, const Type& type) {
  auto got = try_infer(lang, gamma, t);
  return got && *got == type;
}

}  // namespace stlc
