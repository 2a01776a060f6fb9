#include "stlc/enumerate.hpp"

#include <unordered_map>

#include "stlc/bidir.hpp"
#include "stlc/sexpr.hpp"

namespace stlc {

std::vector<Type> enum_types(const Language& lang, std::size_t depth) {
  std::vector<Type> out;
  for (const auto& b : lang.base_types()) out.push_back(Type::base(b));
  out.push_back(Type::unit());
  out.push_back(Type::empty());
  std::size_t prev_end = 0;  // types before this index have depth < d - 1
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::size_t end = out.size();
    for (int k = 0; k < 3; ++k) {
      for (std::size_t i = 0; i < end; ++i) {
        for (std::size_t j = 0; j < end; ++j) {
          if (i < prev_end && j < prev_end) continue;
          const Type& a = out[i];
          const Type& b = out[j];
          out.push_back(k == 0 ? Type::prod(a, b) : k == 1 ? Type::sum(a, b) : Type::arrow(a, b));
        }
      }
    }
    prev_end = end;
  }
  return out;
}

class Pattern {
 public:
  static Pattern hole() { return Pattern(); }
  static Pattern of(const Type& t) {
    Pattern p;
    p.type_ = t;
    return p;
  }
  static Pattern node(TypeKind k, Pattern a, Pattern b) {
    Pattern p;
    p.kind_ = k;
    p.kids_ = std::make_shared<std::pair<Pattern, Pattern>>(std::move(a), std::move(b));
    return p;
  }

  bool is_hole() const { return !type_ && !kids_; }

  bool matches(const Type& t) const {
    if (type_) return *type_ == t;
    if (!kids_) return true;
    return t.kind() == kind_ && kids_->first.matches(t.left()) && kids_->second.matches(t.right());
  }

  // The two component patterns when a type of kind k could match.
  std::optional<std::pair<Pattern, Pattern>> split(TypeKind k) const {
    if (type_) {
      if (!type_->is(k)) return std::nullopt;
      return std::pair{of(type_->left()), of(type_->right())};
    }
    if (!kids_) return std::pair{hole(), hole()};
    if (kind_ != k) return std::nullopt;
    return *kids_;
  }

  bool admits(TypeKind k) const {
    if (type_) return type_->is(k);
    if (kids_) return kind_ == k;
    return true;
  }

  std::string key() const {
    if (type_) return print(*type_);
    if (!kids_) return "?";
    return "(" + std::to_string(static_cast<int>(kind_)) + " " + kids_->first.key() + " " + kids_->second.key() + ")";
  }

 private:
  std::optional<Type> type_;
  TypeKind kind_ = TypeKind::Unit;
  std::shared_ptr<std::pair<Pattern, Pattern>> kids_;
};

using Typed = std::vector<std::pair<Term, Type>>;

struct Enumerator::Impl {
  const Language& lang;
  const std::vector<Type>& pool;
  // memo[n] holds the results of exact size n, keyed by context and pattern
  std::vector<std::unordered_map<std::string, std::shared_ptr<const Typed>>> memo;

  Impl(const Language& l, const std::vector<Type>& p) : lang(l), pool(p) {}

  std::shared_ptr<const Typed> gen(const Context& gamma, const Pattern& pat, std::size_t n) {
    if (memo.size() <= n) memo.resize(n + 1);
    std::string key = print(gamma) + "|" + pat.key();
    auto it = memo[n].find(key);
    if (it != memo[n].end()) return it->second;
    auto out = std::make_shared<Typed>(build(gamma, pat, n));
    memo[n].emplace(std::move(key), out);
    return out;
  }

  Typed build(const Context& gamma, const Pattern& pat, std::size_t n) {
    Typed out;
    if (n == 0) return out;
    if (n == 1) {
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        Type ty = *gamma.lookup(i);
        if (pat.matches(ty)) out.emplace_back(Term::var(i), ty);
      }
      for (const auto& [name, ty] : lang.constants())
        if (pat.matches(ty)) out.emplace_back(Term::cst(name), ty);
      if (pat.matches(Type::unit())) out.emplace_back(Term::star(), Type::unit());
      return out;
    }
    // pair
    if (auto parts = pat.split(TypeKind::Prod)) {
      for (std::size_t n1 = 1; n1 + 1 < n; ++n1) {
        auto as = gen(gamma, parts->first, n1);
        if (as->empty()) continue;
        auto bs = gen(gamma, parts->second, n - 1 - n1);
        for (const auto& [a, ta] : *as)
          for (const auto& [b, tb] : *bs) out.emplace_back(Term::pair(a, b), Type::prod(ta, tb));
      }
    }
    // projections
    for (int i : {1, 2}) {
      Pattern inner = i == 1 ? Pattern::node(TypeKind::Prod, pat, Pattern::hole())
                             : Pattern::node(TypeKind::Prod, Pattern::hole(), pat);
      for (const auto& [t, ty] : *gen(gamma, inner, n - 1))
        out.emplace_back(Term::proj(i, t), i == 1 ? ty.left() : ty.right());
    }
    // lambda
    if (auto parts = pat.split(TypeKind::Arrow)) {
      for (const auto& a : pool) {
        if (!parts->first.matches(a)) continue;
        for (const auto& [b, tb] : *gen(gamma.extend(a), parts->second, n - 1))
          out.emplace_back(Term::lam(a, b), Type::arrow(a, tb));
      }
    }
    // application
    for (std::size_t n1 = 1; n1 + 1 < n; ++n1) {
      auto fs = gen(gamma, Pattern::node(TypeKind::Arrow, Pattern::hole(), pat), n1);
      for (const auto& [f, tf] : *fs)
        for (const auto& [u, tu] : *gen(gamma, Pattern::of(tf.left()), n - 1 - n1))
          out.emplace_back(Term::app(f, u), tf.right());
    }
    // raise
    {
      auto es = gen(gamma, Pattern::of(Type::empty()), n - 1);
      if (!es->empty())
        for (const auto& m : pool)
          if (pat.matches(m))
            for (const auto& [e, te] : *es) out.emplace_back(Term::raise(m, e), m);
    }
    // injections
    for (bool left : {true, false}) {
      for (const auto& s : pool) {
        if (!s.is(TypeKind::Sum) || !pat.matches(s)) continue;
        for (const auto& [a, ta] : *gen(gamma, Pattern::of(left ? s.left() : s.right()), n - 1))
          out.emplace_back(left ? Term::inl(s, a) : Term::inr(s, a), s);
      }
    }
    // case
    if (n >= 4) {
      for (const auto& m : pool) {
        if (!pat.matches(m)) continue;
        Pattern pm = Pattern::of(m);
        for (std::size_t n1 = 1; n1 + 3 <= n; ++n1) {
          for (const auto& [s, ts] : *gen(gamma, Pattern::node(TypeKind::Sum, Pattern::hole(), Pattern::hole()), n1)) {
            Context gl = gamma.extend(ts.left());
            Context gr = gamma.extend(ts.right());
            for (std::size_t n2 = 1; n1 + n2 + 2 <= n; ++n2) {
              auto ls = gen(gl, pm, n2);
              if (ls->empty()) continue;
              auto rs = gen(gr, pm, n - 1 - n1 - n2);
              for (const auto& [l, tl] : *ls)
                for (const auto& [r, tr] : *rs) out.emplace_back(Term::case_of(m, s, l, r), m);
            }
          }
        }
      }
    }
    return out;
  }
};

Enumerator::Enumerator(const Language& lang) : Enumerator(lang, enum_types(lang, 1)) {}

Enumerator::Enumerator(const Language& lang, std::vector<Type> pool)
    : lang_(lang), pool_(std::move(pool)), impl_(std::make_unique<Impl>(lang_, pool_)) {}

Enumerator::~Enumerator() = default;

void Enumerator::clear_cache() { impl_->memo.clear(); }

void Enumerator::visit(const Context& gamma, const Type& type, std::size_t size,
                       const std::function<void(const Term&)>& f) {
  for (std::size_t n = 1; n < size; ++n)
    for (const auto& [t, ty] : *impl_->gen(gamma, Pattern::of(type), n)) f(t);
  if (size == 0) return;
  auto top = impl_->build(gamma, Pattern::of(type), size);
  // the layer just below was filled mostly with partial patterns for this type
  if (size >= 2 && impl_->memo.size() >= size) impl_->memo[size - 1].clear();
  for (const auto& [t, ty] : top) f(t);
}

std::vector<Term> Enumerator::terms_of_size(const Context& gamma, const Type& type, std::size_t size) {
  std::vector<Term> out;
  for (const auto& [t, ty] : *impl_->gen(gamma, Pattern::of(type), size)) out.push_back(t);
  return out;
}

std::vector<Term> Enumerator::terms(const Context& gamma, const Type& type, std::size_t size) {
  std::vector<Term> out;
  for (std::size_t n = 1; n <= size; ++n) {
    auto part = terms_of_size(gamma, type, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::pair<Term, Type>> Enumerator::all_of_size(const Context& gamma, std::size_t size) {
  return *impl_->gen(gamma, Pattern::hole(), size);
}

std::vector<Term> enum_terms(const Language& lang, const Context& gamma, const Type& type, std::size_t size) {
  return Enumerator(lang).terms(gamma, type, size);
}

std::vector<Term> enum_nfs(const Language& lang, const Context& gamma, const Type& type, std::size_t size) {
  std::vector<Term> out;
  for (auto& t : enum_terms(lang, gamma, type, size))
    if (check_nf(lang, gamma, t, type)) out.push_back(std::move(t));
  return out;
}

}  // namespace stlc
