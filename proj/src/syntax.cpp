#include "stlc/syntax.hpp"

#include <algorithm>
#include <functional>

namespace stlc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Type

Type Type::make(TypeKind kind, std::string name, std::optional<Type> left, std::optional<Type> right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash = mix(0x51ed27, static_cast<std::size_t>(kind));
  if (kind == TypeKind::Base) node->hash = mix(node->hash, std::hash<std::string>{}(name));
  node->name = std::move(name);
  if (left) {
    node->depth = 1 + std::max(left->depth(), right->depth());
    node->hash = mix(mix(node->hash, left->hash()), right->hash());
    node->left = std::make_unique<Type>(std::move(*left));
    node->right = std::make_unique<Type>(std::move(*right));
  }
  return Type(std::move(node));
}

Type Type::base(std::string name) { return make(TypeKind::Base, std::move(name), std::nullopt, std::nullopt); }

Type Type::unit() {
  static const Type t = make(TypeKind::Unit, "", std::nullopt, std::nullopt);
  return t;
}

Type Type::empty() {
  static const Type t = make(TypeKind::Empty, "", std::nullopt, std::nullopt);
  return t;
}

Type Type::prod(Type left, Type right) { return make(TypeKind::Prod, "", std::move(left), std::move(right)); }
Type Type::sum(Type left, Type right) { return make(TypeKind::Sum, "", std::move(left), std::move(right)); }
Type Type::arrow(Type domain, Type codomain) {
  return make(TypeKind::Arrow, "", std::move(domain), std::move(codomain));
}

bool Type::is_negative() const {
  return is(TypeKind::Arrow) || is(TypeKind::Prod) || is(TypeKind::Unit);
}

std::set<std::string> Type::base_names() const {
  std::set<std::string> out;
  std::function<void(const Type&)> go = [&](const Type& t) {
    switch (t.kind()) {
      case TypeKind::Base: out.insert(t.name()); break;
      case TypeKind::Unit:
      case TypeKind::Empty: break;
      default: go(t.left()); go(t.right());
    }
  };
  go(*this);
  return out;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Base: return a.name() == b.name();
    case TypeKind::Unit:
    case TypeKind::Empty: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

// ---------------------------------------------------------------------------
// Context and Language

std::optional<Type> Context::lookup(std::size_t index) const {
  if (index >= entries_.size()) return std::nullopt;
  return entries_[entries_.size() - 1 - index];
}

Context Context::extend(Type type) const {
  Context out = *this;
  out.entries_.push_back(std::move(type));
  return out;
}

void Language::add_base(const std::string& name) { base_types_.insert(name); }

void Language::add_constant(const std::string& name, Type type) {
  if (constants_.count(name)) throw std::invalid_argument("duplicate constant '" + name + "'");
  if (!vocab_closed(type, *this))
    throw std::invalid_argument("type of constant '" + name + "' mentions an undeclared base type");
  constants_.emplace(name, std::move(type));
}

std::optional<Type> Language::type_of(const std::string& constant) const {
  auto it = constants_.find(constant);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

bool vocab_closed(const Type& type, const Language& lang) {
  switch (type.kind()) {
    case TypeKind::Base: return lang.has_base(type.name());
    case TypeKind::Unit:
    case TypeKind::Empty: return true;
    default: return vocab_closed(type.left(), lang) && vocab_closed(type.right(), lang);
  }
}

// ---------------------------------------------------------------------------
// Term

Term Term::make(TermKind kind, std::size_t index, std::string name, std::optional<Type> annotation,
                std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->index = index;
  std::size_t h = mix(0x7e47, static_cast<std::size_t>(kind));
  h = mix(h, index);
  if (kind == TermKind::Cst) h = mix(h, std::hash<std::string>{}(name));
  if (annotation) {
    h = mix(h, annotation->hash());
    node->annotation = std::make_unique<Type>(std::move(*annotation));
  }
  node->name = std::move(name);
  if (kind == TermKind::Var) node->free_bound = index + 1;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Term& c = children[i];
    h = mix(h, c.hash());
    node->size += c.size();
    const bool binds = kind == TermKind::Lam || (kind == TermKind::Case && i > 0);
    std::size_t fb = c.free_bound();
    if (binds) fb = fb > 0 ? fb - 1 : 0;
    node->free_bound = std::max(node->free_bound, fb);
  }
  node->hash = h;
  node->children = std::move(children);
  return Term(std::move(node));
}

Term Term::var(std::size_t index) { return make(TermKind::Var, index, "", std::nullopt, {}); }
Term Term::cst(std::string name) { return make(TermKind::Cst, 0, std::move(name), std::nullopt, {}); }
Term Term::star() {
  static const Term t = make(TermKind::Star, 0, "", std::nullopt, {});
  return t;
}
Term Term::pair(Term first, Term second) {
  return make(TermKind::Pair, 0, "", std::nullopt, {std::move(first), std::move(second)});
}
Term Term::proj(int component, Term of) {
  if (component != 1 && component != 2) throw std::invalid_argument("projection component must be 1 or 2");
  return make(TermKind::Proj, static_cast<std::size_t>(component), "", std::nullopt, {std::move(of)});
}
Term Term::lam(Type domain, Term body) {
  return make(TermKind::Lam, 0, "", std::move(domain), {std::move(body)});
}
Term Term::app(Term fun, Term arg) {
  return make(TermKind::App, 0, "", std::nullopt, {std::move(fun), std::move(arg)});
}
Term Term::raise(Type result, Term of) {
  return make(TermKind::Raise, 0, "", std::move(result), {std::move(of)});
}
Term Term::inl(Type sum, Term of) {
  if (!sum.is(TypeKind::Sum)) throw std::invalid_argument("inl annotation must be a sum type");
  return make(TermKind::Inl, 0, "", std::move(sum), {std::move(of)});
}
Term Term::inr(Type sum, Term of) {
  if (!sum.is(TypeKind::Sum)) throw std::invalid_argument("inr annotation must be a sum type");
  return make(TermKind::Inr, 0, "", std::move(sum), {std::move(of)});
}
Term Term::case_of(Type motive, Term scrutinee, Term left, Term right) {
  return make(TermKind::Case, 0, "", std::move(motive),
              {std::move(scrutinee), std::move(left), std::move(right)});
}

bool Term::binds_in_child(std::size_t i) const {
  return is(TermKind::Lam) || (is(TermKind::Case) && i > 0);
}

bool Term::mentions_constant(const std::string& name) const {
  if (is(TermKind::Cst)) return this->name() == name;
  return std::any_of(children().begin(), children().end(),
                     [&](const Term& c) { return c.mentions_constant(name); });
}

std::set<std::string> Term::constants() const {
  std::set<std::string> out;
  std::function<void(const Term&)> go = [&](const Term& t) {
    if (t.is(TermKind::Cst)) out.insert(t.name());
    for (const auto& c : t.children()) go(c);
  };
  go(*this);
  return out;
}

Term Term::with_children(std::vector<Term> children) const {
  std::optional<Type> ann;
  if (has_annotation()) ann = annotation();
  return make(kind(), node_->index, node_->name, std::move(ann), std::move(children));
}

Term Term::with_child(std::size_t i, Term child) const {
  std::vector<Term> cs = children();
  cs[i] = std::move(child);
  return with_children(std::move(cs));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.index != y.index || x.size != y.size) return false;
  if (x.name != y.name) return false;
  if ((x.annotation == nullptr) != (y.annotation == nullptr)) return false;
  if (x.annotation && !(*x.annotation == *y.annotation)) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!(x.children[i] == y.children[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Eliminations

Elimination Elimination::app(Term arg) {
  Elimination e;
  e.kind = ElimKind::App;
  e.arg = std::move(arg);
  return e;
}

Elimination Elimination::proj(int component) {
  Elimination e;
  e.kind = ElimKind::Proj;
  e.component = component;
  return e;
}

Elimination Elimination::case_of(Type motive, Term left, Term right) {
  Elimination e;
  e.kind = ElimKind::Case;
  e.type = std::move(motive);
  e.left = std::move(left);
  e.right = std::move(right);
  return e;
}

Elimination Elimination::raise(Type result) {
  Elimination e;
  e.kind = ElimKind::Raise;
  e.type = std::move(result);
  return e;
}

Term zip(const Elimination& e, const Term& head) {
  switch (e.kind) {
    case ElimKind::App: return Term::app(head, *e.arg);
    case ElimKind::Proj: return Term::proj(e.component, head);
    case ElimKind::Case: return Term::case_of(*e.type, head, *e.left, *e.right);
    case ElimKind::Raise: return Term::raise(*e.type, head);
  }
  throw std::logic_error("unreachable elimination kind");
}

std::optional<std::pair<Elimination, Term>> unzip(const Term& t) {
  switch (t.kind()) {
    case TermKind::App: return std::pair{Elimination::app(t.child(1)), t.child(0)};
    case TermKind::Proj: return std::pair{Elimination::proj(t.component()), t.child(0)};
    case TermKind::Case:
      return std::pair{Elimination::case_of(t.annotation(), t.child(1), t.child(2)), t.child(0)};
    case TermKind::Raise: return std::pair{Elimination::raise(t.annotation()), t.child(0)};
    default: return std::nullopt;
  }
}

}  // namespace stlc
