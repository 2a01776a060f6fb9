#pragma once

// Core syntax of the simply-typed lambda calculus with products, sums, unit
// and empty types. Types and terms are immutable, structurally shared trees;
// copying a Type or Term copies a pointer.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stlc {

enum class TypeKind : std::uint8_t { Base, Unit, Empty, Prod, Sum, Arrow };

class Type {
 public:
  static Type base(std::string name);
  static Type unit();
  static Type empty();
  static Type prod(Type left, Type right);
  static Type sum(Type left, Type right);
  static Type arrow(Type domain, Type codomain);

  TypeKind kind() const { return node_->kind; }
  bool is(TypeKind k) const { return node_->kind == k; }
  // Only meaningful for Base.
  const std::string& name() const { return node_->name; }
  // Components of Prod/Sum/Arrow. For Arrow, left() is the domain.
  const Type& left() const { return *node_->left; }
  const Type& right() const { return *node_->right; }

  // Arrow, Prod and Unit are negative; Base, Sum and Empty are positive.
  bool is_negative() const;
  bool is_positive() const { return !is_negative(); }

  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  // Base names occurring anywhere in the type.
  std::set<std::string> base_names() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  struct Node {
    TypeKind kind;
    std::string name;
    std::unique_ptr<Type> left;
    std::unique_ptr<Type> right;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Type make(TypeKind kind, std::string name, std::optional<Type> left,
                   std::optional<Type> right);

  std::shared_ptr<const Node> node_;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};

// A context, oldest binding first. De Bruijn index 0 denotes the last entry.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Type> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Type of the variable with de Bruijn index i, if bound.
  std::optional<Type> lookup(std::size_t index) const;
  // Context with one more binding, which becomes index 0.
  Context extend(Type type) const;
  const std::vector<Type>& entries() const { return entries_; }
  const Type& operator[](std::size_t position) const { return entries_[position]; }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Type> entries_;
};

// A language fixes the base types and the typed constants terms may mention.
class Language {
 public:
  Language() = default;

  // Throws std::invalid_argument on a duplicate constant or when the
  // constant's type mentions an undeclared base type.
  void add_base(const std::string& name);
  void add_constant(const std::string& name, Type type);

  const std::set<std::string>& base_types() const { return base_types_; }
  const std::map<std::string, Type>& constants() const { return constants_; }
  bool has_base(const std::string& name) const { return base_types_.count(name) > 0; }
  std::optional<Type> type_of(const std::string& constant) const;

  friend bool operator==(const Language&, const Language&) = default;

 private:
  std::set<std::string> base_types_;
  std::map<std::string, Type> constants_;
};

// True iff every base name in `type` belongs to the language.
bool vocab_closed(const Type& type, const Language& lang);

enum class TermKind : std::uint8_t { Var, Cst, Star, Pair, Proj, Lam, App, Raise, Inl, Inr, Case };

class Term {
 public:
  static Term var(std::size_t index);
  static Term cst(std::string name);
  static Term star();
  static Term pair(Term first, Term second);
  // component is 1 or 2.
  static Term proj(int component, Term of);
  static Term lam(Type domain, Term body);
  static Term app(Term fun, Term arg);
  static Term raise(Type result, Term of);
  static Term inl(Type sum, Term of);
  static Term inr(Type sum, Term of);
  static Term case_of(Type motive, Term scrutinee, Term left, Term right);

  TermKind kind() const { return node_->kind; }
  bool is(TermKind k) const { return node_->kind == k; }

  std::size_t index() const { return node_->index; }      // Var
  int component() const { return static_cast<int>(node_->index); }  // Proj
  const std::string& name() const { return node_->name; }  // Cst
  // Lam domain, Raise result, Inl/Inr sum type, Case motive.
  const Type& annotation() const { return *node_->annotation; }
  bool has_annotation() const { return node_->annotation != nullptr; }

  // Children in syntactic order: Pair(first, second), Proj(of), Lam(body),
  // App(fun, arg), Raise/Inl/Inr(of), Case(scrutinee, left, right).
  std::size_t arity() const { return node_->children.size(); }
  const Term& child(std::size_t i) const { return node_->children[i]; }
  const std::vector<Term>& children() const { return node_->children; }
  // Whether child i is under one extra binder (Lam body, Case branches).
  bool binds_in_child(std::size_t i) const;

  // Number of term nodes (annotations are not counted).
  std::size_t size() const { return node_->size; }
  // One more than the largest free de Bruijn index, 0 for closed terms.
  std::size_t free_bound() const { return node_->free_bound; }
  std::size_t hash() const { return node_->hash; }

  bool mentions_constant(const std::string& name) const;
  std::set<std::string> constants() const;

  // Same constructor and annotation with the given children.
  Term with_children(std::vector<Term> children) const;
  Term with_child(std::size_t i, Term child) const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    TermKind kind;
    std::size_t index = 0;
    std::string name;
    std::unique_ptr<Type> annotation;
    std::vector<Term> children;
    std::size_t size = 1;
    std::size_t free_bound = 0;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind kind, std::size_t index, std::string name, std::optional<Type> annotation,
                   std::vector<Term> children);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Eliminations: the term forms whose principal argument is a hole.
// Raise is included so that eliminating a non-neutral proof of empty commutes.
enum class ElimKind : std::uint8_t { App, Proj, Case, Raise };

struct Elimination {
  ElimKind kind = ElimKind::App;
  std::optional<Term> arg;    // App
  int component = 0;          // Proj
  std::optional<Type> type;   // Case motive, Raise result
  std::optional<Term> left;   // Case branches, each binding one variable
  std::optional<Term> right;

  static Elimination app(Term arg);
  static Elimination proj(int component);
  static Elimination case_of(Type motive, Term left, Term right);
  static Elimination raise(Type result);

  friend bool operator==(const Elimination&, const Elimination&) = default;
};

// Plugs `head` into the hole of `e`.
Term zip(const Elimination& e, const Term& head);

// Splits an elimination form into its elimination and principal subterm.
// Returns nullopt for terms that are not eliminations.
std::optional<std::pair<Elimination, Term>> unzip(const Term& t);

}  // namespace stlc
