#pragma once

// Bounded, type-directed enumeration of well-typed terms.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stlc/syntax.hpp"

namespace stlc {

// Every type of constructor depth <= depth over the language's base types:
// first the bases, unit and empty, then each new level built with prod, sum
// and arr from pairs of earlier types.
std::vector<Type> enum_types(const Language& lang, std::size_t depth);

// A type with holes, used to ask for terms whose type is only partly known.
class Pattern;

// Enumerates the terms t with size(t) <= size, infer(gamma, t) = type and
// every annotation of t taken from `pool`. Results are memoised per
// (context, pattern, exact size), so one Enumerator should serve many
// queries over the same language and pool.
class Enumerator {
 public:
  // The pool defaults to enum_types(lang, 1).
  explicit Enumerator(const Language& lang);
  Enumerator(const Language& lang, std::vector<Type> pool);
  ~Enumerator();

  std::vector<Term> terms(const Context& gamma, const Type& type, std::size_t size);
  // Terms of exactly this size.
  std::vector<Term> terms_of_size(const Context& gamma, const Type& type, std::size_t size);
  // Every (term, type) of exactly this size, whatever its type.
  std::vector<std::pair<Term, Type>> all_of_size(const Context& gamma, std::size_t size);

  // Calls f on the same terms as terms(), size by size. The largest layer is
  // built without being memoised, which keeps big sweeps within memory.
  void visit(const Context& gamma, const Type& type, std::size_t size, const std::function<void(const Term&)>& f);

  const std::vector<Type>& pool() const { return pool_; }
  void clear_cache();

 private:
  struct Impl;
  Language lang_;
  std::vector<Type> pool_;
  std::unique_ptr<Impl> impl_;
};

std::vector<Term> enum_terms(const Language& lang, const Context& gamma, const Type& type, std::size_t size);
// The normal forms among enum_terms.
std::vector<Term> enum_nfs(const Language& lang, const Context& gamma, const Type& type, std::size_t size);

}  // namespace stlc
