#pragma once

// Bidirectional classification: neutral terms infer their type, normal terms
// are checked against one.

#include <optional>
#include <stdexcept>

#include "stlc/syntax.hpp"

namespace stlc {

class NotNeutral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNormal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Type of a neutral term (a chain of applications and projections headed by
// a variable or constant, with normal arguments), nullopt otherwise.
std::optional<Type> infer_ne(const Language& lang, const Context& gamma, const Term& t);
// Throwing variant.
Type infer_ne_or_throw(const Language& lang, const Context& gamma, const Term& t);

// Whether t is a normal form of type `type`. Annotations must agree with the
// type being checked.
bool check_nf(const Language& lang, const Context& gamma, const Term& t, const Type& type);

}  // namespace stlc
