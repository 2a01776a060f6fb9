#pragma once

// Syntax-directed type inference for arbitrary (not necessarily normal)
// annotated terms.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlc/syntax.hpp"

namespace stlc {

// Sequence of child indices from the root of a term to one of its subterms.
using Path = std::vector<std::size_t>;

std::string path_to_string(const Path& path);

class TypeError : public std::runtime_error {
 public:
  TypeError(Path path, const std::string& what)
      : std::runtime_error(what + " at " + path_to_string(path)), path_(std::move(path)) {}
  const Path& path() const { return path_; }

 private:
  Path path_;
};

// The type of t in gamma. Throws TypeError naming the failing subterm.
Type infer(const Language& lang, const Context& gamma, const Term& t);
std::optional<Type> try_infer(const Language& lang, const Context& gamma, const Term& t);

bool check(const Language& lang, const Context& gamma, const Term& t, const Type& type);

}  // namespace stlc
