#pragma once

// One-step reduction (beta rules plus commuting conversions), the full list
// of one-step reducts, a deterministic normalizer and a bounded joinability
// test.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlc/syntax.hpp"
#include "stlc/typing.hpp"

namespace stlc {

enum class RedexKind { PairBeta1, PairBeta2, FunBeta, InlBeta, InrBeta, CommRaise, CommCase };

std::string to_string(RedexKind kind);
std::optional<RedexKind> redex_kind_from_string(const std::string& name);

// A contraction of the redex at `path`; `result` is the whole rewritten term.
struct Reduct {
  RedexKind kind;
  Path path;
  Term result;
};

// The root contraction of t, if t is itself a redex. A term has at most one.
std::optional<std::pair<RedexKind, Term>> contract_root(const Term& t);

// Every one-step reduct: the root redex first, then the reducts of each child
// from left to right, recursively.
std::vector<Reduct> reducts(const Term& t);
bool has_redex(const Term& t);

// The first element of reducts(t), computed without building the others.
std::optional<Reduct> step(const Term& t);

// Contracts the redex of the given kind at `path`, or nullopt if there is none.
std::optional<Term> contract_at(const Term& t, RedexKind kind, const Path& path);

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::size_t fuel)
      : std::runtime_error("no normal form after " + std::to_string(fuel) + " steps") {}
};

constexpr std::size_t default_fuel = 10000;

// Repeats `step` until none applies. Each step taken is appended to `trace`.
Term normalize(const Term& t, std::size_t fuel = default_fuel, std::vector<Reduct>* trace = nullptr);
// Typed entry point: throws TypeError unless t is well typed in gamma.
Term normalize(const Language& lang, const Context& gamma, const Term& t, std::size_t fuel = default_fuel,
               std::vector<Reduct>* trace = nullptr);

// Whether t and u have a common reduct reachable in at most `bound` steps
// from each.
bool joinable(const Term& t, const Term& u, std::size_t bound);

}  // namespace stlc
