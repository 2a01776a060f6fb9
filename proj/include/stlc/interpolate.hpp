#pragma once

// Proof-relevant interpolation. Given a normal form t : T over a context
// split into a source and a target part, find a type M over the shared
// polarised vocabulary, a term l : M over the source part and a term r : T
// over the target part extended with x : M, such that substituting l for x
// in r reduces back to t.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlc/bidir.hpp"
#include "stlc/reduction.hpp"
#include "stlc/syntax.hpp"
#include "stlc/vocab.hpp"

namespace stlc {

using ConstTags = std::map<std::string, Side>;

class UntaggedConstant : public std::runtime_error {
 public:
  explicit UntaggedConstant(const std::string& name)
      : std::runtime_error("constant '" + name + "' has no side"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// l : M over the source part, r : T over the target part extended with M.
struct NfInterpolant {
  Type mid;
  Term left;
  Term right;
};

// `side` is the side of the head variable or constant. l : M lives over the
// other side, r : T over the head's side extended with M.
struct NeInterpolant {
  Side side;
  Type mid;
  Term left;
  Term right;
  Type type;
};

// Constants missing from `consts` (or all of them when it is null) count as
// source constants.
NfInterpolant interpolate_nf(const Language& lang, const Partition& p, const Term& t, const Type& type,
                             const ConstTags* consts = nullptr);
NeInterpolant interpolate_ne(const Language& lang, const Partition& p, const Term& t,
                             const ConstTags* consts = nullptr);

// r[l] placed over the full context.
Term compose(const Partition& p, const Term& left, const Term& right);
Term compose(const Partition& p, const NeInterpolant& ne);

struct Certificate {
  Language lang;
  Context context;
  std::vector<Side> tags;
  ConstTags const_tags;
  Term term;
  Type type;

  Type mid;
  Term left;
  Term right;

  Term normal_form;
  std::vector<Reduct> term_trace;      // term ->* normal_form
  Term composed;
  std::vector<Reduct> composed_trace;  // composed ->* normal_form
};

struct Clause {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::vector<Clause> clauses;
  bool all_pass() const;
  const Clause* find(const std::string& name) const;
};

// Clause names, in report order.
namespace clause {
inline const std::string input_typing = "input-typing";
inline const std::string left_typing = "left-typing";
inline const std::string right_typing = "right-typing";
inline const std::string vocab_pos = "vocabulary-positive";
inline const std::string vocab_neg = "vocabulary-negative";
inline const std::string term_trace = "term-trace";
inline const std::string normal = "normal-form";
inline const std::string composition = "composition";
inline const std::string composed_trace = "composed-trace";
inline const std::string constants = "constants";
}  // namespace clause

// The vocabulary available on each side: the sub-context's plus that of the
// constants tagged to that side.
VocabSets side_vocab(const Certificate& c, Side side);
// Upper bound for M at polarity p.
std::set<std::string> vocab_bound(const Certificate& c, Polarity p);

Report verify_certificate(const Certificate& c);

// Normalises t (recording the trace), interpolates the normal form over the
// tagged context and records the composition with its own trace. When
// `const_tags` is given it has to tag every constant of the language.
// Throws TypeError, FuelExhausted, UntaggedConstant, std::invalid_argument.
Certificate certify(const Language& lang, const Context& gamma, const std::vector<Side>& tags,
                    const std::optional<ConstTags>& const_tags, const Term& t, const Type& type,
                    std::size_t fuel = default_fuel);

// Whole context and every constant on the source side.
Certificate interpolate_term(const Language& lang, const Context& gamma, const Term& t, const Type& type,
                             std::size_t fuel = default_fuel);
// Whole context on the source side, constants split by const_tags.
Certificate interpolate_with_constants(const Language& lang, const ConstTags& const_tags, const Context& gamma,
                                       const Term& t, const Type& type, std::size_t fuel = default_fuel);

}  // namespace stlc
