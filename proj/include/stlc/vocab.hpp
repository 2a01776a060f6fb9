#pragma once

// Polarised vocabulary of types and contexts, and partitions of a context
// into a source and a target part.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlc/subst.hpp"
#include "stlc/syntax.hpp"

namespace stlc {

enum class Polarity { Pos, Neg };
inline Polarity flip(Polarity p) { return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos; }

struct VocabSets {
  std::set<std::string> pos;
  std::set<std::string> neg;

  const std::set<std::string>& at(Polarity p) const { return p == Polarity::Pos ? pos : neg; }
  std::set<std::string>& at(Polarity p) { return p == Polarity::Pos ? pos : neg; }
  void merge(const VocabSets& other);

  friend bool operator==(const VocabSets&, const VocabSets&) = default;
};

VocabSets vocab(const Type& type);
VocabSets vocab_ctx(const Context& gamma);
VocabSets vocab_union(const VocabSets& a, const VocabSets& b);

bool subset(const std::set<std::string>& a, const std::set<std::string>& b);
std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b);
std::set<std::string> set_intersection(const std::set<std::string>& a, const std::set<std::string>& b);

enum class Side { Source, Target };
inline Side other(Side s) { return s == Side::Source ? Side::Target : Side::Source; }
char side_char(Side s);

// Tag strings are words over {s, t}, one letter per context entry, oldest
// first. Throws std::invalid_argument on any other letter.
std::vector<Side> parse_tags(const std::string& text);
std::string print_tags(const std::vector<Side>& tags);

class Partition {
 public:
  const Context& context() const { return gamma_; }
  const std::vector<Side>& tags() const { return tags_; }
  const Context& sub(Side s) const { return s == Side::Source ? source_ : target_; }
  // Renaming from the sub-context of side s into the full context.
  const Substitution& renaming(Side s) const { return s == Side::Source ? rho_s_ : rho_t_; }

  // Side and sub-context index of the full-context variable `index`.
  std::pair<Side, std::size_t> locate(std::size_t index) const;

  friend Partition make_partition(const Context& gamma, const std::vector<Side>& tags);

 private:
  Partition() : rho_s_(Substitution::id()), rho_t_(Substitution::id()) {}

  Context gamma_;
  std::vector<Side> tags_;
  Context source_, target_;
  Substitution rho_s_, rho_t_;
};

// Throws std::invalid_argument when the lengths differ.
Partition make_partition(const Context& gamma, const std::vector<Side>& tags);
Partition reverse(const Partition& p);
Partition extend(const Partition& p, Side side, const Type& type);

}  // namespace stlc
