#include "stlc/vocab.hpp"

#include <algorithm>
#include <iterator>

namespace stlc {

void VocabSets::merge(const VocabSets& other) {
  pos.insert(other.pos.begin(), other.pos.end());
  neg.insert(other.neg.begin(), other.neg.end());
}

namespace {

void vocab_into(const Type& t, Polarity p, VocabSets& out) {
  switch (t.kind()) {
    case TypeKind::Base: out.at(p).insert(t.name()); break;
    case TypeKind::Unit:
    case TypeKind::Empty: break;
    case TypeKind::Prod:
    case TypeKind::Sum:
      vocab_into(t.left(), p, out);
      vocab_into(t.right(), p, out);
      break;
    case TypeKind::Arrow:
      vocab_into(t.left(), flip(p), out);
      vocab_into(t.right(), p, out);
      break;
  }
}

}  // namespace

VocabSets vocab(const Type& type) {
  VocabSets out;
  vocab_into(type, Polarity::Pos, out);
  return out;
}

VocabSets vocab_ctx(const Context& gamma) {
  VocabSets out;
  for (const auto& t : gamma.entries()) vocab_into(t, Polarity::Pos, out);
  return out;
}

VocabSets vocab_union(const VocabSets& a, const VocabSets& b) {
  VocabSets out = a;
  out.merge(b);
  return out;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<std::string> set_intersection(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

char side_char(Side s) { return s == Side::Source ? 's' : 't'; }

std::vector<Side> parse_tags(const std::string& text) {
  std::vector<Side> out;
  for (char c : text) {
    if (c == 's') out.push_back(Side::Source);
    else if (c == 't') out.push_back(Side::Target);
    else throw std::invalid_argument(std::string("bad tag letter '") + c + "', expected s or t");
  }
  return out;
}

std::string print_tags(const std::vector<Side>& tags) {
  std::string out;
  for (Side s : tags) out += side_char(s);
  return out;
}

Partition make_partition(const Context& gamma, const std::vector<Side>& tags) {
  if (gamma.size() != tags.size())
    throw std::invalid_argument("partition has " + std::to_string(tags.size()) + " tags for a context of length " +
                                std::to_string(gamma.size()));
  Partition p;
  p.gamma_ = gamma;
  p.tags_ = tags;
  std::vector<Type> src, tgt;
  std::vector<Term> rs, rt;
  const std::size_t n = gamma.size();
  // Walk from the newest entry so that prefix position k is sub-index k.
  for (std::size_t pos = n; pos-- > 0;) {
    Term full = Term::var(n - 1 - pos);
    if (tags[pos] == Side::Source) rs.push_back(full);
    else rt.push_back(full);
  }
  for (std::size_t pos = 0; pos < n; ++pos) (tags[pos] == Side::Source ? src : tgt).push_back(gamma[pos]);
  p.source_ = Context(std::move(src));
  p.target_ = Context(std::move(tgt));
  p.rho_s_ = Substitution(std::move(rs), n);
  p.rho_t_ = Substitution(std::move(rt), n);
  return p;
}

std::pair<Side, std::size_t> Partition::locate(std::size_t index) const {
  const std::size_t n = gamma_.size();
  if (index >= n) throw std::out_of_range("variable " + std::to_string(index) + " is not in the context");
  const std::size_t pos = n - 1 - index;
  const Side side = tags_[pos];
  std::size_t sub_index = 0;
  for (std::size_t q = pos + 1; q < n; ++q)
    if (tags_[q] == side) ++sub_index;
  return {side, sub_index};
}

Partition reverse(const Partition& p) {
  std::vector<Side> tags;
  for (Side s : p.tags()) tags.push_back(other(s));
  return make_partition(p.context(), tags);
}

Partition extend(const Partition& p, Side side, const Type& type) {
  std::vector<Side> tags = p.tags();
  tags.push_back(side);
  return make_partition(p.context().extend(type), tags);
}

}  // namespace stlc
