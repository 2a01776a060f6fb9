#include "stlc/reduction.hpp"

#include <unordered_set>

#include "stlc/subst.hpp"

namespace stlc {

namespace {

constexpr const char* kind_names[] = {"PairBeta1", "PairBeta2", "FunBeta", "InlBeta",
                                      "InrBeta",   "CommRaise", "CommCase"};

// Result type of the elimination when its principal argument has type `head`.
std::optional<Type> retype(const Elimination& e, const Type& head) {
  switch (e.kind) {
    case ElimKind::App:
      if (!head.is(TypeKind::Arrow)) return std::nullopt;
      return head.right();
    case ElimKind::Proj:
      if (!head.is(TypeKind::Prod)) return std::nullopt;
      return e.component == 1 ? head.left() : head.right();
    case ElimKind::Case:
    case ElimKind::Raise: return e.type;
  }
  return std::nullopt;
}

// The elimination moved under one extra binder (a case branch).
Elimination shift_elim(const Elimination& e) {
  Elimination out = e;
  if (e.arg) out.arg = shift_free(*e.arg, 1);
  // Branches already bind their own variable, so only indices >= 1 move.
  if (e.left) out.left = shift_free(*e.left, 1, 1);
  if (e.right) out.right = shift_free(*e.right, 1, 1);
  return out;
}

void collect(const Term& t, Path& path, std::vector<Reduct>& out) {
  if (auto root = contract_root(t)) out.push_back({root->first, path, root->second});
  for (std::size_t i = 0; i < t.arity(); ++i) {
    const std::size_t first = out.size();
    path.push_back(i);
    collect(t.child(i), path, out);
    path.pop_back();
    for (std::size_t j = first; j < out.size(); ++j) out[j].result = t.with_child(i, out[j].result);
  }
}

std::optional<Reduct> first_redex(const Term& t, Path& path) {
  if (auto root = contract_root(t)) return Reduct{root->first, path, root->second};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    auto r = first_redex(t.child(i), path);
    path.pop_back();
    if (r) {
      r->result = t.with_child(i, r->result);
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(RedexKind kind) { return kind_names[static_cast<int>(kind)]; }

std::optional<RedexKind> redex_kind_from_string(const std::string& name) {
  for (int i = 0; i < 7; ++i)
    if (name == kind_names[i]) return static_cast<RedexKind>(i);
  return std::nullopt;
}

std::optional<std::pair<RedexKind, Term>> contract_root(const Term& t) {
  switch (t.kind()) {
    case TermKind::Proj:
      if (t.child(0).is(TermKind::Pair)) {
        const bool first = t.component() == 1;
        return std::pair{first ? RedexKind::PairBeta1 : RedexKind::PairBeta2, t.child(0).child(first ? 0 : 1)};
      }
      break;
    case TermKind::App:
      if (t.child(0).is(TermKind::Lam)) return std::pair{RedexKind::FunBeta, apply(one(t.child(1)), t.child(0).child(0))};
      break;
    case TermKind::Case:
      if (t.child(0).is(TermKind::Inl)) return std::pair{RedexKind::InlBeta, apply(one(t.child(0).child(0)), t.child(1))};
      if (t.child(0).is(TermKind::Inr)) return std::pair{RedexKind::InrBeta, apply(one(t.child(0).child(0)), t.child(2))};
      break;
    default: break;
  }
  auto split = unzip(t);
  if (!split) return std::nullopt;
  const auto& [e, head] = *split;
  if (head.is(TermKind::Raise)) {
    auto ty = retype(e, head.annotation());
    if (!ty) return std::nullopt;
    return std::pair{RedexKind::CommRaise, Term::raise(*ty, head.child(0))};
  }
  if (head.is(TermKind::Case)) {
    auto ty = retype(e, head.annotation());
    if (!ty) return std::nullopt;
    Elimination inner = shift_elim(e);
    return std::pair{RedexKind::CommCase,
                     Term::case_of(*ty, head.child(0), zip(inner, head.child(1)), zip(inner, head.child(2)))};
  }
  return std::nullopt;
}

std::vector<Reduct> reducts(const Term& t) {
  std::vector<Reduct> out;
  Path path;
  collect(t, path, out);
  return out;
}

bool has_redex(const Term& t) {
  if (contract_root(t)) return true;
  for (const auto& c : t.children())
    if (has_redex(c)) return true;
  return false;
}

std::optional<Reduct> step(const Term& t) {
  Path path;
  return first_redex(t, path);
}

std::optional<Term> contract_at(const Term& t, RedexKind kind, const Path& path) {
  std::vector<Term> spine{t};
  for (std::size_t i : path) {
    if (i >= spine.back().arity()) return std::nullopt;
    spine.push_back(spine.back().child(i));
  }
  auto root = contract_root(spine.back());
  if (!root || root->first != kind) return std::nullopt;
  Term out = root->second;
  for (std::size_t k = path.size(); k-- > 0;) out = spine[k].with_child(path[k], out);
  return out;
}

Term normalize(const Term& t, std::size_t fuel, std::vector<Reduct>* trace) {
  Term cur = t;
  for (std::size_t n = 0;; ++n) {
    auto r = step(cur);
    if (!r) return cur;
    if (n == fuel) throw FuelExhausted(fuel);
    cur = r->result;
    if (trace) trace->push_back(std::move(*r));
  }
}

Term normalize(const Language& lang, const Context& gamma, const Term& t, std::size_t fuel,
               std::vector<Reduct>* trace) {
  infer(lang, gamma, t);
  return normalize(t, fuel, trace);
}

namespace {

using TermSet = std::unordered_set<Term, TermHash>;

// All terms reachable from t in at most `bound` steps.
TermSet reachable(const Term& t, std::size_t bound) {
  TermSet seen{t};
  std::vector<Term> frontier{t};
  for (std::size_t d = 0; d < bound && !frontier.empty(); ++d) {
    std::vector<Term> next;
    for (const auto& x : frontier)
      for (auto& r : reducts(x))
        if (seen.insert(r.result).second) next.push_back(r.result);
    frontier = std::move(next);
  }
  return seen;
}

// The deterministic reduction sequence from t, at most `bound` steps long.
std::vector<Term> strategy_path(const Term& t, std::size_t bound) {
  std::vector<Term> out{t};
  for (std::size_t d = 0; d < bound; ++d) {
    auto r = step(out.back());
    if (!r) break;
    out.push_back(r->result);
  }
  return out;
}

}  // namespace

bool joinable(const Term& t, const Term& u, std::size_t bound) {
  if (t == u) return true;
  // Cheap witness first: the two strategy paths often meet.
  auto pt = strategy_path(t, bound);
  TermSet on_t(pt.begin(), pt.end());
  for (const auto& x : strategy_path(u, bound))
    if (on_t.count(x)) return true;
  TermSet rt = reachable(t, bound);
  TermSet ru = reachable(u, bound);
  const TermSet& small = rt.size() < ru.size() ? rt : ru;
  const TermSet& large = rt.size() < ru.size() ? ru : rt;
  for (const auto& x : small)
    if (large.count(x)) return true;
  return false;
}

}  // namespace stlc
