#include "stlc/interpolate.hpp"

#include "stlc/sexpr.hpp"
#include "stlc/subst.hpp"
#include "stlc/typing.hpp"

namespace stlc {

namespace {

Term proj1(Term t) { return Term::proj(1, std::move(t)); }
Term proj2(Term t) { return Term::proj(2, std::move(t)); }
Term wk(const Term& t) { return shift_free(t, 1); }

// Renaming Gamma.A -> Gamma.X.A: the newest variable stays, the rest skip X.
Term skip_second(const Term& t) { return apply(Substitution({Term::var(0)}, 2), t); }

// Interpolation state: the partition and the orientation of the constants.
// Reversing the partition also swaps which constants count as source.
class Interpolator {
 public:
  Interpolator(const Language& lang, const ConstTags* consts, bool flipped)
      : lang_(lang), consts_(consts), flipped_(flipped) {}

  Interpolator reversed() const { return Interpolator(lang_, consts_, !flipped_); }

  Side side_of_constant(const std::string& name) const {
    Side s = Side::Source;
    if (consts_) {
      auto it = consts_->find(name);
      if (it != consts_->end()) s = it->second;
    }
    return flipped_ ? other(s) : s;
  }

  NeInterpolant ne(const Partition& p, const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var: {
        auto [side, k] = p.locate(t.index());
        return {side, Type::unit(), Term::star(), Term::var(k + 1), *p.context().lookup(t.index())};
      }
      case TermKind::Cst: {
        auto ty = lang_.type_of(t.name());
        if (!ty) throw NotNeutral("unknown constant '" + t.name() + "'");
        return {side_of_constant(t.name()), Type::unit(), Term::star(), t, *ty};
      }
      case TermKind::Proj: {
        NeInterpolant h = ne(p, t.child(0));
        if (!h.type.is(TypeKind::Prod)) throw NotNeutral("projection of a non-product: " + print(t));
        h.right = Term::proj(t.component(), h.right);
        h.type = t.component() == 1 ? h.type.left() : h.type.right();
        return h;
      }
      case TermKind::App: {
        NeInterpolant h = ne(p, t.child(0));
        if (!h.type.is(TypeKind::Arrow)) throw NotNeutral("application of a non-function: " + print(t));
        // The argument's source is the head's other side.
        NfInterpolant u = h.side == Side::Source ? reversed().nf(reverse(p), t.child(1), h.type.left())
                                                  : nf(p, t.child(1), h.type.left());
        NeInterpolant out{h.side, Type::prod(h.mid, u.mid), Term::pair(h.left, u.left),
                          Term::app(apply(tip(proj1), h.right), apply(tip(proj2), u.right)), h.type.right()};
        return out;
      }
      default: throw NotNeutral("not a neutral term: " + print(t));
    }
  }

  NfInterpolant nf(const Partition& p, const Term& t, const Type& type) const {
    switch (t.kind()) {
      case TermKind::Star: return {Type::unit(), Term::star(), Term::star()};
      case TermKind::Pair: {
        NfInterpolant a = nf(p, t.child(0), type.left());
        NfInterpolant b = nf(p, t.child(1), type.right());
        return {Type::prod(a.mid, b.mid), Term::pair(a.left, b.left),
                Term::pair(apply(tip(proj1), a.right), apply(tip(proj2), b.right))};
      }
      case TermKind::Lam: {
        const Type& dom = t.annotation();
        NfInterpolant b = nf(extend(p, Side::Target, dom), t.child(0), type.right());
        return {b.mid, b.left, Term::lam(dom, apply(swap01(), b.right))};
      }
      case TermKind::Inl:
      case TermKind::Inr: {
        const Type& sum = t.annotation();
        const bool left = t.is(TermKind::Inl);
        NfInterpolant a = nf(p, t.child(0), left ? sum.left() : sum.right());
        return {a.mid, a.left, left ? Term::inl(sum, a.right) : Term::inr(sum, a.right)};
      }
      case TermKind::Raise: {
        NeInterpolant h = ne(p, t.child(0));
        const Type& result = t.annotation();
        if (h.side == Side::Target) return {h.mid, h.left, Term::raise(result, h.right)};
        return {Type::arrow(h.mid, Type::empty()), Term::lam(h.mid, h.right),
                Term::raise(result, Term::app(Term::var(0), wk(h.left)))};
      }
      case TermKind::Case: return case_of(p, t);
      default: {
        NeInterpolant h = ne(p, t);
        if (h.side == Side::Target) return {h.mid, h.left, h.right};
        return {Type::arrow(h.mid, h.type), Term::lam(h.mid, h.right), Term::app(Term::var(0), wk(h.left))};
      }
    }
  }

 private:
  NfInterpolant case_of(const Partition& p, const Term& t) const {
    const Type& motive = t.annotation();
    NeInterpolant s = ne(p, t.child(0));
    if (!s.type.is(TypeKind::Sum)) throw NotNormal("case on a non-sum: " + print(t));
    const Type& a = s.type.left();
    const Type& b = s.type.right();
    if (s.side == Side::Target) {
      // The branch variables join the target side.
      NfInterpolant l = nf(extend(p, Side::Target, a), t.child(1), motive);
      NfInterpolant r = nf(extend(p, Side::Target, b), t.child(2), motive);
      Type mid = Type::prod(Type::prod(s.mid, l.mid), r.mid);
      Term left = Term::pair(Term::pair(s.left, l.left), r.left);
      Substitution into_l({proj2(proj1(Term::var(1))), Term::var(0)}, 2);
      Substitution into_r({proj2(Term::var(1)), Term::var(0)}, 2);
      Term scrut = apply(tip([](const Term& z) { return proj1(proj1(z)); }), s.right);
      return {mid, left, Term::case_of(motive, scrut, apply(into_l, l.right), apply(into_r, r.right))};
    }
    // Source head: the branch variables join the source side and l does the
    // case analysis, handing its outcome to r as a sum.
    NfInterpolant l = nf(extend(p, Side::Source, a), t.child(1), motive);
    NfInterpolant r = nf(extend(p, Side::Source, b), t.child(2), motive);
    Type sum = Type::sum(l.mid, r.mid);
    Type mid = Type::arrow(s.mid, sum);
    Term left = Term::lam(s.mid, Term::case_of(sum, s.right, Term::inl(sum, skip_second(l.left)),
                                               Term::inr(sum, skip_second(r.left))));
    Term right = Term::case_of(motive, Term::app(Term::var(0), wk(s.left)), skip_second(l.right),
                               skip_second(r.right));
    return {mid, left, right};
  }

  const Language& lang_;
  const ConstTags* consts_;
  bool flipped_;
};

Language restrict_constants(const Language& lang, const ConstTags& tags, Side side) {
  Language out;
  for (const auto& b : lang.base_types()) out.add_base(b);
  for (const auto& [name, ty] : lang.constants()) {
    auto it = tags.find(name);
    if ((it == tags.end() ? Side::Source : it->second) == side) out.add_constant(name, ty);
  }
  return out;
}

std::string names(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

// Replays `trace` from `from`, requiring every recorded step to be exactly a
// contraction of the previous term and the last term to equal `to`.
std::optional<std::string> replay(const Term& from, const std::vector<Reduct>& trace, const Term& to) {
  Term cur = from;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto next = contract_at(cur, trace[i].kind, trace[i].path);
    if (!next) return "step " + std::to_string(i) + ": no " + to_string(trace[i].kind) + " redex at " +
                      path_to_string(trace[i].path);
    if (!(*next == trace[i].result)) return "step " + std::to_string(i) + ": recorded term differs";
    cur = *next;
  }
  if (!(cur == to)) return "trace ends at " + print(cur) + ", not at the normal form";
  return std::nullopt;
}

}  // namespace

NfInterpolant interpolate_nf(const Language& lang, const Partition& p, const Term& t, const Type& type,
                             const ConstTags* consts) {
  if (!check_nf(lang, p.context(), t, type)) throw NotNormal("not a normal form of type " + print(type) + ": " + print(t));
  return Interpolator(lang, consts, false).nf(p, t, type);
}

NeInterpolant interpolate_ne(const Language& lang, const Partition& p, const Term& t, const ConstTags* consts) {
  infer_ne_or_throw(lang, p.context(), t);
  return Interpolator(lang, consts, false).ne(p, t);
}

Term compose(const Partition& p, const Term& left, const Term& right) {
  return apply(cons(p.renaming(Side::Target), apply(p.renaming(Side::Source), left)), right);
}

Term compose(const Partition& p, const NeInterpolant& ne) {
  const Side h = ne.side;
  return apply(cons(p.renaming(h), apply(p.renaming(other(h)), ne.left)), ne.right);
}

bool Report::all_pass() const {
  for (const auto& c : clauses)
    if (!c.pass) return false;
  return true;
}

const Clause* Report::find(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

VocabSets side_vocab(const Certificate& c, Side side) {
  Partition p = make_partition(c.context, c.tags);
  VocabSets out = vocab_ctx(p.sub(side));
  for (const auto& [name, ty] : c.lang.constants()) {
    auto it = c.const_tags.find(name);
    if ((it == c.const_tags.end() ? Side::Source : it->second) == side) out.merge(vocab(ty));
  }
  return out;
}

std::set<std::string> vocab_bound(const Certificate& c, Polarity pol) {
  VocabSets vs = side_vocab(c, Side::Source);
  VocabSets vt = side_vocab(c, Side::Target);
  VocabSets vT = vocab(c.type);
  return set_intersection(vs.at(pol), set_union(vt.at(flip(pol)), vT.at(pol)));
}

Report verify_certificate(const Certificate& c) {
  Report rep;
  auto add = [&](const std::string& name, bool pass, std::string detail = "") {
    rep.clauses.push_back({name, pass, std::move(detail)});
  };

  std::optional<Partition> p;
  try {
    p = make_partition(c.context, c.tags);
  } catch (const std::invalid_argument& e) {
    add(clause::input_typing, false, e.what());
    return rep;
  }

  auto typed = [&](const Language& lang, const Context& gamma, const Term& t, const Type& want) -> std::string {
    try {
      Type got = infer(lang, gamma, t);
      if (got == want) return "";
      return "has type " + print(got) + ", expected " + print(want);
    } catch (const TypeError& e) {
      return e.what();
    }
  };

  std::string in = typed(c.lang, c.context, c.term, c.type);
  add(clause::input_typing, in.empty(), in);

  Language src = restrict_constants(c.lang, c.const_tags, Side::Source);
  Language tgt = restrict_constants(c.lang, c.const_tags, Side::Target);
  bool mid_closed = vocab_closed(c.mid, c.lang);
  std::string lt = mid_closed ? typed(src, p->sub(Side::Source), c.left, c.mid) : "M uses undeclared base types";
  add(clause::left_typing, lt.empty(), lt);
  std::string rt = mid_closed ? typed(tgt, p->sub(Side::Target).extend(c.mid), c.right, c.type)
                              : "M uses undeclared base types";
  add(clause::right_typing, rt.empty(), rt);

  VocabSets vm = vocab(c.mid);
  for (Polarity pol : {Polarity::Pos, Polarity::Neg}) {
    auto bound = vocab_bound(c, pol);
    bool ok = subset(vm.at(pol), bound);
    add(pol == Polarity::Pos ? clause::vocab_pos : clause::vocab_neg, ok,
        "M " + names(vm.at(pol)) + " within " + names(bound));
  }

  auto tt = replay(c.term, c.term_trace, c.normal_form);
  add(clause::term_trace, !tt, tt.value_or(""));

  bool normal = !has_redex(c.normal_form) && check_nf(c.lang, c.context, c.normal_form, c.type);
  add(clause::normal, normal, normal ? "" : "recorded normal form is not normal at the input type");

  Term recomputed = compose(*p, c.left, c.right);
  bool same = recomputed == c.composed;
  add(clause::composition, same, same ? "" : "recorded composition differs from r[l]");

  auto ct = replay(recomputed, c.composed_trace, c.normal_form);
  add(clause::composed_trace, !ct, ct.value_or(""));

  std::string bad;
  for (const auto& name : c.left.constants())
    if (!src.type_of(name)) bad += " l mentions target constant " + name + ";";
  for (const auto& name : c.right.constants())
    if (!tgt.type_of(name)) bad += " r mentions source constant " + name + ";";
  add(clause::constants, bad.empty(), bad);
  return rep;
}

Certificate certify(const Language& lang, const Context& gamma, const std::vector<Side>& tags,
                    const std::optional<ConstTags>& const_tags, const Term& t, const Type& type, std::size_t fuel) {
  ConstTags ct;
  if (const_tags) {
    for (const auto& [name, side] : *const_tags)
      if (!lang.type_of(name)) throw std::invalid_argument("tag for unknown constant '" + name + "'");
    for (const auto& [name, ty] : lang.constants())
      if (!const_tags->count(name)) throw UntaggedConstant(name);
    ct = *const_tags;
  } else {
    for (const auto& [name, ty] : lang.constants()) ct[name] = Side::Source;
  }
  Partition p = make_partition(gamma, tags);
  Type got = infer(lang, gamma, t);
  if (!(got == type)) throw TypeError({}, "term has type " + print(got) + ", expected " + print(type));

  std::vector<Reduct> term_trace;
  Term nf = normalize(t, fuel, &term_trace);
  NfInterpolant it = interpolate_nf(lang, p, nf, type, &ct);
  Term composed = compose(p, it.left, it.right);
  std::vector<Reduct> composed_trace;
  normalize(composed, fuel, &composed_trace);
  return Certificate{lang,  gamma,           tags,     ct, t, type, it.mid, it.left, it.right, nf, std::move(term_trace),
                     composed, std::move(composed_trace)};
}

Certificate interpolate_term(const Language& lang, const Context& gamma, const Term& t, const Type& type,
                             std::size_t fuel) {
  return certify(lang, gamma, std::vector<Side>(gamma.size(), Side::Source), std::nullopt, t, type, fuel);
}

Certificate interpolate_with_constants(const Language& lang, const ConstTags& const_tags, const Context& gamma,
                                       const Term& t, const Type& type, std::size_t fuel) {
  return certify(lang, gamma, std::vector<Side>(gamma.size(), Side::Source), const_tags, t, type, fuel);
}

}  // namespace stlc
