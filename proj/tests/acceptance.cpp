// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "stlc/bidir.hpp"
#include "stlc/enumerate.hpp"
#include "stlc/interpolate.hpp"
#include "stlc/reduction.hpp"
#include "stlc/sexpr.hpp"
#include "stlc/subst.hpp"
#include "stlc/typing.hpp"
#include "stlc/vocab.hpp"

using namespace stlc;

namespace {

Type P() { return Type::base("P"); }
Type Q() { return Type::base("Q"); }
Type R() { return Type::base("R"); }

Language lang_pq() {
  Language l;
  l.add_base("P");
  l.add_base("Q");
  return l;
}

std::vector<Type> entry_types() {
  return {P(), Q(), Type::unit(), Type::empty(), Type::prod(P(), Q()), Type::sum(P(), Q()), Type::arrow(P(), Q())};
}

std::vector<Context> contexts_upto(std::size_t len) {
  std::vector<Context> out{Context()};
  std::vector<Context> layer{Context()};
  for (std::size_t n = 1; n <= len; ++n) {
    std::vector<Context> next;
    for (const auto& g : layer)
      for (const auto& a : entry_types()) next.push_back(g.extend(a));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::vector<Side>> all_tags(std::size_t n) {
  std::vector<std::vector<Side>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Side> tags;
    for (std::size_t i = 0; i < n; ++i) tags.push_back(mask >> i & 1 ? Side::Target : Side::Source);
    out.push_back(tags);
  }
  return out;
}

// Collects up to a few counterexamples for the report.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what();
  }
  bool ok() const { return failed == 0 && checked > 0; }
};

int failures = 0;

void report(int n, bool pass, const std::string& detail, double seconds) {
  std::printf("criterion %2d: %s  %s (%.1fs)\n", n, pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const Tally& t, const std::string& noun) {
  std::ostringstream os;
  os << t.checked << " " << noun;
  if (t.failed) os << ", " << t.failed << " failures, first: " << t.first;
  return os.str();
}

std::string show(const Context& g, const Term& t) { return "[" + print(g) + "] |- " + print(t); }

// Criteria 1 to 4 share one pass over the suite.
void suite_one() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang = lang_pq();
  const auto targets = enum_types(lang, 1);
  Tally progress, preservation, confluence, normalization;
  std::size_t terms = 0;

  // Annotations range over every type of depth <= 1, the enumerator default.
  for (const auto& g : contexts_upto(2)) {
    Enumerator en(lang);
    for (const auto& type : targets) {
      en.visit(g, type, 7, [&](const Term& t) {
        ++terms;
        auto rs = reducts(t);
        const bool nf = check_nf(lang, g, t, type);
        progress.check(rs.empty() == nf, [&] { return show(g, t); });
        for (const auto& r : rs) {
          auto got = try_infer(lang, g, r.result);
          preservation.check(got && *got == type, [&] { return show(g, t) + " to " + print(r.result); });
        }
        for (std::size_t i = 0; i < rs.size(); ++i)
          for (std::size_t j = i + 1; j < rs.size(); ++j)
            confluence.check(joinable(rs[i].result, rs[j].result, 20), [&] {
              return show(g, t) + " forks at " + path_to_string(rs[i].path) + " and " + path_to_string(rs[j].path);
            });
        bool normalized = false;
        try {
          normalized = check_nf(lang, g, normalize(t, default_fuel), type);
        } catch (const FuelExhausted&) {
        }
        normalization.check(normalized, [&] { return show(g, t); });
      });
    }
  }

  // The critical pair drawn for App over Case of Inl closes with one step on
  // the CommCase side.
  Context g({Type::arrow(P(), Q()), P()});
  Type S = Type::sum(P(), Q());
  Term bl = Term::var(2), br = Term::lam(P(), Term::var(1)), a = Term::var(0), u = Term::var(0);
  Term t = Term::app(Term::case_of(Type::arrow(P(), Q()), Term::inl(S, a), bl, br), u);
  auto rs = reducts(t);
  Term comm = Term::case_of(Q(), Term::inl(S, a), Term::app(bl, apply(Substitution::wk(), u)),
                            Term::app(br, apply(Substitution::wk(), u)));
  Term beta = Term::app(apply(one(a), bl), u);
  bool diagram = rs.size() == 2 && rs[0].kind == RedexKind::CommCase && rs[0].result == comm &&
                 rs[1].kind == RedexKind::InlBeta && rs[1].result == beta;
  bool one_step = false;
  for (const auto& r : reducts(comm)) one_step |= r.result == beta;

  const double secs = since(t0);
  std::string scope = std::to_string(terms) + " terms; ";
  report(1, progress.ok(), scope + summary(progress, "progress/normality checks"), secs);
  report(2, preservation.ok(), summary(preservation, "one-step reducts re-typed"), 0);
  report(3, confluence.ok() && diagram && one_step,
         summary(confluence, "forks joined within 20") + (diagram && one_step ? "; critical pair closes in one step"
                                                                                 : "; critical pair diagram FAILED"),
         0);
  report(4, normalization.ok(), summary(normalization, "normalizations within fuel 10000"), 0);
}

void eta_counterexample() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang = lang_pq();
  Context g = parse_context("(sum (b P) (b P)) (sum (b P) (b P)) (b P)");
  Term xy = parse_term("(case (b P) (var 2) (case (b P) (var 2) (var 2) (var 2)) (case (b P) (var 2) (var 2) (var 2)))");
  Term yx = parse_term("(case (b P) (var 1) (case (b P) (var 3) (var 2) (var 2)) (case (b P) (var 3) (var 2) (var 2)))");
  bool typed = check(lang, g, xy, P()) && check(lang, g, yx, P());
  Term a = normalize(lang, g, xy), b = normalize(lang, g, yx);
  bool distinct = !(a == b) && check_nf(lang, g, a, P()) && check_nf(lang, g, b, P());
  bool apart = !joinable(xy, yx, 8);
  report(5, typed && distinct && apart,
         std::string("normal forms ") + (distinct ? "distinct" : "EQUAL") + ", joinable(8) = " + (apart ? "false" : "true"),
         since(t0));
}

void interpolation_round_trip() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang = lang_pq();
  const auto targets = enum_types(lang, 1);
  Tally tally;
  std::size_t nfs = 0;
  for (const auto& g : contexts_upto(2)) {
    Enumerator en(lang);
    const auto tag_sets = all_tags(g.size());
    for (const auto& type : targets) {
      for (const auto& t : en.terms(g, type, 6)) {
        if (!check_nf(lang, g, t, type)) continue;
        ++nfs;
        for (const auto& tags : tag_sets) {
          std::string failure;
          try {
            Certificate c = certify(lang, g, tags, std::nullopt, t, type);
            Report rep = verify_certificate(c);
            for (const auto& cl : rep.clauses)
              if (!cl.pass && failure.empty()) failure = cl.name + " " + cl.detail;
            if (!(c.normal_form == t)) failure = "input was not kept as its own normal form";
          } catch (const std::exception& e) {
            failure = e.what();
          }
          tally.check(failure.empty(), [&] { return show(g, t) + " tags " + print_tags(tags) + ": " + failure; });
        }
      }
    }
  }
  report(6, tally.ok(), std::to_string(nfs) + " normal forms; " + summary(tally, "certificates verified"), since(t0));
}

void identity_golden() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang = lang_pq();
  Context g({P()});
  Certificate c = interpolate_term(lang, g, Term::var(0), P());
  Partition p = make_partition(g, {Side::Source});
  Term composed = compose(p, c.left, c.right);
  bool ok = c.mid == Type::arrow(Type::unit(), P()) && composed == parse_term("(app (lam unit (var 1)) star)") &&
            normalize(composed) == Term::var(0) && verify_certificate(c).all_pass();
  report(7, ok, "M = " + print(c.mid) + ", composed = " + print(composed), since(t0));
}

void currification() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang;
  for (const char* b : {"P", "Q", "R"}) lang.add_base(b);
  Context g({Type::arrow(P(), Type::arrow(Q(), R())), P(), Q()});
  Term t = Term::app(Term::app(Term::var(2), Term::var(1)), Term::var(0));
  Certificate c = certify(lang, g, parse_tags("stt"), std::nullopt, t, R());
  const Type& m = c.mid;
  bool shape = m.is(TypeKind::Arrow) && !m.right().is(TypeKind::Arrow) && m.left().is(TypeKind::Prod) &&
               m.left().left().is(TypeKind::Prod) && m.left().left().left() == Type::unit();
  // the components after unit interpolate the arguments a and b
  bool parts = shape && m.left().left().right() == Type::arrow(Type::unit(), P()) &&
               m.left().right() == Type::arrow(Type::unit(), Q()) && m.right() == R();
  report(8, shape && parts && verify_certificate(c).all_pass(), "M = " + print(m), since(t0));
}

void constants_theorem() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang = lang_pq();
  lang.add_constant("c", P());
  lang.add_constant("d", Q());
  const ConstTags tags{{"c", Side::Source}, {"d", Side::Target}};
  const VocabSets cs = vocab(P()), ct = vocab(Q());
  Tally tally;
  for (const auto& g : contexts_upto(1)) {
    Enumerator en(lang);
    for (const auto& type : entry_types()) {
      for (const auto& t : en.terms(g, type, 5)) {
        if (!t.mentions_constant("c") || !t.mentions_constant("d")) continue;
        std::string failure;
        try {
          Certificate cert = interpolate_with_constants(lang, tags, g, t, type);
          Report rep = verify_certificate(cert);
          if (!rep.all_pass()) failure = "verifier rejected the certificate";
          for (const auto& n : cert.left.constants())
            if (n != "c") failure = "l mentions " + n;
          for (const auto& n : cert.right.constants())
            if (n != "d") failure = "r mentions " + n;
          VocabSets m = vocab(cert.mid);
          VocabSets gv = vocab_ctx(g), tv = vocab(type);
          for (Polarity pol : {Polarity::Pos, Polarity::Neg}) {
            auto bound = set_intersection(set_union(gv.at(pol), cs.at(pol)), set_union(tv.at(pol), ct.at(pol)));
            if (!subset(m.at(pol), bound)) failure = "M = " + print(cert.mid) + " exceeds the stated bound";
          }
        } catch (const std::exception& e) {
          failure = e.what();
        }
        tally.check(failure.empty(), [&] { return show(g, t) + ": " + failure; });
      }
    }
  }
  report(9, tally.ok(), summary(tally, "certificates for terms mentioning c and d"), since(t0));
}

void substitution_laws() {
  const auto t0 = std::chrono::steady_clock::now();
  Language lang = lang_pq();
  std::vector<Term> terms;
  Enumerator en(lang, entry_types());
  for (const auto& g : {Context(), Context({P(), Q()}), Context({Type::sum(P(), Q()), Type::arrow(P(), Q())})})
    for (const auto& type : entry_types())
      for (const auto& t : en.terms(g, type, 6)) terms.push_back(t);
  std::vector<Term> images;
  for (const auto& t : terms)
    if (t.size() <= 3) images.push_back(t);
  for (std::size_t i = 0; i < 6; ++i) images.push_back(Term::var(i));

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> len(0, 5), shift(0, 4), pick(0, images.size() - 1);
  auto random_sub = [&] {
    std::vector<Term> prefix;
    for (std::size_t i = len(rng); i > 0; --i) prefix.push_back(images[pick(rng)]);
    return Substitution(std::move(prefix), shift(rng));
  };
  std::vector<Substitution> subs;
  for (int i = 0; i < 1000; ++i) subs.push_back(random_sub());

  Tally tally;
  const Substitution id = Substitution::id();
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const Substitution& s = subs[k];
    const Substitution& u = subs[(k + 1) % subs.size()];
    Substitution su = comp(s, u);
    Substitution eta = cons(comp(Substitution::wk(), s), s.at(0));
    Substitution left_id = comp(id, s), right_id = comp(s, id);
    for (std::size_t i = 0; i <= 10; ++i) {
      auto where = [&] { return "substitution " + std::to_string(k) + " index " + std::to_string(i); };
      tally.check(su.at(i) == apply(u, s.at(i)), where);
      tally.check(eta.at(i) == s.at(i), where);
      tally.check(left_id.at(i) == s.at(i) && right_id.at(i) == s.at(i), where);
      tally.check(apply(s, Term::var(i)) == s.at(i), where);
    }
  }
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const Term& t = terms[j];
    const Substitution& s = subs[j % subs.size()];
    const Substitution& u = subs[(j * 7 + 3) % subs.size()];
    tally.check(apply(id, t) == t, [&] { return "identity on " + print(t); });
    tally.check(apply(comp(s, u), t) == apply(u, apply(s, t)), [&] { return "composition on " + print(t); });
  }
  report(10, tally.ok(),
         std::to_string(subs.size()) + " substitutions, " + std::to_string(terms.size()) + " terms; " +
             summary(tally, "law instances"),
         since(t0));
}

}  // namespace

int main() {
  suite_one();
  eta_counterexample();
  interpolation_round_trip();
  identity_golden();
  currification();
  constants_theorem();
  substitution_laws();
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
