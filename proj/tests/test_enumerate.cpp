#include <gtest/gtest.h>

#include <map>
#include <unordered_set>

#include "stlc/bidir.hpp"
#include "stlc/enumerate.hpp"
#include "stlc/reduction.hpp"
#include "stlc/typing.hpp"
#include "support.hpp"

using namespace stlc;
using namespace testing_support;

namespace {

// Every raw term of exactly size n with `scope` variables in scope and
// annotations from the pool, well typed or not.
std::vector<Term> raw_terms(const Language& lang, const std::vector<Type>& pool, std::size_t scope, std::size_t n) {
  std::vector<Term> out;
  if (n == 1) {
    for (std::size_t i = 0; i < scope; ++i) out.push_back(Term::var(i));
    for (const auto& [c, ty] : lang.constants()) out.push_back(Term::cst(c));
    out.push_back(Term::star());
    return out;
  }
  for (std::size_t k = 1; k + 1 < n; ++k)
    for (const auto& a : raw_terms(lang, pool, scope, k))
      for (const auto& b : raw_terms(lang, pool, scope, n - 1 - k)) {
        out.push_back(Term::pair(a, b));
        out.push_back(Term::app(a, b));
      }
  for (const auto& a : raw_terms(lang, pool, scope, n - 1)) {
    out.push_back(Term::proj(1, a));
    out.push_back(Term::proj(2, a));
    for (const auto& ty : pool) {
      out.push_back(Term::raise(ty, a));
      if (ty.is(TypeKind::Sum)) {
        out.push_back(Term::inl(ty, a));
        out.push_back(Term::inr(ty, a));
      }
    }
  }
  for (const auto& ty : pool)
    for (const auto& b : raw_terms(lang, pool, scope + 1, n - 1)) out.push_back(Term::lam(ty, b));
  for (std::size_t k = 1; k + 2 < n; ++k)
    for (std::size_t j = 1; k + j + 1 < n; ++j)
      for (const auto& s : raw_terms(lang, pool, scope, k))
        for (const auto& l : raw_terms(lang, pool, scope + 1, j))
          for (const auto& r : raw_terms(lang, pool, scope + 1, n - 1 - k - j))
            for (const auto& ty : pool) out.push_back(Term::case_of(ty, s, l, r));
  return out;
}

}  // namespace

TEST(EnumTypes, Examples) {
  Language p = lang_of({"P"});
  EXPECT_EQ(enum_types(p, 0), (std::vector<Type>{P(), Type::unit(), Type::empty()}));
  auto d1 = enum_types(p, 1);
  auto has = [&](const Type& t) { return std::find(d1.begin(), d1.end(), t) != d1.end(); };
  EXPECT_TRUE(has(Type::arrow(P(), P())));
  EXPECT_TRUE(has(Type::prod(P(), Type::unit())));
  EXPECT_TRUE(has(Type::sum(Type::empty(), P())));
  EXPECT_EQ(d1.size(), 30u);
  EXPECT_EQ(enum_types(lang_pq(), 1).size(), 52u);
  std::size_t last = 0;
  for (std::size_t d = 0; d <= 2; ++d) {
    auto ts = enum_types(p, d);
    EXPECT_GT(ts.size(), last);
    last = ts.size();
    std::unordered_set<Type, TypeHash> uniq(ts.begin(), ts.end());
    EXPECT_EQ(uniq.size(), ts.size());
    for (const auto& t : ts) EXPECT_LE(t.depth(), d);
  }
}

TEST(EnumTerms, Examples) {
  Language lang = lang_pq();
  EXPECT_EQ(enum_terms(lang, Context(), Type::unit(), 1), std::vector<Term>{Term::star()});
  EXPECT_EQ(enum_terms(lang, Context({P()}), P(), 1), std::vector<Term>{Term::var(0)});
  auto id = enum_terms(lang, Context(), Type::arrow(P(), P()), 3);
  EXPECT_NE(std::find(id.begin(), id.end(), trm("(lam (b P) (var 0))")), id.end());
}

TEST(EnumNfs, Examples) {
  Language lang = lang_pq();
  auto nfs = enum_nfs(lang, Context(), Type::unit(), 3);
  EXPECT_NE(std::find(nfs.begin(), nfs.end(), Term::star()), nfs.end());
  EXPECT_EQ(std::find(nfs.begin(), nfs.end(), trm("(app (lam unit (var 0)) star)")), nfs.end());
  // the redex has four nodes
  auto all = enum_terms(lang, Context(), Type::unit(), 4);
  EXPECT_NE(std::find(all.begin(), all.end(), trm("(app (lam unit (var 0)) star)")), all.end());
}

TEST(EnumNfs, AreExactlyTheTermsWithoutRedexes) {
  Language lang = lang_pq();
  for (const auto& g : small_contexts(1)) {
    for (const auto& type : enum_types(lang, 0)) {
      std::vector<Term> no_redex;
      for (const auto& t : enum_terms(lang, g, type, 4))
        if (reducts(t).empty()) no_redex.push_back(t);
      EXPECT_EQ(enum_nfs(lang, g, type, 4), no_redex);
    }
  }
}

TEST(EnumTerms, MatchesBruteForce) {
  Language lang = lang_of({"P"});
  lang.add_constant("c", Type::arrow(P(), P()));
  std::vector<Type> pool{P(), Type::unit(), Type::empty(), Type::sum(P(), Type::unit()), Type::arrow(P(), P())};
  Enumerator en(lang, pool);
  for (const auto& g : {Context(), Context({Type::sum(P(), Type::unit())}), Context({Type::empty(), P()})}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::map<std::string, std::set<std::string>> by_type;
      for (const auto& t : raw_terms(lang, pool, g.size(), n))
        if (auto ty = try_infer(lang, g, t)) by_type[print(*ty)].insert(print(t));
      std::size_t total = 0;
      for (const auto& [ty, want] : by_type) {
        auto got = en.terms_of_size(g, parse_type(ty), n);
        std::set<std::string> got_set;
        for (const auto& t : got) got_set.insert(print(t));
        EXPECT_EQ(got.size(), got_set.size()) << "duplicates at " << ty;
        EXPECT_EQ(got_set, want) << print(g) << " " << ty << " size " << n;
        total += got.size();
      }
      EXPECT_EQ(total, en.all_of_size(g, n).size());
    }
  }
}

TEST(EnumTerms, SoundAndStable) {
  Language lang = lang_pq();
  Context g({Type::sum(P(), Q()), Type::arrow(P(), Q())});
  for (const auto& type : entry_types()) {
    auto a = enum_terms(lang, g, type, 5);
    auto b = Enumerator(lang).terms(g, type, 5);
    EXPECT_EQ(a, b);
    std::unordered_set<Term, TermHash> uniq(a.begin(), a.end());
    EXPECT_EQ(uniq.size(), a.size());
    for (const auto& t : a) {
      EXPECT_EQ(infer(lang, g, t), type);
      EXPECT_LE(t.size(), 5u);
    }
  }
}

TEST(Enumerator, VisitAgreesWithTerms) {
  Language lang = lang_pq();
  Context g({Type::sum(P(), Q()), P()});
  Enumerator en(lang, entry_types());
  for (const auto& type : entry_types()) {
    std::vector<Term> seen;
    en.visit(g, type, 6, [&](const Term& t) { seen.push_back(t); });
    EXPECT_EQ(seen, en.terms(g, type, 6));
  }
}
