#include <gtest/gtest.h>

#include "support.hpp"

using namespace fmtest;

TEST(NormalForm, Examples) {
  auto r = qq({"x", "y"});
  auto ord = MonomialOrder::grevlex(2);
  EXPECT_TRUE(normal_form(P(r, "x*y-1"), {P(r, "x*y-1")}, ord).is_zero());
  EXPECT_EQ(normal_form(P(r, "x^2+1"), {P(r, "x^2")}, MonomialOrder::lex(2)), P(r, "1"));
}

TEST(NormalForm, RemainderIsIrreducibleAndDifferenceInIdeal) {
  Rng rng(4);
  auto r = fp(31, {"x", "y", "z"});
  auto ord = MonomialOrder::grevlex(3);
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> basis{random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)};
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    if (basis.empty()) continue;
    Polynomial p = random_poly(r, rng, 4, 6);
    Polynomial rem = normal_form(p, basis, ord);
    for (const auto& t : rem.terms())
      for (const auto& b : basis) ASSERT_FALSE(leading_monomial(b, ord).divides(t.mono));
    const auto gb = buchberger(basis, ord);
    ASSERT_TRUE(normal_form(p - rem, gb, ord).is_zero());
  }
}

TEST(Buchberger, Examples) {
  auto r = qq({"x", "y"});
  auto ord = MonomialOrder::grevlex(2);
  EXPECT_EQ(buchberger({P(r, "x")}, ord), std::vector<Polynomial>{P(r, "x")});
  auto gb = buchberger({P(r, "x^2+y^2"), P(r, "x^2-y^2")}, ord);
  EXPECT_TRUE(same_ideal(gb, {P(r, "x^2"), P(r, "y^2")}));
  EXPECT_EQ(gb.size(), 2u);
  EXPECT_EQ(buchberger({P(r, "x"), P(r, "x+1")}, ord), std::vector<Polynomial>{P(r, "1")});
}

TEST(Buchberger, ReducedMonicAndCorrect) {
  Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    auto r = i % 2 ? fp(101, {"x", "y", "z"}) : qq({"x", "y", "z"});
    MonomialOrder ord = random_order(i % 3 ? OrderKind::GRevLex : OrderKind::Lex, 3, rng);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 2, 3));
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    auto gb = buchberger(gens, ord);
    ASSERT_TRUE(is_groebner_of(gb, gens, ord));
    for (std::size_t a = 0; a < gb.size(); ++a) {
      const auto lead = gb[a].sorted_terms(ord).front();
      ASSERT_TRUE(r->field().is_one(lead.coeff));
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : gb[b].terms()) ASSERT_FALSE(lead.mono.divides(t.mono));
      }
    }
  }
}

TEST(Buchberger, Budget) {
  auto r = qq({"x", "y", "z"});
  std::vector<Polynomial> gens{P(r, "x^3-y*z"), P(r, "y^3-x*z"), P(r, "z^3-x*y"), P(r, "x*y*z-1")};
  EXPECT_THROW(buchberger(gens, MonomialOrder::lex(3), {.max_pairs = 1}), BudgetExceeded);
}

TEST(Ideal, UnitIdeal) {
  auto r = qq({"x", "y"});
  EXPECT_TRUE(is_unit_ideal(Ideal(r, {P(r, "x"), P(r, "y"), P(r, "1")})));
  EXPECT_FALSE(is_unit_ideal(Ideal(r, {P(r, "x"), P(r, "y")})));
  EXPECT_FALSE(is_unit_ideal(Ideal(r, {P(r, "y"), P(r, "-x")})));
  EXPECT_TRUE(is_unit_ideal(Ideal(r, {P(r, "x*y-1"), P(r, "x")})));
  EXPECT_FALSE(is_unit_ideal(Ideal::zero(r)));
}

TEST(Ideal, Membership) {
  auto r = qq({"x", "y"});
  Ideal i(r, {P(r, "x^2-y"), P(r, "x*y")});
  EXPECT_TRUE(i.contains(P(r, "y^2")));
  EXPECT_FALSE(i.contains(P(r, "y")));
  EXPECT_EQ(i.plus({P(r, "y")}).generators().size(), 3u);
}

TEST(Dimension, Examples) {
  auto r = qq({"x", "y", "z"});
  EXPECT_EQ(dim_quotient(Ideal::zero(r)), 3);
  EXPECT_EQ(dim_quotient(Ideal(r, {P(r, "x*y"), P(r, "y*z")})), 2);
  EXPECT_EQ(dim_quotient(Ideal(r, {P(r, "1")})), -1);
  EXPECT_EQ(codim_quotient(Ideal::zero(r)), 0);
  EXPECT_EQ(codim_quotient(Ideal(r, {P(r, "x-1"), P(r, "x")})), 4);
}

TEST(Dimension, RationalCurve) {
  Ideal i = rational_curve_ideal();
  EXPECT_EQ(dim_quotient(i), 3);
  EXPECT_EQ(codim_quotient(i), 4);
  EXPECT_EQ(RingPresentation(i).dimension(), 3);
  EXPECT_TRUE(is_groebner_of(i.groebner_basis(), i.generators(), MonomialOrder::grevlex(7)));
}

TEST(Dimension, OrderIndependent) {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    auto r = fp(101, {"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    const int k = 1 + i % 3;
    for (int j = 0; j < k; ++j) gens.push_back(random_poly(r, rng, 2, 2));
    Ideal ideal(r, gens);
    const int d = dim_quotient(ideal);
    ASSERT_EQ(dim_quotient(ideal, MonomialOrder::lex(4)), d);
    ASSERT_EQ(dim_quotient(ideal, random_order(OrderKind::GRevLex, 4, rng)), d);
  }
}

TEST(MonomialCodim, MatchesExhaustiveSearch) {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 12;
    std::vector<Monomial> mons;
    std::uniform_int_distribution<int> count(0, 8), bit(0, 3);
    const int k = count(rng);
    for (int j = 0; j < k; ++j) {
      std::vector<std::uint32_t> e(n, 0);
      for (auto& x : e) x = bit(rng) == 0 ? 1 : 0;
      if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) e[j % n] = 2;
      mons.emplace_back(e);
    }
    ASSERT_EQ(monomial_codim(mons, n), brute_cover(mons, n));
    ASSERT_EQ(monomial_dim(mons, n), static_cast<int>(n) - brute_cover(mons, n));
  }
}

TEST(CodimCheck, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(is_codim_at_least(1, Ideal(r, {P(r, "x*y")}), MonomialOrder::grevlex(2)), CodimCheck::Proven);
  EXPECT_EQ(is_codim_at_least(2, Ideal(r, {P(r, "x*y")}), MonomialOrder::grevlex(2)), CodimCheck::Inconclusive);
  MonomialOrder lex_y_gt_x(OrderKind::Lex, {1, 0});
  EXPECT_EQ(is_codim_at_least(2, Ideal(r, {P(r, "x"), P(r, "y+x^3")}), lex_y_gt_x), CodimCheck::Proven);
  EXPECT_EQ(is_codim_at_least(0, Ideal::zero(r), lex_y_gt_x), CodimCheck::Proven);
}

TEST(CodimCheck, SoundOnCorpus) {
  Rng rng(321);
  int proven = 0;
  for (int i = 0; i < 60; ++i) {
    auto r = fp(31, {"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    const int k = 1 + i % 4;
    for (int j = 0; j < k; ++j) gens.push_back(random_poly(r, rng, 2, 1 + j % 3));
    Ideal ideal(r, gens);
    const int codim = codim_quotient(ideal);
    for (int c = 0; c <= 5; ++c) {
      if (is_codim_at_least(c, ideal, MonomialOrder::grevlex(4)) == CodimCheck::Proven) {
        ASSERT_GE(codim, c);
        ++proven;
      }
    }
  }
  EXPECT_GT(proven, 60);
}

TEST(GroebnerEngine, IncrementalMatchesBatch) {
  Ideal i = rational_curve_ideal();
  auto ord = MonomialOrder::grevlex(7);
  GroebnerEngine engine(i.ring(), ord);
  engine.add_basis(i.groebner_basis());
  std::vector<Polynomial> extra{P(i.ring(), "x1"), P(i.ring(), "x2")};
  engine.add(extra);
  ASSERT_TRUE(engine.run(100000));
  auto all = i.generators();
  all.insert(all.end(), extra.begin(), extra.end());
  EXPECT_EQ(engine.reduced_basis(), buchberger(all, ord));
}
