#include <gtest/gtest.h>

#include "support.hpp"

using namespace fmtest;

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(5);
  EXPECT_EQ(f.add(f.from_int(3), f.from_int(4)), f.from_int(2));
  EXPECT_EQ(f.mul(f.from_int(2), f.inv(f.from_int(2))), f.one());
  EXPECT_EQ(f.from_int(-1), f.from_int(4));
  EXPECT_THROW(f.inv(f.zero()), InvalidInput);
  EXPECT_THROW(f.from_fraction(1, 10), InvalidInput);
  EXPECT_EQ(f.from_fraction(1, 2), f.from_int(3));
}

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field::prime(1), InvalidInput);
  EXPECT_THROW(Field::prime(91), InvalidInput);
  EXPECT_THROW(Field::prime(2147483659ULL), InvalidInput);
  EXPECT_NO_THROW(Field::prime(2147483647ULL));
}

TEST(Field, InversesModLargePrime) {
  Field f = Field::prime(2147483647ULL);
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    Scalar a = f.random_nonzero(rng);
    EXPECT_TRUE(f.is_one(f.mul(a, f.inv(a))));
  }
}

TEST(MonomialOrder, LexWithYMostSignificant) {
  // x < y: y is read first.
  MonomialOrder ord(OrderKind::Lex, {1, 0});
  EXPECT_LT(sgn(ord.compare(Monomial{1, 0}, Monomial{1, 4})), 0);
  EXPECT_LT(sgn(ord.compare(Monomial{6, 0}, Monomial{0, 1})), 0);
}

TEST(MonomialOrder, Reflexive) {
  Rng rng(1);
  for (auto kind : {OrderKind::Lex, OrderKind::GRevLex}) {
    MonomialOrder ord = random_order(kind, 3, rng);
    EXPECT_EQ(sgn(ord.compare(Monomial{2, 0, 5}, Monomial{2, 0, 5})), 0);
  }
}

TEST(MonomialOrder, GRevLexTieBreak) {
  MonomialOrder ord(OrderKind::GRevLex, {1, 0});
  EXPECT_LT(sgn(ord.compare(Monomial{2, 3}, Monomial{1, 4})), 0);
  EXPECT_GT(sgn(ord.compare(Monomial{5, 0}, Monomial{0, 1})), 0);  // degree dominates
}

TEST(MonomialOrder, LengthMismatch) {
  EXPECT_THROW(MonomialOrder::lex(2).compare(Monomial{1, 2}, Monomial{1, 2, 3}), InvalidInput);
  EXPECT_THROW(MonomialOrder(OrderKind::Lex, {0, 0}), InvalidInput);
}

TEST(MonomialOrder, RandomPermutations) {
  Rng rng(7);
  EXPECT_EQ(random_order(OrderKind::Lex, 1, rng).permutation(), std::vector<std::size_t>{0});
  Rng a(42), b(42);
  EXPECT_EQ(random_order(OrderKind::GRevLex, 3, a), random_order(OrderKind::GRevLex, 3, b));
  int swapped = 0;
  for (int i = 0; i < 100; ++i) swapped += random_order(OrderKind::Lex, 2, rng).permutation()[0] == 1;
  EXPECT_GT(swapped, 0);
  EXPECT_LT(swapped, 100);
}

namespace {

Monomial random_monomial(Rng& rng, std::size_t n, unsigned maxe) {
  std::uniform_int_distribution<unsigned> e(0, maxe);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = e(rng);
  return Monomial(v);
}

}  // namespace

TEST(MonomialOrder, OrderAxioms) {
  Rng rng(11);
  for (int iter = 0; iter < 10000; ++iter) {
    const auto kind = iter % 2 ? OrderKind::Lex : OrderKind::GRevLex;
    MonomialOrder ord = random_order(kind, 4, rng);
    Monomial a = random_monomial(rng, 4, 3), b = random_monomial(rng, 4, 3), c = random_monomial(rng, 4, 3);
    auto ab = ord.compare(a, b), ba = ord.compare(b, a);
    ASSERT_EQ(ab == 0, ba == 0);
    ASSERT_EQ(ab < 0, ba > 0);
    ASSERT_EQ(ab == 0, a == b);
    if (ab < 0 && ord.compare(b, c) < 0) ASSERT_LT(sgn(ord.compare(a, c)), 0);
    ASSERT_EQ(sgn(ord.compare(a * c, b * c)), sgn(ab));
    ASSERT_LE(sgn(ord.compare(Monomial(4), a)), 0);
  }
}

TEST(MonomialOrder, GRevLexMatchesDefinitionOnTwoVariables) {
  // Brute force over all monomials of degree <= 5: degree first, then larger x-exponent is smaller when x is last.
  MonomialOrder ord(OrderKind::GRevLex, {1, 0});
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; a + b <= 5; ++b)
      for (unsigned c = 0; c <= 5; ++c)
        for (unsigned d = 0; c + d <= 5; ++d) {
          int expect = (a + b != c + d) ? ((a + b < c + d) ? -1 : 1) : (a == c ? 0 : (a > c ? -1 : 1));
          auto got = ord.compare(Monomial{a, b}, Monomial{c, d});
          ASSERT_EQ(got < 0 ? -1 : (got > 0 ? 1 : 0), expect);
        }
}

TEST(Monomial, ExponentOverflow) {
  Monomial big{65535};
  EXPECT_THROW(big * Monomial{1}, InvalidInput);
  EXPECT_THROW(Monomial({70000u}), InvalidInput);
}

TEST(Polynomial, Arithmetic) {
  auto r = qq({"x", "y"});
  Polynomial p = P(r, "x^2*y - 3*x + 7");
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_EQ(P(r, "x+y") * P(r, "x-y"), P(r, "x^2-y^2"));
  EXPECT_EQ(P(r, "x+1").pow(3), P(r, "x^3+3*x^2+3*x+1"));
  EXPECT_EQ(p.scale(r->field().from_int(2)), p + p);
  auto f5 = fp(5, {"x"});
  EXPECT_EQ(P(f5, "x+2") * P(f5, "x+3"), P(f5, "x^2+1"));
}

TEST(Polynomial, RingMismatch) {
  auto a = qq({"x"});
  auto b = qq({"y"});
  EXPECT_THROW(P(a, "x") + P(b, "y"), InvalidInput);
}

TEST(Polynomial, Derivatives) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(P(r, "x^2*y").derivative(0), P(r, "2*x*y"));
  EXPECT_TRUE(P(r, "17").derivative(1).is_zero());
  auto f5 = fp(5, {"x"});
  EXPECT_EQ(P(f5, "x^5+x^2").derivative(0), P(f5, "2*x"));
  EXPECT_THROW(P(r, "x").derivative(2), InvalidInput);
}

TEST(Polynomial, Evaluate) {
  auto r = fp(5, {"x", "y", "z"});
  const Field& F = r->field();
  std::vector<Scalar> pt{F.from_int(2), F.zero(), F.from_int(2)};
  EXPECT_EQ(P(r, "z^2*y - x*(x-z)*(x+z)").evaluate(pt), F.zero());
  EXPECT_EQ(P(r, "x^2+z^2").evaluate(pt), F.from_int(3));
  std::vector<Scalar> origin(3, F.zero());
  EXPECT_EQ(P(r, "x*y+4").evaluate(origin), F.from_int(4));
  EXPECT_THROW(P(r, "x").evaluate(std::vector<Scalar>{F.zero()}), InvalidInput);
}

TEST(Polynomial, ExtremalTerm) {
  auto r = qq({"x", "y"});
  MonomialOrder lex_x_lt_y(OrderKind::Lex, {1, 0});
  EXPECT_EQ(P(r, "x^2+y^2").extremal_term(lex_x_lt_y, Extremum::Smallest), P(r, "x^2"));
  EXPECT_EQ(P(r, "x*y+2*x").extremal_term(lex_x_lt_y, Extremum::Smallest), P(r, "2*x"));
  EXPECT_EQ(P(r, "5*x*y").extremal_term(lex_x_lt_y, Extremum::Largest), P(r, "5*x*y"));
  EXPECT_THROW(Polynomial(r).extremal_term(lex_x_lt_y, Extremum::Smallest), InvalidInput);
}

TEST(Polynomial, SmallestTermReplacementMatrix) {
  auto r = qq({"x", "y"});
  MonomialOrder ord(OrderKind::Lex, {1, 0});
  const char* entries[] = {"x^2 + y^2", "x*y + 2*x", "y^4 - x", "3*x^5", "x^3", "x^4*y^5 - y^8"};
  const char* smallest[] = {"x^2", "2*x", "-x", "3*x^5", "x^3", "x^4*y^5"};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(P(r, entries[i]).extremal_term(ord, Extremum::Smallest), P(r, smallest[i]));
}

TEST(Polynomial, CanonicalAndProperties) {
  Rng rng(5);
  for (auto ring : {qq({"x", "y", "z"}), fp(101, {"x", "y", "z"})}) {
    const Field& F = ring->field();
    for (int i = 0; i < 200; ++i) {
      Polynomial p = random_poly(ring, rng, 4, 5), q = random_poly(ring, rng, 4, 5);
      for (const Polynomial& s : {p + q, p * q, p - q}) {
        for (std::size_t k = 0; k < s.terms().size(); ++k) {
          ASSERT_FALSE(F.is_zero(s.terms()[k].coeff));
          if (k) ASSERT_GT(sgn(canonical_compare(s.terms()[k - 1].mono, s.terms()[k].mono)), 0);
        }
      }
      for (std::size_t v = 0; v < 3; ++v) ASSERT_EQ((p * q).derivative(v), p * q.derivative(v) + q * p.derivative(v));
      ASSERT_EQ((p + q).derivative(1), p.derivative(1) + q.derivative(1));
      std::vector<Scalar> a{F.random(rng), F.random(rng), F.random(rng)};
      ASSERT_EQ((p * q).evaluate(a), F.mul(p.evaluate(a), q.evaluate(a)));
      if (!p.is_zero()) {
        MonomialOrder ord = random_order(i % 2 ? OrderKind::Lex : OrderKind::GRevLex, 3, rng);
        Monomial lo = p.extremal_term(ord, Extremum::Smallest).terms()[0].mono;
        for (const auto& t : p.terms()) ASSERT_LE(sgn(ord.compare(lo, t.mono)), 0);
      }
    }
  }
}

TEST(Parse, Basics) {
  auto r = qq({"x", "y", "z"});
  Polynomial p = P(r, "x^2*y - 3*z");
  EXPECT_EQ(p.num_terms(), 2u);
  EXPECT_EQ(p, Polynomial::term(r, r->field().from_int(-3), Monomial{0, 0, 1}) +
                   Polynomial::term(r, r->field().one(), Monomial{2, 1, 0}));
  Polynomial q = P(r, "1403/60*x^6");
  ASSERT_EQ(q.num_terms(), 1u);
  EXPECT_EQ(q.terms()[0].coeff.rational(), mpq_class(1403, 60));
  EXPECT_EQ(P(r, "-(x+y)^2"), P(r, "-x^2-2*x*y-y^2"));
}

TEST(Parse, Errors) {
  auto r = qq({"x", "y"});
  EXPECT_THROW(P(r, "x +"), ParseError);
  EXPECT_THROW(P(r, "w"), ParseError);
  EXPECT_THROW(P(r, "1/0"), Error);
  EXPECT_THROW(P(fp(5, {"x"}), "x/5"), Error);
  try {
    P(r, "x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, RoundTrip) {
  Rng rng(9);
  for (auto ring : {qq({"x", "y", "z"}), fp(7, {"x", "y", "z"})}) {
    for (int i = 0; i < 200; ++i) {
      Polynomial p = random_poly(ring, rng, 5, 6);
      ASSERT_EQ(P(ring, p.to_string()), p) << p.to_string();
    }
  }
  auto r = qq({"x"});
  Polynomial frac = P(r, "1403/60*x^6 - 3/7");
  EXPECT_EQ(P(r, frac.to_string()), frac);
}
